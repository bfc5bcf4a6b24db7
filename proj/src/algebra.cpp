#include "iceq/algebra.hpp"

#include <algorithm>

namespace iceq {

AlgebraElement AlgebraElement::term(const Path& p, const Rat& c) {
  AlgebraElement e;
  e.add(p, c);
  return e;
}

void AlgebraElement::add(const Path& p, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (const auto& [p, c] : o.terms_) r.add(p, -c);
  return r;
}

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
  AlgebraElement r;
  if (c.is_zero()) return r;
  for (const auto& [p, k] : terms_) r.terms_.emplace(p, k * c);
  return r;
}

Rat AlgebraElement::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

AlgebraElement mul(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r;
  for (const auto& [px, cx] : x.terms())
    for (const auto& [py, cy] : y.terms())
      if (auto p = q.compose(px, py)) r.add(*p, cx * cy);
  return r;
}

std::optional<Endpoints> element_endpoints(const Quiver& q, const AlgebraElement& x) {
  std::optional<Endpoints> ep;
  for (const auto& [p, c] : x.terms()) {
    Endpoints here{q.source(p), q.target(p)};
    if (!ep) {
      ep = here;
    } else if (ep->source != here.source || ep->target != here.target) {
      throw InputError("element is not endpoint-homogeneous");
    }
  }
  return ep;
}

bool element_homogeneous(const Quiver& q, const AlgebraElement& x, int* degree) {
  bool first = true;
  int deg = 0;
  for (const auto& [p, c] : x.terms()) {
    int d = q.path_degree(p);
    if (first) {
      deg = d;
      first = false;
    } else if (d != deg) {
      return false;
    }
  }
  if (degree && !first) *degree = deg;
  return true;
}

std::string element_str(const Quiver& q, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (!a.is_one()) out += a.str() + "*";
    out += q.path_str(p);
  }
  return out;
}

AlgebraElement loop_part(const Quiver& q, const AlgebraElement& x, int v) {
  AlgebraElement r;
  for (const auto& [p, c] : x.terms())
    if (q.source(p) == v && q.target(p) == v) r.add(p, c);
  return r;
}

Path canonical_rotation(const Quiver& q, const Path& cycle) {
  size_t n = cycle.length();
  if (n == 0) throw InputError("lazy path is not a cycle");
  auto name_seq = [&](const std::vector<int>& arrows) {
    std::vector<std::string> names;
    names.reserve(arrows.size());
    for (int a : arrows) names.push_back(q.arrow(a).name);
    return names;
  };
  std::vector<int> best = cycle.arrows;
  std::vector<std::string> best_names = name_seq(best);
  std::vector<int> cur = cycle.arrows;
  for (size_t k = 1; k < n; ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    auto names = name_seq(cur);
    if (names < best_names) {
      best = cur;
      best_names = names;
    }
  }
  Path r{q.arrow(best[0]).source, best};
  return r;
}

Potential Potential::make(const Quiver& q, const std::vector<std::pair<Rat, Path>>& cycles) {
  std::map<Path, Rat> acc;
  for (const auto& [c, p] : cycles) {
    if (c.is_zero()) continue;
    if (p.length() < 1) throw InputError("potential contains a lazy path");
    if (!q.valid_path(p)) throw InputError("potential contains a non-composable word");
    if (q.source(p) != q.target(p))
      throw InputError("potential contains a non-cycle (source != target)");
    Path canon = canonical_rotation(q, p);
    acc[canon] += c;
  }
  Potential w;
  for (const auto& [p, c] : acc)
    if (!c.is_zero()) w.terms_.emplace_back(c, p);
  return w;
}

AlgebraElement Potential::as_element() const {
  AlgebraElement e;
  for (const auto& [c, p] : terms_) e.add(p, c);
  return e;
}

AlgebraElement cyclic_derivative(const Quiver& q, int arrow, const Potential& w) {
  AlgebraElement r;
  for (const auto& [coeff, cycle] : w.terms()) {
    const auto& arr = cycle.arrows;
    size_t n = arr.size();
    for (size_t i = 0; i < n; ++i) {
      if (arr[i] != arrow) continue;
      // p = u a v with v = arr[0..i), u = arr(i..n); contributes vu,
      // i.e. u applied first: [arr(i+1..n), arr[0..i)].
      std::vector<int> vu;
      vu.insert(vu.end(), arr.begin() + i + 1, arr.end());
      vu.insert(vu.end(), arr.begin(), arr.begin() + i);
      Path p;
      if (vu.empty())
        p = q.lazy(q.arrow(arrow).target);
      else
        p = Path{q.arrow(vu[0]).source, vu};
      r.add(p, coeff);
    }
  }
  return r;
}

std::vector<BimoduleTerm> delta(const Quiver& q, int arrow, const AlgebraElement& x) {
  std::vector<BimoduleTerm> out;
  for (const auto& [p, c] : x.terms()) {
    if (q.path_degree(p) != 0)
      throw InputError("delta applies to degree-0 elements only");
    const auto& arr = p.arrows;
    for (size_t i = 0; i < arr.size(); ++i) {
      if (arr[i] != arrow) continue;
      Path right = i == 0 ? q.lazy(q.arrow(arrow).source)
                          : Path{p.source, {arr.begin(), arr.begin() + i}};
      Path left = i + 1 == arr.size()
                      ? q.lazy(q.arrow(arrow).target)
                      : Path{q.arrow(arr[i + 1]).source, {arr.begin() + i + 1, arr.end()}};
      out.push_back({c, left, arrow, right});
    }
  }
  return out;
}

}  // namespace iceq
