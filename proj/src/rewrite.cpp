#include "iceq/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace iceq {

PathOrder PathOrder::declaration_order(const Quiver& q) {
  PathOrder o;
  o.rank.resize(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) o.rank[i] = i;
  return o;
}

PathOrder PathOrder::from_names(const Quiver& q, const std::vector<std::string>& names) {
  if ((int)names.size() != q.num_arrows())
    throw InputError("arrow order must list every arrow exactly once");
  PathOrder o;
  o.rank.assign(q.num_arrows(), -1);
  for (int i = 0; i < (int)names.size(); ++i) {
    int a = q.require_arrow(names[i]);
    if (o.rank[a] != -1) throw InputError("arrow order lists '" + names[i] + "' twice");
    o.rank[a] = i;
  }
  return o;
}

bool PathOrder::less(const Path& a, const Path& b) const {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  for (size_t i = 0; i < a.arrows.size(); ++i)
    if (rank[a.arrows[i]] != rank[b.arrows[i]]) return rank[a.arrows[i]] < rank[b.arrows[i]];
  return a.source < b.source;
}

namespace {

bool subword_at(const Path& p, const Path& lead, size_t pos) {
  if (pos + lead.arrows.size() > p.arrows.size()) return false;
  for (size_t i = 0; i < lead.arrows.size(); ++i)
    if (p.arrows[pos + i] != lead.arrows[i]) return false;
  return true;
}

bool contains_subword(const Path& p, const Path& lead) {
  if (lead.arrows.size() > p.arrows.size()) return false;
  for (size_t pos = 0; pos + lead.arrows.size() <= p.arrows.size(); ++pos)
    if (subword_at(p, lead, pos)) return true;
  return false;
}

}  // namespace

std::optional<std::pair<size_t, size_t>> RewritingSystem::find_redex(const Path& p,
                                                                     ReduceStrategy s) const {
  if (p.is_lazy()) return std::nullopt;
  if (s == ReduceStrategy::LeftmostLowestRule) {
    for (size_t pos = 0; pos < p.arrows.size(); ++pos)
      for (size_t r = 0; r < rules_.size(); ++r)
        if (subword_at(p, rules_[r].lead, pos)) return std::make_pair(r, pos);
  } else {
    for (size_t pos = p.arrows.size(); pos-- > 0;)
      for (size_t r = rules_.size(); r-- > 0;)
        if (subword_at(p, rules_[r].lead, pos)) return std::make_pair(r, pos);
  }
  return std::nullopt;
}

bool RewritingSystem::is_irreducible(const Path& p) const {
  return !find_redex(p, ReduceStrategy::LeftmostLowestRule).has_value();
}

AlgebraElement RewritingSystem::apply_rule(const Path& p, size_t rule, size_t pos) const {
  const Rule& r = rules_[rule];
  size_t len = r.lead.arrows.size();
  AlgebraElement out;
  for (const auto& [t, c] : r.tail.terms()) {
    std::vector<int> arrows;
    arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.begin() + (long)pos);
    arrows.insert(arrows.end(), t.arrows.begin(), t.arrows.end());
    arrows.insert(arrows.end(), p.arrows.begin() + (long)(pos + len), p.arrows.end());
    Path np = arrows.empty() ? q_.lazy(p.source) : Path{p.source, arrows};
    out.add(np, c);
  }
  return out;
}

AlgebraElement RewritingSystem::reduce(const AlgebraElement& x, ReduceStrategy s) const {
  AlgebraElement cur = x;
  for (;;) {
    bool changed = false;
    for (const auto& [p, c] : cur.terms()) {
      auto redex = find_redex(p, s);
      if (!redex) continue;
      AlgebraElement replaced = apply_rule(p, redex->first, redex->second).scaled(c);
      AlgebraElement next = cur;
      next.add(p, -c);
      next = next + replaced;
      cur = next;
      changed = true;
      break;
    }
    if (!changed) return cur;
  }
}

int default_degree_bound(const std::vector<AlgebraElement>& relations, int requested) {
  size_t longest = 0;
  for (const auto& r : relations)
    for (const auto& [p, c] : r.terms()) longest = std::max(longest, p.length());
  int base = std::max(12, (int)(3 * longest));
  return std::max(requested, base);
}

RewritingSystem complete_rewriting(const Quiver& q, const std::vector<AlgebraElement>& relations,
                                   PathOrder order, int degree_bound) {
  size_t max_rel_len = 0;
  for (const auto& r : relations) {
    element_endpoints(q, r);  // throws if not endpoint-homogeneous
    for (const auto& [p, c] : r.terms()) max_rel_len = std::max(max_rel_len, p.length());
  }
  if (degree_bound < (int)(2 * max_rel_len))
    throw InputError("degree bound too small relative to the relations");

  RewritingSystem sys(q, std::move(order), degree_bound);
  std::deque<AlgebraElement> agenda;
  for (const auto& r : relations)
    if (!r.is_zero()) agenda.push_back(r);

  auto max_path = [&sys](const AlgebraElement& x) {
    const Path* best = nullptr;
    for (const auto& [p, c] : x.terms())
      if (!best || sys.order().less(*best, p)) best = &p;
    return *best;
  };

  auto enqueue_overlaps = [&](size_t ri, size_t rj) {
    const Path& u = sys.rules_[ri].lead;
    const Path& v = sys.rules_[rj].lead;
    size_t maxk = std::min(u.arrows.size(), v.arrows.size()) - 1;
    for (size_t k = 1; k <= maxk; ++k) {
      bool match = true;
      for (size_t i = 0; i < k; ++i)
        if (u.arrows[u.arrows.size() - k + i] != v.arrows[i]) { match = false; break; }
      if (!match) continue;
      std::vector<int> w = u.arrows;
      w.insert(w.end(), v.arrows.begin() + (long)k, v.arrows.end());
      if ((int)w.size() > sys.degree_bound_) {
        sys.truncation_hit_ = true;
        continue;
      }
      Path amb{u.source, w};
      AlgebraElement via_u = sys.apply_rule(amb, ri, 0);
      AlgebraElement via_v = sys.apply_rule(amb, rj, u.arrows.size() - k);
      agenda.push_back(via_u - via_v);
    }
  };

  size_t steps = 0;
  while (!agenda.empty()) {
    if (++steps > 200000) throw std::runtime_error("rewriting completion exceeded step cap");
    AlgebraElement x = agenda.front();
    agenda.pop_front();
    AlgebraElement nf = sys.reduce(x);
    if (nf.is_zero()) continue;
    Path lead = max_path(nf);
    if (lead.is_lazy())
      throw std::runtime_error("ideal contains a vertex idempotent; quotient is degenerate");
    if ((int)lead.length() > degree_bound) {
      sys.truncation_hit_ = true;
      continue;
    }
    Rat c = nf.coeff(lead);
    AlgebraElement tail = AlgebraElement::term(lead, Rat(1)) - nf.scaled(c.inverse());
    std::vector<Rule> kept;
    for (auto& r : sys.rules_) {
      if (contains_subword(r.lead, lead))
        agenda.push_back(AlgebraElement::term(r.lead, Rat(1)) - r.tail);
      else
        kept.push_back(std::move(r));
    }
    sys.rules_ = std::move(kept);
    sys.rules_.push_back({lead, tail});
    size_t new_idx = sys.rules_.size() - 1;
    for (auto& r : sys.rules_) r.tail = sys.reduce(r.tail);
    for (size_t i = 0; i < sys.rules_.size(); ++i) {
      if (i != new_idx) enqueue_overlaps(i, new_idx);
      enqueue_overlaps(new_idx, i);
    }
    if (sys.rules_.size() > 20000)
      throw std::runtime_error("rewriting completion exceeded rule cap");
  }
  return sys;
}

}  // namespace iceq
