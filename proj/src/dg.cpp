#include "iceq/dg.hpp"

#include <sstream>

namespace iceq {

void DgCheckReport::add(const std::string& g, bool ok, const std::string& detail) {
  items.push_back({g, ok, detail});
  if (!ok) pass = false;
}

AlgebraElement DgPresentation::d_of_path(const Path& p) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
  }
  AlgebraElement out;
  // d(a_m...a_1) = sum_i (-1)^{deg a_m...a_{i+1}} a_m...a_{i+1} d(a_i) a_{i-1}...a_1
  const auto& arr = p.arrows;
  for (size_t i = 0; i < arr.size(); ++i) {
    auto dit = d.find(arr[i]);
    if (dit == d.end() || dit->second.is_zero()) continue;
    int left_deg = 0;
    for (size_t k = i + 1; k < arr.size(); ++k) left_deg += gq.arrow(arr[k]).degree;
    AlgebraElement piece = dit->second;
    if (i > 0) {
      Path right{p.source, {arr.begin(), arr.begin() + (long)i}};
      piece = mul(gq, piece, AlgebraElement::term(right, Rat(1)));
    }
    if (i + 1 < arr.size()) {
      Path left{gq.arrow(arr[i + 1]).source, {arr.begin() + (long)i + 1, arr.end()}};
      piece = mul(gq, AlgebraElement::term(left, Rat(1)), piece);
    }
    if (left_deg % 2 != 0) piece = piece.scaled(Rat(-1));
    out = out + piece;
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(p, out);
  }
  return out;
}

AlgebraElement DgPresentation::d_of(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [p, c] : x.terms()) out = out + d_of_path(p).scaled(c);
  return out;
}

std::string DgPresentation::printer() const {
  std::ostringstream os;
  os << "generator  degree  source  target  d\n";
  for (const auto& a : gq.arrows()) {
    AlgebraElement dv;
    auto it = d.find(a.id);
    if (it != d.end()) dv = it->second;
    os << a.name << "  " << a.degree << "  " << gq.vertex(a.source).label << "  "
       << gq.vertex(a.target).label << "  " << element_str(gq, dv) << "\n";
  }
  return os.str();
}

AlgebraElement GeneratorFunctor::apply(const AlgebraElement& x) const {
  AlgebraElement out;
  for (const auto& [p, c] : x.terms()) {
    AlgebraElement img;
    if (p.is_lazy()) {
      img = AlgebraElement::term(codomain.gq.lazy(vertex_map.at(p.source)), Rat(1));
    } else {
      img = AlgebraElement::term(codomain.gq.lazy(vertex_map.at(p.source)), Rat(1));
      for (int a : p.arrows) img = mul(codomain.gq, generator.at(a), img);
    }
    out = out + img.scaled(c);
  }
  return out;
}

namespace {

// e_i (sum over listed arrows of [a, partner(a)]) e_i in the graded quiver.
AlgebraElement commutator_sum_at(const Quiver& gq, const std::vector<std::pair<int, int>>& pairs,
                                 int v) {
  AlgebraElement out;
  for (auto [a, astar] : pairs) {
    const Arrow& ar = gq.arrow(a);
    // a a*: loop at t(a); a* a: loop at s(a).
    if (ar.target == v) {
      Path p{v, {astar, a}};
      out.add(p, Rat(1));
    }
    if (ar.source == v) {
      Path p{v, {a, astar}};
      out.add(p, Rat(-1));
    }
  }
  return out;
}

}  // namespace

DgPresentation build_relative_ginzburg(const IceQuiver& iq, const Potential& w) {
  const Quiver& q = iq.quiver;
  if (q.has_loops()) throw InputError("relative Ginzburg construction requires a loop-free quiver");
  DgPresentation p;
  for (const auto& v : q.vertices()) p.gq.add_vertex(v.label);
  for (const auto& a : q.arrows()) {
    int id = p.gq.add_arrow(a.name, q.vertex(a.source).label, q.vertex(a.target).label, 0);
    p.kind[id] = GenKind::Base;
    p.d[id] = AlgebraElement();
  }
  std::vector<std::pair<int, int>> star_pairs;  // (base arrow id, star id) in p.gq
  for (int a : iq.unfrozen_arrows()) {
    const Arrow& ar = q.arrow(a);
    std::string name = ar.name + "*";
    if (p.gq.arrow_by_name(name))
      throw InputError("generated name '" + name + "' collides with an existing arrow");
    int id = p.gq.add_arrow(name, q.vertex(ar.target).label, q.vertex(ar.source).label, -1);
    p.kind[id] = GenKind::Star;
    star_pairs.emplace_back(a, id);
  }
  for (auto [a, astar] : star_pairs) {
    // dW/da lives in kQ which embeds arrow-id-wise into the graded quiver:
    // base arrows keep their ids by construction.
    p.d[astar] = cyclic_derivative(q, a, w);
  }
  for (int v : iq.unfrozen_vertices()) {
    std::string name = "t_" + q.vertex(v).label;
    if (p.gq.arrow_by_name(name))
      throw InputError("generated name '" + name + "' collides with an existing arrow");
    int id = p.gq.add_arrow(name, q.vertex(v).label, q.vertex(v).label, -2);
    p.kind[id] = GenKind::TLoop;
    p.d[id] = commutator_sum_at(p.gq, star_pairs, v);
  }
  return p;
}

DgPresentation build_pi2(const Quiver& f) {
  DgPresentation p;
  for (const auto& v : f.vertices()) p.gq.add_vertex(v.label);
  std::vector<std::pair<int, int>> tilde_pairs;
  for (const auto& a : f.arrows()) {
    int id = p.gq.add_arrow(a.name, f.vertex(a.source).label, f.vertex(a.target).label, 0);
    p.kind[id] = GenKind::Base;
    p.d[id] = AlgebraElement();
  }
  for (const auto& a : f.arrows()) {
    std::string name = a.name + "~";
    if (p.gq.arrow_by_name(name))
      throw InputError("generated name '" + name + "' collides with an existing arrow");
    int id = p.gq.add_arrow(name, f.vertex(a.target).label, f.vertex(a.source).label, 0);
    p.kind[id] = GenKind::Tilde;
    p.d[id] = AlgebraElement();
    tilde_pairs.emplace_back(a.id, id);
  }
  for (const auto& v : f.vertices()) {
    std::string name = "r_" + v.label;
    if (p.gq.arrow_by_name(name))
      throw InputError("generated name '" + name + "' collides with an existing arrow");
    int id = p.gq.add_arrow(name, v.label, v.label, -1);
    p.kind[id] = GenKind::RLoop;
    p.d[id] = commutator_sum_at(p.gq, tilde_pairs, v.id);
  }
  return p;
}

GeneratorFunctor ginzburg_functor(const IceQuiver& iq, const Potential& w) {
  GeneratorFunctor g;
  g.domain = build_pi2(iq.frozen_subquiver());
  g.codomain = build_relative_ginzburg(iq, w);
  const Quiver& dq = g.domain.gq;
  const Quiver& cq = g.codomain.gq;
  const Quiver& q = iq.quiver;

  for (const auto& v : dq.vertices()) g.vertex_map[v.id] = cq.require_vertex(v.label);

  std::vector<std::pair<int, int>> star_pairs;  // in codomain ids
  for (int a : iq.unfrozen_arrows())
    star_pairs.emplace_back(cq.require_arrow(q.arrow(a).name),
                            cq.require_arrow(q.arrow(a).name + "*"));

  for (const auto& a : dq.arrows()) {
    switch (g.domain.kind.at(a.id)) {
      case GenKind::Base:
        g.generator[a.id] =
            AlgebraElement::term(Path{cq.arrow(cq.require_arrow(a.name)).source,
                                      {cq.require_arrow(a.name)}},
                                 Rat(1));
        break;
      case GenKind::Tilde: {
        std::string base = a.name.substr(0, a.name.size() - 1);
        AlgebraElement da = cyclic_derivative(q, q.require_arrow(base), w);
        // kQ embeds into the codomain graded quiver arrow-id-wise.
        g.generator[a.id] = -da;
        break;
      }
      case GenKind::RLoop: {
        std::string label = a.name.substr(2);
        int v = cq.require_vertex(label);
        g.generator[a.id] = commutator_sum_at(cq, star_pairs, v);
        break;
      }
      default:
        throw InputError("unexpected generator kind in Pi_2 presentation");
    }
  }
  return g;
}

GeneratorFunctor identity_functor(const DgPresentation& p) {
  GeneratorFunctor g;
  g.domain = p;
  g.codomain = p;
  for (const auto& v : p.gq.vertices()) g.vertex_map[v.id] = v.id;
  for (const auto& a : p.gq.arrows())
    g.generator[a.id] = AlgebraElement::term(Path{a.source, {a.id}}, Rat(1));
  return g;
}

DgCheckReport verify_d_squared(const DgPresentation& p) {
  DgCheckReport rep;
  for (const auto& a : p.gq.arrows()) {
    AlgebraElement dv;
    auto it = p.d.find(a.id);
    if (it != p.d.end()) dv = it->second;
    if (a.degree == 0 && !dv.is_zero()) {
      rep.add(a.name, false, "degree-0 generator has nonzero differential");
      continue;
    }
    int deg = 0;
    if (!element_homogeneous(p.gq, dv, &deg)) {
      rep.add(a.name, false, "differential value is not degree-homogeneous");
      continue;
    }
    if (!dv.is_zero() && deg != a.degree + 1) {
      rep.add(a.name, false, "differential does not raise degree by 1");
      continue;
    }
    if (!dv.is_zero()) {
      auto ep = element_endpoints(p.gq, dv);
      if (ep && (ep->source != a.source || ep->target != a.target)) {
        rep.add(a.name, false, "differential value has mismatched endpoints");
        continue;
      }
    }
    AlgebraElement dd = p.d_of(dv);
    if (!dd.is_zero()) {
      rep.add(a.name, false, "d^2 != 0: d(d(" + a.name + ")) = " + element_str(p.gq, dd));
      continue;
    }
    rep.add(a.name, true);
  }
  return rep;
}

DgCheckReport verify_functor(const GeneratorFunctor& g) {
  DgCheckReport rep;
  for (const auto& a : g.domain.gq.arrows()) {
    const AlgebraElement& img = g.generator.at(a.id);
    int deg = 0;
    if (!element_homogeneous(g.codomain.gq, img, &deg)) {
      rep.add(a.name, false, "image is not degree-homogeneous");
      continue;
    }
    if (!img.is_zero() && deg != a.degree) {
      rep.add(a.name, false, "functor does not preserve degree");
      continue;
    }
    AlgebraElement dom_d;
    auto it = g.domain.d.find(a.id);
    if (it != g.domain.d.end()) dom_d = it->second;
    AlgebraElement lhs = g.codomain.d_of(img);
    AlgebraElement rhs = g.apply(dom_d);
    if (lhs != rhs) {
      rep.add(a.name, false,
              "dG != Gd: dG = " + element_str(g.codomain.gq, lhs) +
                  ", Gd = " + element_str(g.codomain.gq, rhs));
      continue;
    }
    rep.add(a.name, true);
  }
  return rep;
}

std::pair<Quiver, Potential> cofiber_quotient(const IceQuiver& iq, const Potential& w) {
  const Quiver& q = iq.quiver;
  Quiver out;
  for (const auto& v : q.vertices())
    if (!iq.is_frozen_vertex(v.id)) out.add_vertex(v.label);
  for (const auto& a : q.arrows()) {
    if (iq.is_frozen_vertex(a.source) || iq.is_frozen_vertex(a.target)) continue;
    out.add_arrow(a.name, q.vertex(a.source).label, q.vertex(a.target).label, a.degree);
  }
  std::vector<std::pair<Rat, Path>> kept;
  for (const auto& [c, p] : w.terms()) {
    bool through_frozen = false;
    std::vector<std::string> word;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      const Arrow& ar = q.arrow(*it);
      if (iq.is_frozen_vertex(ar.source) || iq.is_frozen_vertex(ar.target)) {
        through_frozen = true;
        break;
      }
      word.push_back(ar.name);
    }
    if (!through_frozen) kept.emplace_back(c, out.path_from_names(word));
  }
  return {out, Potential::make(out, kept)};
}

H0Presentation h0_presentation(const DgPresentation& p) {
  H0Presentation h;
  std::map<int, int> arrow_map;  // p.gq arrow -> h.q arrow
  for (const auto& v : p.gq.vertices()) h.q.add_vertex(v.label);
  for (const auto& a : p.gq.arrows())
    if (a.degree == 0)
      arrow_map[a.id] =
          h.q.add_arrow(a.name, p.gq.vertex(a.source).label, p.gq.vertex(a.target).label, 0);
  for (const auto& a : p.gq.arrows()) {
    if (a.degree != -1) continue;
    AlgebraElement dv;
    auto it = p.d.find(a.id);
    if (it != p.d.end()) dv = it->second;
    AlgebraElement rel;
    for (const auto& [path, c] : dv.terms()) {
      std::vector<int> arrows;
      for (int ar : path.arrows) arrows.push_back(arrow_map.at(ar));
      Path q_path = path.is_lazy() ? h.q.lazy(h.q.require_vertex(p.gq.vertex(path.source).label))
                                   : Path{h.q.arrow(arrows[0]).source, arrows};
      rel.add(q_path, c);
    }
    h.relations.push_back(rel);
  }
  return h;
}

}  // namespace iceq
