#include "iceq/ar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iceq/dg.hpp"

namespace iceq {

bool is_dynkin_type(const std::string& type) {
  if (type.size() < 2) return false;
  char f = type[0];
  int n = 0;
  for (size_t i = 1; i < type.size(); ++i) {
    if (!isdigit((unsigned char)type[i])) return false;
    n = n * 10 + (type[i] - '0');
  }
  if (f == 'A') return n >= 1 && n <= 8;
  if (f == 'D') return n >= 4 && n <= 8;
  if (f == 'E') return n >= 6 && n <= 8;
  return false;
}

Quiver dynkin_quiver(const std::string& type) {
  if (!is_dynkin_type(type))
    throw InputError("not a supported Dynkin type: '" + type + "' (A1..A8, D4..D8, E6..E8)");
  char f = type[0];
  int n = std::stoi(type.substr(1));
  Quiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  auto arrow = [&](int s, int t) {
    q.add_arrow("a" + std::to_string(s) + "_" + std::to_string(t), std::to_string(s),
                std::to_string(t));
  };
  if (f == 'A') {
    for (int i = 1; i < n; ++i) arrow(i, i + 1);
  } else if (f == 'D') {
    for (int i = 1; i <= n - 2; ++i) arrow(i, i + 1);
    arrow(n - 2, n);
  } else {
    // E_n: chain 1..n-1 with vertex n attached to vertex 3.
    for (int i = 1; i < n - 1; ++i) arrow(i, i + 1);
    arrow(3, n);
  }
  return q;
}

ModuleMorphism nakayama_inverse(const FinDimAlgebra& a, const std::vector<Mat>& f_vertex_mats,
                                const std::vector<int>& src_copies,
                                const std::vector<int>& tgt_copies, const Module& psrc,
                                const Module& ptgt) {
  AMat entries = injective_map_to_amat(a, f_vertex_mats, src_copies, tgt_copies);
  return projective_map_from_amat(a, entries, psrc, ptgt);
}

Module tau_inverse(const Module& m, int n) {
  const FinDimAlgebra& a = *m.A;
  if (n < 1) throw std::invalid_argument("tau_inverse: n must be >= 1");
  if (m.is_zero()) return Module::zero(a);
  InjResolution r = minimal_injective_resolution(m, n);
  if (!r.complete)
    throw std::runtime_error("tau_inverse: injective resolution longer than n");
  if (r.length() < n) return Module::zero(a);
  Module pn1 = projective_sum(a, r.steps[n - 1]);
  Module pn = projective_sum(a, r.steps[n]);
  ModuleMorphism dm = projective_map_from_amat(a, r.d[n - 1], pn1, pn);
  return cokernel_of(dm).module;
}

namespace {

// Solve sum_k c_k basis[k] == rhs over the flattened vertex matrices.
std::optional<std::vector<Rat>> express_in_morphisms(const std::vector<ModuleMorphism>& basis,
                                                     const std::vector<Mat>& rhs) {
  size_t total = 0;
  for (const auto& m : rhs) total += (size_t)m.rows() * m.cols();
  Mat sys((int)total, (int)basis.size());
  std::vector<Rat> b(total);
  size_t row = 0;
  for (size_t v = 0; v < rhs.size(); ++v)
    for (int r = 0; r < rhs[v].rows(); ++r)
      for (int c = 0; c < rhs[v].cols(); ++c, ++row) {
        b[row] = rhs[v].at(r, c);
        for (size_t k = 0; k < basis.size(); ++k) sys.at((int)row, (int)k) = basis[k].f[v].at(r, c);
      }
  return solve(sys, b);
}

}  // namespace

ModuleMorphism tau_inverse_morphism(const ModuleMorphism& f, int n, const Module& tl,
                                    const Module& tm) {
  const Module& l = *f.src;
  const Module& m = *f.tgt;
  const FinDimAlgebra& a = *l.A;
  ModuleMorphism out = zero_morphism(tl, tm);
  if (tl.is_zero() || tm.is_zero()) return out;

  InjResolution rl = minimal_injective_resolution(l, n);
  InjResolution rm = minimal_injective_resolution(m, n);
  if (!rl.complete || !rm.complete)
    throw std::runtime_error("tau_inverse_morphism: resolution longer than n");
  // tl, tm nonzero, so both resolutions have length exactly n.

  // Lift f through the injective resolutions.
  std::vector<std::vector<Mat>> phis;  // phis[k]: I_L^k -> I_M^k vertex matrices
  int nv = a.num_vertices();
  for (int k = 0; k <= n; ++k) {
    auto homs = hom_basis(rl.terms[k], rm.terms[k]);
    std::vector<Mat> rhs(nv);
    if (k == 0) {
      for (int v = 0; v < nv; ++v) rhs[v] = rm.aug[v] * f.f[v];
    } else {
      for (int v = 0; v < nv; ++v) rhs[v] = rm.dmats[k - 1][v] * phis[k - 1][v];
    }
    // Unknown phi with phi * (embedding or d) == rhs.
    // Build the precomposition images of each hom basis element.
    std::vector<ModuleMorphism> pre;
    for (auto& h : homs) {
      ModuleMorphism p = h;
      for (int v = 0; v < nv; ++v)
        p.f[v] = h.f[v] * (k == 0 ? rl.aug[v] : rl.dmats[k - 1][v]);
      pre.push_back(std::move(p));
    }
    auto coeffs = express_in_morphisms(pre, rhs);
    if (!coeffs) throw std::runtime_error("tau_inverse_morphism: lift does not exist");
    std::vector<Mat> phi(nv);
    for (int v = 0; v < nv; ++v) {
      phi[v] = Mat(rm.terms[k].dims[v], rl.terms[k].dims[v]);
      for (size_t j = 0; j < homs.size(); ++j)
        if (!(*coeffs)[j].is_zero()) phi[v] = phi[v] + homs[j].f[v].scaled((*coeffs)[j]);
    }
    phis.push_back(std::move(phi));
  }

  // nu^{-1} of the last two lift components, then the map on cokernels.
  Module pl1 = projective_sum(a, rl.steps[n - 1]);
  Module pln = projective_sum(a, rl.steps[n]);
  Module pm1 = projective_sum(a, rm.steps[n - 1]);
  Module pmn = projective_sum(a, rm.steps[n]);
  ModuleMorphism gl = projective_map_from_amat(a, rl.d[n - 1], pl1, pln);
  ModuleMorphism gm = projective_map_from_amat(a, rm.d[n - 1], pm1, pmn);
  ModuleMorphism gn =
      nakayama_inverse(a, phis[n], rl.steps[n], rm.steps[n], pln, pmn);

  SubquotientResult cl = cokernel_of(gl);
  SubquotientResult cm = cokernel_of(gm);
  if (cl.module.dims != tl.dims || cm.module.dims != tm.dims)
    throw std::runtime_error("tau_inverse_morphism: tau modules do not match");
  for (int v = 0; v < nv; ++v) {
    // out_v * projL_v == projM_v * gn_v; projL is surjective.
    Mat rhs = (cm.map[v] * gn.f[v]).transpose();
    auto x = solve_matrix(cl.map[v].transpose(), rhs);
    if (!x) throw std::runtime_error("tau_inverse_morphism: induced map not well-defined");
    out.f[v] = x->transpose();
  }
  return out;
}

TauOrbits tau_orbits(const FinDimAlgebra& a, int n, int cap) {
  TauOrbits t;
  for (int v = 0; v < a.num_vertices(); ++v) {
    std::vector<Module> orb;
    orb.push_back(projective_module(a, v));
    for (int i = 0; i < cap; ++i) {
      Module next = tau_inverse(orb.back(), n);
      if (next.is_zero()) break;
      orb.push_back(std::move(next));
      if (i + 1 == cap)
        throw std::runtime_error("tau orbit did not terminate within the cap");
    }
    t.orbit.push_back(std::move(orb));
  }
  return t;
}

std::vector<Module> indecomposables_dynkin(const BoundQuiverAlgebra& kq) {
  const Quiver& q = kq.quiver();
  if (q.has_loops()) throw InputError("not a Dynkin quiver: loops present");
  // A quiver is Dynkin iff its underlying graph is one of the ADE trees;
  // check tree + degree profile.
  int n = q.num_vertices();
  if (q.num_arrows() != n - 1) throw InputError("not a Dynkin quiver: not a tree");
  std::vector<int> deg(n, 0);
  for (const auto& ar : q.arrows()) {
    if (ar.source == ar.target) throw InputError("not a Dynkin quiver: loop");
    deg[ar.source]++;
    deg[ar.target]++;
  }
  int deg3 = 0;
  for (int d : deg) {
    if (d > 3) throw InputError("not a Dynkin quiver: vertex of degree > 3");
    if (d == 3) ++deg3;
  }
  if (deg3 > 1) throw InputError("not a Dynkin quiver: two branch vertices");
  // Branch-length profiles for D/E are not screened here; the tau
  // iteration terminates exactly in the Dynkin cases and the orbit cap
  // turns a mistake into an error.
  if (kq.alg.cert.kind != Certificate::JacobiFinite)
    throw InputError("not a Dynkin quiver: path algebra not finite-dimensional");
  TauOrbits t = tau_orbits(kq.alg, 1);
  std::vector<Module> out;
  std::set<std::vector<int>> seen;
  for (const auto& orb : t.orbit)
    for (const auto& m : orb) {
      if (seen.count(m.dims)) continue;
      seen.insert(m.dims);
      out.push_back(m);
    }
  return out;
}

FinDimAlgebra category_algebra(const std::vector<const Module*>& objects) {
  if (objects.empty()) throw std::invalid_argument("category_algebra: no objects");
  FinDimAlgebra cat;
  for (size_t i = 0; i < objects.size(); ++i) cat.vertex_labels.push_back("M" + std::to_string(i));

  struct Elt {
    int from, to;
    ModuleMorphism mor;
    bool is_id;
  };
  std::vector<Elt> elts;
  std::vector<std::vector<std::vector<int>>> comp(objects.size(),
                                                  std::vector<std::vector<int>>(objects.size()));
  cat.idem.assign((int)objects.size(), -1);
  for (size_t x = 0; x < objects.size(); ++x)
    for (size_t y = 0; y < objects.size(); ++y) {
      auto homs = hom_basis(*objects[x], *objects[y]);
      if (x == y) {
        // Identity first; other elements made nilpotent by subtracting
        // the scalar part (End is local with residue field Q here).
        std::vector<ModuleMorphism> fixed;
        fixed.push_back(identity_morphism(*objects[x]));
        int total = objects[x]->total_dim();
        for (auto& h : homs) {
          Rat tr(0);
          for (const auto& m : h.f)
            for (int d = 0; d < m.rows(); ++d) tr += m.at(d, d);
          Rat lambda = tr / Rat(total);
          ModuleMorphism nil = h;
          for (size_t v = 0; v < h.f.size(); ++v)
            nil.f[v] = h.f[v] - Mat::identity(h.f[v].rows()).scaled(lambda);
          if (nil.is_zero()) continue;
          fixed.push_back(std::move(nil));
        }
        // Independence screen: keep a maximal independent subset.
        std::vector<ModuleMorphism> indep;
        for (auto& h : fixed) {
          std::vector<Mat> rhs;
          for (const auto& m : h.f) rhs.push_back(m);
          auto c = express_in_morphisms(indep, rhs);
          if (indep.empty() || !c) indep.push_back(std::move(h));
        }
        if ((int)indep.size() != (int)homs.size())
          throw std::runtime_error("category_algebra: End is not local over Q");
        for (size_t k = 0; k < indep.size(); ++k) {
          comp[x][y].push_back((int)elts.size());
          if (k == 0) cat.idem[(int)x] = (int)elts.size();
          elts.push_back({(int)x, (int)y, std::move(indep[k]), k == 0});
        }
      } else {
        for (auto& h : homs) {
          comp[x][y].push_back((int)elts.size());
          elts.push_back({(int)x, (int)y, std::move(h), false});
        }
      }
    }

  for (const auto& e : elts) {
    FinDimAlgebra::BasisElt b;
    b.label = (e.is_id ? "id_M" + std::to_string(e.from)
                       : "f" + std::to_string(cat.basis.size()));
    b.src = e.from;
    b.tgt = e.to;
    cat.basis.push_back(b);
  }
  cat.cert = {Certificate::JacobiFinite, (int)cat.basis.size()};

  // Products: mul(g, f) = g after f when tgt(f) == src(g).
  for (size_t gi = 0; gi < elts.size(); ++gi)
    for (size_t fi = 0; fi < elts.size(); ++fi) {
      FinDimAlgebra::SVec prod;
      if (elts[fi].to == elts[gi].from) {
        ModuleMorphism comp_m = compose(elts[gi].mor, elts[fi].mor);
        std::vector<ModuleMorphism> basis;
        const auto& idxs = comp[elts[fi].from][elts[gi].to];
        for (int k : idxs) basis.push_back(elts[k].mor);
        std::vector<Mat> rhs;
        for (const auto& m : comp_m.f) rhs.push_back(m);
        auto c = express_in_morphisms(basis, rhs);
        if (!c) throw std::runtime_error("category_algebra: composite escapes the hom basis");
        for (size_t k = 0; k < idxs.size(); ++k)
          if (!(*c)[k].is_zero()) prod.emplace_back(idxs[k], (*c)[k]);
        std::sort(prod.begin(), prod.end(),
                  [](const auto& p, const auto& r) { return p.first < r.first; });
      }
      cat.set_product((int)gi, (int)fi, std::move(prod));
    }
  cat.finish();
  return cat;
}

namespace {

std::optional<std::vector<Rat>> express_in_morphisms_pub(const std::vector<ModuleMorphism>& basis,
                                                         const ModuleMorphism& rhs) {
  std::vector<Mat> mats;
  for (const auto& m : rhs.f) mats.push_back(m);
  return express_in_morphisms(basis, mats);
}

HigherEndAlgebra higher_end_build(const Quiver& q, int n, bool grade_zero_only,
                                  bool projectives_only) {
  if (n != 1)
    throw UnsupportedError("higher endomorphism algebras are implemented for n = 1 only");
  BoundQuiverAlgebra kq = path_algebra(q, std::max(12, 2 * q.num_vertices() + 2));
  if (kq.alg.cert.kind != Certificate::JacobiFinite)
    throw InputError("path algebra is not finite-dimensional (quiver has a cycle?)");
  const FinDimAlgebra& a = kq.alg;
  DimResult gd = global_dimension(a, n);
  if (gd.exceeded) throw InputError("global dimension exceeds n");

  TauOrbits orbits = tau_orbits(a, n);

  HigherEndAlgebra he;
  // Objects ordered by orbit index, then projective vertex.
  int max_orbit = 0;
  for (const auto& o : orbits.orbit) max_orbit = std::max(max_orbit, (int)o.size());
  for (int i = 0; i < max_orbit; ++i)
    for (int v = 0; v < a.num_vertices(); ++v) {
      if (projectives_only && i > 0) continue;
      if (i < (int)orbits.orbit[v].size()) he.objects.emplace_back(v, i);
    }

  auto module_of = [&](int obj) -> const Module& {
    auto [v, i] = he.objects[obj];
    return orbits.orbit[v][i];
  };
  auto tau_power = [&](int obj, int g) -> const Module* {
    auto [v, i] = he.objects[obj];
    if (i + g >= (int)orbits.orbit[v].size()) return nullptr;
    return &orbits.orbit[v][i + g];
  };

  FinDimAlgebra& cat = he.flat;
  for (size_t i = 0; i < he.objects.size(); ++i) {
    auto [v, oi] = he.objects[i];
    cat.vertex_labels.push_back("tau" + std::to_string(oi) + "P" + a.vertex_labels[v]);
    if (oi == 0) he.frozen_objects.push_back((int)i);
  }

  struct Elt {
    int from, to, grade;
    ModuleMorphism mor;  // module_of(from) -> tau^grade(module_of(to))
    bool is_id;
  };
  std::vector<Elt> elts;
  std::vector<std::map<int, std::vector<int>>> comp;  // [from*N+to][grade] -> elt idxs
  comp.resize(he.objects.size() * he.objects.size());
  cat.idem.assign((int)he.objects.size(), -1);

  int max_grade = grade_zero_only ? 0 : max_orbit;
  for (size_t x = 0; x < he.objects.size(); ++x)
    for (size_t y = 0; y < he.objects.size(); ++y)
      for (int g = 0; g <= max_grade; ++g) {
        const Module* tgt = tau_power((int)y, g);
        if (!tgt) continue;
        auto homs = hom_basis(module_of((int)x), *tgt);
        if (homs.empty()) continue;
        if (x == y && g == 0) {
          if (homs.size() != 1)
            throw std::runtime_error("higher_end: object with non-trivial endomorphisms");
          comp[x * he.objects.size() + y][g].push_back((int)elts.size());
          cat.idem[(int)x] = (int)elts.size();
          elts.push_back({(int)x, (int)y, 0, identity_morphism(module_of((int)x)), true});
        } else {
          for (auto& h : homs) {
            comp[x * he.objects.size() + y][g].push_back((int)elts.size());
            elts.push_back({(int)x, (int)y, g, std::move(h), false});
          }
        }
      }

  for (const auto& e : elts) {
    FinDimAlgebra::BasisElt b;
    b.label = e.is_id ? "id_" + cat.vertex_labels[e.from]
                      : "h" + std::to_string(cat.basis.size()) + "g" + std::to_string(e.grade);
    b.src = e.from;
    b.tgt = e.to;
    cat.basis.push_back(b);
    he.basis_grade.push_back(e.grade);
  }
  cat.cert = {Certificate::JacobiFinite, (int)cat.basis.size()};

  // Composition: f: x -> tau^i y, h: y -> tau^j z give tau^i(h) . f of
  // grade i + j.
  auto transported = [&](const Elt& h, int times) -> std::optional<ModuleMorphism> {
    auto [yv, yi] = he.objects[h.from];
    auto [zv, zi] = he.objects[h.to];
    ModuleMorphism cur = h.mor;
    for (int step = 0; step < times; ++step) {
      int src_idx = yi + step + 1;
      int tgt_idx = zi + h.grade + step + 1;
      if (src_idx >= (int)orbits.orbit[yv].size()) return std::nullopt;
      if (tgt_idx >= (int)orbits.orbit[zv].size()) return std::nullopt;
      cur = tau_inverse_morphism(cur, n, orbits.orbit[yv][src_idx], orbits.orbit[zv][tgt_idx]);
    }
    return cur;
  };

  for (size_t hi = 0; hi < elts.size(); ++hi)
    for (size_t fi = 0; fi < elts.size(); ++fi) {
      FinDimAlgebra::SVec prod;
      const Elt& f = elts[fi];
      const Elt& h = elts[hi];
      if (f.to == h.from) {
        int total_grade = f.grade + h.grade;
        const Module* tgt = tau_power(h.to, total_grade);
        if (tgt && !(grade_zero_only && total_grade > 0)) {
          auto th = transported(h, f.grade);
          if (th) {
            ModuleMorphism comp_m = compose(*th, f.mor);
            const auto& idxs = comp[f.from * he.objects.size() + h.to][total_grade];
            std::vector<ModuleMorphism> basis;
            for (int k : idxs) basis.push_back(elts[k].mor);
            auto c = express_in_morphisms_pub(basis, comp_m);
            if (!c)
              throw std::runtime_error("higher_end: composite escapes the hom basis");
            for (size_t k = 0; k < idxs.size(); ++k)
              if (!(*c)[k].is_zero()) prod.emplace_back(idxs[k], (*c)[k]);
            std::sort(prod.begin(), prod.end(),
                      [](const auto& p, const auto& r) { return p.first < r.first; });
          }
        }
      }
      cat.set_product((int)hi, (int)fi, std::move(prod));
    }
  cat.finish();
  return he;
}

}  // namespace

HigherEndAlgebra higher_end_algebra(const Quiver& q, int n) {
  return higher_end_build(q, n, false, false);
}

FinDimAlgebra auslander_algebra(const Quiver& q) {
  return higher_end_build(q, 1, true, false).flat;
}

std::pair<FinDimAlgebra, std::vector<int>> extract_h0_algebra(const HigherEndAlgebra& h) {
  return {h.flat, h.frozen_objects};
}

BoundQuiverAlgebra preprojective_classical(const Quiver& q, int degree_bound) {
  DgPresentation pi2 = build_pi2(q);
  H0Presentation h0 = h0_presentation(pi2);
  int bound = default_degree_bound(h0.relations, degree_bound);
  return quotient_basis(
      complete_rewriting(h0.q, h0.relations, PathOrder::declaration_order(h0.q), bound));
}

FinDimAlgebra higher_preprojective(const Quiver& q, int n) {
  return higher_end_build(q, n, false, true).flat;
}

bool self_injectivity(const FinDimAlgebra& a) { return self_injective(a); }

FinDimAlgebra stable_auslander(const Quiver& q) {
  HigherEndAlgebra he = higher_end_build(q, 1, true, false);
  return quotient_by_idempotent_ideal(he.flat, he.frozen_objects);
}

Module cluster_tilting_module(const FinDimAlgebra& j, const std::vector<int>& frozen_vertices,
                              const FinDimAlgebra& bprime) {
  std::set<int> frozen(frozen_vertices.begin(), frozen_vertices.end());
  if (frozen.empty()) throw InputError("cluster_tilting_module: empty frozen set");
  // T = Je: basis elements with frozen source, graded by source over
  // B'-vertices (in frozen_vertices order).
  std::vector<int> vmap(j.num_vertices(), -1);
  for (size_t k = 0; k < frozen_vertices.size(); ++k) vmap[frozen_vertices[k]] = (int)k;
  std::vector<std::vector<int>> slot(bprime.num_vertices());
  for (int z = 0; z < j.dim(); ++z)
    if (frozen.count(j.src(z))) slot[vmap[j.src(z)]].push_back(z);

  Module t;
  t.A = &bprime;
  t.dims.resize(bprime.num_vertices());
  for (int v = 0; v < bprime.num_vertices(); ++v) t.dims[v] = (int)slot[v].size();
  // B' basis elements correspond to corner elements of J.
  std::vector<int> b_to_j(bprime.dim(), -1);
  for (int w = 0; w < bprime.dim(); ++w) {
    // Match by label within the corner.
    for (int z = 0; z < j.dim(); ++z)
      if (frozen.count(j.src(z)) && frozen.count(j.tgt(z)) &&
          j.basis[z].label == bprime.basis[w].label) {
        b_to_j[w] = z;
        break;
      }
    if (b_to_j[w] < 0)
      throw std::runtime_error("cluster_tilting_module: boundary basis mismatch");
  }
  t.act.resize(bprime.dim());
  for (int w = 0; w < bprime.dim(); ++w) {
    int zw = b_to_j[w];
    const auto& from = slot[bprime.tgt(w)];
    const auto& to = slot[bprime.src(w)];
    Mat mat((int)to.size(), (int)from.size());
    for (size_t c = 0; c < from.size(); ++c) {
      // x . w = mul_J(x, z_w)
      for (const auto& [y, coef] : j.product(from[c], zw)) {
        auto it = std::find(to.begin(), to.end(), y);
        if (it == to.end())
          throw std::runtime_error("cluster_tilting_module: action left the slot");
        mat.at((int)(it - to.begin()), (int)c) = coef;
      }
    }
    t.act[w] = mat;
  }
  if (!t.satisfies_relations())
    throw std::runtime_error("cluster_tilting_module: action fails the relations");
  return t;
}

std::vector<std::pair<int, Module>> cluster_tilting_summands(
    const FinDimAlgebra& j, const std::vector<int>& frozen_vertices,
    const FinDimAlgebra& bprime) {
  std::set<int> frozen(frozen_vertices.begin(), frozen_vertices.end());
  std::vector<int> vmap(j.num_vertices(), -1);
  for (size_t k = 0; k < frozen_vertices.size(); ++k) vmap[frozen_vertices[k]] = (int)k;
  std::vector<int> b_to_j(bprime.dim(), -1);
  for (int w = 0; w < bprime.dim(); ++w)
    for (int z = 0; z < j.dim(); ++z)
      if (frozen.count(j.src(z)) && frozen.count(j.tgt(z)) &&
          j.basis[z].label == bprime.basis[w].label)
        b_to_j[w] = z;

  std::vector<std::pair<int, Module>> out;
  for (int target = 0; target < j.num_vertices(); ++target) {
    std::vector<std::vector<int>> slot(bprime.num_vertices());
    for (int z = 0; z < j.dim(); ++z)
      if (frozen.count(j.src(z)) && j.tgt(z) == target) slot[vmap[j.src(z)]].push_back(z);
    Module m;
    m.A = &bprime;
    m.dims.resize(bprime.num_vertices());
    int total = 0;
    for (int v = 0; v < bprime.num_vertices(); ++v) {
      m.dims[v] = (int)slot[v].size();
      total += m.dims[v];
    }
    if (total == 0) continue;
    m.act.resize(bprime.dim());
    for (int w = 0; w < bprime.dim(); ++w) {
      int zw = b_to_j[w];
      const auto& from = slot[bprime.tgt(w)];
      const auto& to = slot[bprime.src(w)];
      Mat mat((int)to.size(), (int)from.size());
      for (size_t c = 0; c < from.size(); ++c)
        for (const auto& [y, coef] : j.product(from[c], zw)) {
          auto it = std::find(to.begin(), to.end(), y);
          if (it == to.end())
            throw std::runtime_error("cluster_tilting_summands: action left the slot");
          mat.at((int)(it - to.begin()), (int)c) = coef;
        }
      m.act[w] = mat;
    }
    if (!m.satisfies_relations())
      throw std::runtime_error("cluster_tilting_summands: action fails the relations");
    out.emplace_back(target, std::move(m));
  }
  return out;
}

bool check_rigidity(const Module& t, int level, int bound) {
  for (int i = 1; i <= level - 1; ++i)
    if (ext_dim(t, t, i, bound) != 0) return false;
  return true;
}

FinDimAlgebra endomorphism_algebra(const std::vector<std::pair<int, Module>>& summands) {
  std::vector<const Module*> objs;
  for (const auto& [w, m] : summands) objs.push_back(&m);
  return category_algebra(objs);
}

}  // namespace iceq
