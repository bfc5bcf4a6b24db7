#include "iceq/findim.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iceq {

void FinDimAlgebra::set_product(int i, int j, SVec v) {
  if (table_.empty()) table_.resize((size_t)dim() * dim());
  table_[(size_t)i * dim() + j] = std::move(v);
}

const FinDimAlgebra::SVec& FinDimAlgebra::product(int i, int j) const {
  static const SVec empty;
  if (table_.empty()) return empty;
  return table_[(size_t)i * dim() + j];
}

FinDimAlgebra::SVec FinDimAlgebra::add(const SVec& x, const SVec& y) {
  SVec out;
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      Rat c = x[i].second + y[j].second;
      if (!c.is_zero()) out.emplace_back(x[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

FinDimAlgebra::SVec FinDimAlgebra::scale(const SVec& x, const Rat& c) {
  if (c.is_zero()) return {};
  SVec out = x;
  for (auto& [i, v] : out) v *= c;
  return out;
}

FinDimAlgebra::SVec FinDimAlgebra::mul(const SVec& x, const SVec& y) const {
  SVec out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) out = add(out, scale(product(i, j), ci * cj));
  return out;
}

std::vector<int> FinDimAlgebra::component(int u, int v) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (src(i) == u && tgt(i) == v) out.push_back(i);
  return out;
}

bool FinDimAlgebra::check_unit() const {
  for (int i = 0; i < dim(); ++i) {
    if (product(idem[tgt(i)], i) != unit_vec(i)) return false;
    if (product(i, idem[src(i)]) != unit_vec(i)) return false;
  }
  return true;
}

bool FinDimAlgebra::check_associativity_exhaustive() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k) {
        SVec lhs = mul(product(i, j), unit_vec(k));
        SVec rhs = mul(unit_vec(i), product(j, k));
        if (lhs != rhs) return false;
      }
  return true;
}

Mat FinDimAlgebra::radical_basis() const {
  int n = dim();
  // Left regular representation L_x, trace form G_ij = tr(L_i L_j).
  std::vector<Mat> reg(n, Mat(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : product(i, j)) reg[i].at(k, j) = c;
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat m = reg[i] * reg[j];
      Rat tr(0);
      for (int d = 0; d < n; ++d) tr += m.at(d, d);
      gram.at(i, j) = tr;
    }
  return kernel_basis(gram);
}

bool FinDimAlgebra::radical_is_nonidempotent_span() const {
  Mat rad = radical_basis();
  if (rad.cols() != dim() - num_vertices()) return false;
  // The span must contain every non-idempotent basis vector.
  std::set<int> idems(idem.begin(), idem.end());
  Mat aug = rad;
  for (int i = 0; i < dim(); ++i) {
    if (idems.count(i)) continue;
    Mat v(dim(), 1);
    v.at(i, 0) = Rat(1);
    if (rank(hstack(rad, v)) != rad.cols()) return false;
  }
  return true;
}

void FinDimAlgebra::finish() {
  if ((int)idem.size() != num_vertices()) throw std::runtime_error("algebra: idempotent table size");
  for (int v = 0; v < num_vertices(); ++v) {
    int e = idem[v];
    if (basis[e].src != v || basis[e].tgt != v)
      throw std::runtime_error("algebra: idempotent endpoints");
  }
  if (!check_unit()) throw std::runtime_error("algebra: unit axioms fail");
}

FinDimAlgebra::SVec BoundQuiverAlgebra::express(const AlgebraElement& x) const {
  AlgebraElement nf = rw.reduce(x);
  FinDimAlgebra::SVec out;
  for (const auto& [p, c] : nf.terms()) {
    int idx = basis_index_of(p);
    if (idx < 0)
      throw std::runtime_error("normal form leaves the computed basis (certificate " +
                               alg.cert.str() + ")");
    out.emplace_back(idx, c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int BoundQuiverAlgebra::basis_index_of(const Path& p) const {
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.basis[i].path && *alg.basis[i].path == p) return i;
  return -1;
}

BoundQuiverAlgebra quotient_basis(RewritingSystem rw) {
  const Quiver& q = rw.quiver();
  FinDimAlgebra a;
  for (const auto& v : q.vertices()) a.vertex_labels.push_back(v.label);

  std::vector<Path> basis;
  std::vector<Path> level;
  for (const auto& v : q.vertices()) level.push_back(q.lazy(v.id));
  bool closed = level.empty();  // the empty quiver's algebra is zero
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    basis.insert(basis.end(), level.begin(), level.end());
    if ((int)(level.front().length()) >= rw.degree_bound()) break;
    std::vector<Path> next;
    for (const auto& p : level) {
      int tp = q.target(p);
      for (const auto& ar : q.arrows()) {
        if (ar.source != tp) continue;
        Path np = p;
        np.arrows.push_back(ar.id);
        if (np.is_lazy()) np.source = p.source;
        if (rw.is_irreducible(np)) next.push_back(np);
      }
    }
    if (next.empty()) {
      closed = true;
      break;
    }
    level = std::move(next);
  }

  Certificate cert;
  if (rw.complete() && closed) {
    cert = {Certificate::JacobiFinite, (int)basis.size()};
  } else {
    cert = {Certificate::UnknownUpToDegree, rw.degree_bound()};
  }

  a.cert = cert;
  a.idem.assign(q.num_vertices(), -1);
  for (int i = 0; i < (int)basis.size(); ++i) {
    const Path& p = basis[i];
    FinDimAlgebra::BasisElt b;
    b.label = q.path_str(p);
    b.src = q.source(p);
    b.tgt = q.target(p);
    b.path = p;
    a.basis.push_back(b);
    if (p.is_lazy()) a.idem[p.source] = i;
  }

  BoundQuiverAlgebra out{std::move(a), std::move(rw)};

  if (cert.kind == Certificate::JacobiFinite) {
    int n = out.alg.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FinDimAlgebra::SVec v;
        const Path& pi = *out.alg.basis[i].path;
        const Path& pj = *out.alg.basis[j].path;
        if (auto comp = out.quiver().compose(pi, pj))
          v = out.express(AlgebraElement::term(*comp, Rat(1)));
        out.alg.set_product(i, j, std::move(v));
      }
    out.alg.finish();
  }
  return out;
}

BoundQuiverAlgebra relative_jacobian(const IceQuiver& iq, const Potential& w, int degree_bound,
                                     std::optional<PathOrder> order) {
  if (iq.quiver.has_loops()) throw InputError("loop in ice quiver with potential");
  std::vector<AlgebraElement> relations;
  for (int a : iq.unfrozen_arrows()) {
    AlgebraElement da = cyclic_derivative(iq.quiver, a, w);
    if (!da.is_zero()) relations.push_back(da);
  }
  int bound = default_degree_bound(relations, degree_bound);
  // With no relations, finiteness is acyclicity: paths die out within
  // the vertex count, so raise the bound enough to certify it.
  if (relations.empty()) bound = std::max(bound, iq.quiver.num_vertices() + 1);
  PathOrder o = order ? *order : PathOrder::declaration_order(iq.quiver);
  return quotient_basis(complete_rewriting(iq.quiver, relations, o, bound));
}

BoundQuiverAlgebra path_algebra(const Quiver& q, int degree_bound) {
  int bound = std::max(degree_bound > 0 ? degree_bound : 12, q.num_vertices() + 1);
  return quotient_basis(complete_rewriting(q, {}, PathOrder::declaration_order(q), bound));
}

FinDimAlgebra boundary_algebra(const FinDimAlgebra& j, const std::vector<int>& frozen_vertices) {
  if (frozen_vertices.empty()) throw InputError("boundary algebra of an empty frozen set");
  if (j.cert.kind != Certificate::JacobiFinite)
    throw std::runtime_error("boundary algebra requires a finite-dimensional input");
  std::set<int> frozen(frozen_vertices.begin(), frozen_vertices.end());
  FinDimAlgebra b;
  std::vector<int> vmap(j.num_vertices(), -1);  // j vertex -> b vertex
  for (int v : frozen_vertices) {
    vmap[v] = (int)b.vertex_labels.size();
    b.vertex_labels.push_back(j.vertex_labels[v]);
  }
  std::vector<int> keep;  // j basis indices
  std::vector<int> bidx(j.dim(), -1);
  for (int i = 0; i < j.dim(); ++i) {
    if (!frozen.count(j.src(i)) || !frozen.count(j.tgt(i))) continue;
    bidx[i] = (int)keep.size();
    keep.push_back(i);
    FinDimAlgebra::BasisElt e = j.basis[i];
    e.src = vmap[e.src];
    e.tgt = vmap[e.tgt];
    b.basis.push_back(e);
  }
  b.idem.assign(b.num_vertices(), -1);
  for (int v : frozen_vertices) b.idem[vmap[v]] = bidx[j.idem[v]];
  b.cert = {Certificate::JacobiFinite, (int)b.basis.size()};
  for (int i : keep)
    for (int k : keep) {
      FinDimAlgebra::SVec v;
      for (const auto& [z, c] : j.product(i, k)) {
        // Endpoint grading keeps products of corner elements in the corner.
        if (bidx[z] < 0) throw std::runtime_error("boundary algebra: product left the corner");
        v.emplace_back(bidx[z], c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
      b.set_product(bidx[i], bidx[k], std::move(v));
    }
  b.finish();
  return b;
}

FinDimAlgebra quotient_by_idempotent_ideal(const FinDimAlgebra& a,
                                           const std::vector<int>& vertices) {
  int n = a.dim();
  // Span of x e_p y over all basis x, y and p in the set.
  std::vector<std::vector<Rat>> gens;
  for (int p : vertices) {
    int e = a.idem[p];
    for (int x = 0; x < n; ++x) {
      FinDimAlgebra::SVec xe = a.product(x, e);
      if (xe.empty()) continue;
      for (int y = 0; y < n; ++y) {
        FinDimAlgebra::SVec v = a.mul(xe, FinDimAlgebra::unit_vec(y));
        if (v.empty()) continue;
        std::vector<Rat> col(n);
        for (const auto& [i, c] : v) col[i] = c;
        gens.push_back(std::move(col));
      }
    }
  }
  Mat ideal(n, (int)gens.size());
  for (int j = 0; j < (int)gens.size(); ++j)
    for (int i = 0; i < n; ++i) ideal.at(i, j) = gens[j][i];
  Mat ibasis = column_space_basis(ideal);

  // Greedy complement among the standard basis vectors, idempotents first.
  std::vector<int> order;
  for (int v = 0; v < a.num_vertices(); ++v) order.push_back(a.idem[v]);
  for (int i = 0; i < n; ++i)
    if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
  Mat span = ibasis;
  std::vector<int> kept;
  for (int i : order) {
    Mat v(n, 1);
    v.at(i, 0) = Rat(1);
    Mat trial = hstack(span, v);
    if (rank(trial) > rank(span)) {
      kept.push_back(i);
      span = trial;
    }
  }
  std::sort(kept.begin(), kept.end());

  // Reduction: coordinates of v in [ideal | kept] -> kept part.
  Mat full = ibasis;
  for (int i : kept) {
    Mat v(n, 1);
    v.at(i, 0) = Rat(1);
    full = hstack(full, v);
  }
  auto reduce_vec = [&](const FinDimAlgebra::SVec& sv) {
    std::vector<Rat> v(n);
    for (const auto& [i, c] : sv) v[i] = c;
    auto coords = coordinates_in(full, v);
    if (!coords) throw std::runtime_error("idempotent ideal quotient: reduction failed");
    FinDimAlgebra::SVec out;
    for (int k = 0; k < (int)kept.size(); ++k) {
      Rat c = (*coords)[ibasis.cols() + k];
      if (!c.is_zero()) out.emplace_back(k, c);
    }
    return out;
  };

  FinDimAlgebra qt;
  std::set<int> killed(vertices.begin(), vertices.end());
  std::vector<int> vmap(a.num_vertices(), -1);
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (killed.count(v)) continue;
    vmap[v] = (int)qt.vertex_labels.size();
    qt.vertex_labels.push_back(a.vertex_labels[v]);
  }
  qt.idem.assign(qt.num_vertices(), -1);
  for (int k = 0; k < (int)kept.size(); ++k) {
    const auto& e = a.basis[kept[k]];
    if (vmap[e.src] < 0 || vmap[e.tgt] < 0)
      throw std::runtime_error("idempotent ideal quotient: representative touches a killed vertex");
    FinDimAlgebra::BasisElt b;
    b.label = e.label;
    b.src = vmap[e.src];
    b.tgt = vmap[e.tgt];
    qt.basis.push_back(b);
  }
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (killed.count(v)) continue;
    auto it = std::find(kept.begin(), kept.end(), a.idem[v]);
    if (it == kept.end())
      throw std::runtime_error("idempotent ideal quotient: lost an idempotent");
    qt.idem[vmap[v]] = (int)(it - kept.begin());
  }
  qt.cert = {Certificate::JacobiFinite, (int)qt.basis.size()};
  for (int i = 0; i < (int)kept.size(); ++i)
    for (int j = 0; j < (int)kept.size(); ++j)
      qt.set_product(i, j, reduce_vec(a.product(kept[i], kept[j])));
  qt.finish();
  return qt;
}

namespace {

struct PairingData {
  std::vector<int> basis_map;  // a index -> b index
  std::vector<int> vertex_map;
};

std::optional<PairingData> make_pairing(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                        const std::vector<int>& vmap, std::string* why) {
  PairingData d;
  d.vertex_map = vmap;
  d.basis_map.assign(a.dim(), -1);
  for (int v = 0; v < a.num_vertices(); ++v) d.basis_map[a.idem[v]] = b.idem[vmap[v]];
  for (int u = 0; u < a.num_vertices(); ++u)
    for (int v = 0; v < a.num_vertices(); ++v) {
      std::vector<int> ca, cb;
      for (int i : a.component(u, v))
        if (i != a.idem[u] || u != v) ca.push_back(i);
      for (int i : b.component(vmap[u], vmap[v]))
        if (i != b.idem[vmap[u]] || vmap[u] != vmap[v]) cb.push_back(i);
      if (ca.size() != cb.size()) {
        if (why) *why = "component dimensions differ";
        return std::nullopt;
      }
      if (ca.size() > 1) {
        if (why) *why = "component with more than one radical element (unsupported profile)";
        return std::nullopt;
      }
      if (ca.size() == 1) d.basis_map[ca[0]] = cb[0];
    }
  return d;
}

std::optional<ScaledIso> try_vertex_map(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                        const std::vector<int>& vmap, std::string* why) {
  auto pairing = make_pairing(a, b, vmap, why);
  if (!pairing) return std::nullopt;
  const auto& bm = pairing->basis_map;

  int n = a.dim();
  std::vector<std::optional<Rat>> lam(n);
  for (int v = 0; v < a.num_vertices(); ++v) lam[a.idem[v]] = Rat(1);

  struct Constraint {
    int i, j, k, kb;  // a-product basis_i basis_j = mu * basis_k; image product = mu' * basis_kb
    Rat mu, mu_b;
  };
  std::vector<Constraint> cons;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& pa = a.product(i, j);
      const auto& pb = b.product(bm[i], bm[j]);
      if (pa.size() > 1 || pb.size() > 1) {
        if (why) *why = "product with more than one term (unsupported profile)";
        return std::nullopt;
      }
      if (pa.empty() != pb.empty()) {
        if (why) *why = "product support mismatch";
        return std::nullopt;
      }
      if (pa.empty()) continue;
      if (bm[pa[0].first] != pb[0].first) {
        if (why) *why = "product lands outside the paired element";
        return std::nullopt;
      }
      cons.push_back({i, j, pa[0].first, pb[0].first, pa[0].second, pb[0].second});
    }

  // Propagate lam_i lam_j mu_b = mu lam_k to a fixpoint; seed stalled
  // unknowns with 1 in deterministic order.
  for (;;) {
    bool progress = false;
    for (const auto& c : cons) {
      int known = (lam[c.i] ? 1 : 0) + (lam[c.j] ? 1 : 0) + (lam[c.k] ? 1 : 0);
      if (known == 3) {
        if (*lam[c.i] * *lam[c.j] * c.mu_b != c.mu * *lam[c.k]) {
          if (why) *why = "scalar constraints inconsistent";
          return std::nullopt;
        }
      } else if (known == 2) {
        if (!lam[c.k]) {
          lam[c.k] = *lam[c.i] * *lam[c.j] * c.mu_b / c.mu;
        } else if (!lam[c.i]) {
          lam[c.i] = c.mu * *lam[c.k] / (*lam[c.j] * c.mu_b);
        } else {
          lam[c.j] = c.mu * *lam[c.k] / (*lam[c.i] * c.mu_b);
        }
        progress = true;
      }
    }
    if (!progress) {
      int seed = -1;
      for (int i = 0; i < n; ++i)
        if (!lam[i]) { seed = i; break; }
      if (seed < 0) break;
      lam[seed] = Rat(1);
    }
  }

  // Full verification: phi(x) phi(y) == phi(xy) for all basis pairs.
  auto phi = [&](int i) { return std::make_pair(bm[i], *lam[i]); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [bi, li] = phi(i);
      auto [bj, lj] = phi(j);
      FinDimAlgebra::SVec lhs = FinDimAlgebra::scale(b.product(bi, bj), li * lj);
      FinDimAlgebra::SVec rhs;
      for (const auto& [k, c] : a.product(i, j))
        rhs = FinDimAlgebra::add(rhs, FinDimAlgebra::scale(FinDimAlgebra::unit_vec(bm[k]),
                                                           c * *lam[k]));
      if (lhs != rhs) {
        if (why) *why = "multiplicativity verification failed";
        return std::nullopt;
      }
    }

  ScaledIso iso;
  iso.found = true;
  iso.vertex_map = vmap;
  iso.basis_map = bm;
  iso.basis_scale.resize(n);
  for (int i = 0; i < n; ++i) iso.basis_scale[i] = *lam[i];
  return iso;
}

}  // namespace

ScaledIso find_scaled_isomorphism(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                  std::optional<std::vector<int>> vertex_map_hint) {
  ScaledIso fail;
  if (a.dim() != b.dim() || a.num_vertices() != b.num_vertices()) {
    fail.reason = "dimension or vertex count differs";
    return fail;
  }
  std::string why = "no vertex bijection admits an isomorphism";
  if (vertex_map_hint) {
    if (auto iso = try_vertex_map(a, b, *vertex_map_hint, &why)) return *iso;
    fail.reason = why;
    return fail;
  }
  std::vector<int> perm(a.num_vertices());
  for (int i = 0; i < a.num_vertices(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    if (auto iso = try_vertex_map(a, b, perm, &why)) return *iso;
  } while (std::next_permutation(perm.begin(), perm.end()));
  fail.reason = why;
  return fail;
}

}  // namespace iceq
