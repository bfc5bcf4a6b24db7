#include "iceq/module.hpp"

#include <algorithm>
#include <set>

namespace iceq {

Module Module::zero(const FinDimAlgebra& a) {
  Module m;
  m.A = &a;
  m.dims.assign(a.num_vertices(), 0);
  m.act.resize(a.dim());
  for (int z = 0; z < a.dim(); ++z) m.act[z] = Mat(0, 0);
  return m;
}

int Module::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

Mat Module::act_vec(const FinDimAlgebra::SVec& v, int from_vertex, int to_vertex) const {
  Mat out(dims[to_vertex], dims[from_vertex]);
  for (const auto& [z, c] : v) {
    if (A->tgt(z) != from_vertex || A->src(z) != to_vertex)
      throw std::runtime_error("act_vec: element is not endpoint-homogeneous for the request");
    out = out + act[z].scaled(c);
  }
  return out;
}

bool Module::satisfies_relations() const {
  const FinDimAlgebra& a = *A;
  for (int v = 0; v < a.num_vertices(); ++v) {
    const Mat& e = act[a.idem[v]];
    if (e != Mat::identity(dims[v])) return false;
  }
  // act[mul(i,j)] == act[j] * act[i] whenever tgt(j) == src(i).
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (a.tgt(j) != a.src(i)) continue;
      Mat lhs(dims[a.src(j)], dims[a.tgt(i)]);
      for (const auto& [z, c] : a.product(i, j)) lhs = lhs + act[z].scaled(c);
      Mat rhs = act[j] * act[i];
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Mat> Module::socle() const {
  const FinDimAlgebra& a = *A;
  std::vector<Mat> out(a.num_vertices());
  std::set<int> idems(a.idem.begin(), a.idem.end());
  for (int v = 0; v < a.num_vertices(); ++v) {
    Mat stack(0, dims[v]);
    for (int z = 0; z < a.dim(); ++z) {
      if (idems.count(z) || a.tgt(z) != v) continue;
      stack = vstack(stack, act[z]);
    }
    out[v] = kernel_basis(stack);
  }
  return out;
}

std::vector<Mat> Module::top_representatives() const {
  const FinDimAlgebra& a = *A;
  std::vector<Mat> out(a.num_vertices());
  std::set<int> idems(a.idem.begin(), a.idem.end());
  for (int v = 0; v < a.num_vertices(); ++v) {
    // M_v.rad contribution: images of act[z] landing in M_v, z radical.
    Mat imgs(dims[v], 0);
    for (int z = 0; z < a.dim(); ++z) {
      if (idems.count(z) || a.src(z) != v) continue;
      imgs = hstack(imgs, act[z]);
    }
    Mat radpart = column_space_basis(imgs);
    // Greedy extension to a basis of M_v by standard vectors.
    Mat span = radpart;
    Mat reps(dims[v], 0);
    for (int i = 0; i < dims[v]; ++i) {
      Mat v1(dims[v], 1);
      v1.at(i, 0) = Rat(1);
      Mat trial = hstack(span, v1);
      if (rank(trial) > rank(span)) {
        span = trial;
        reps = hstack(reps, v1);
      }
    }
    out[v] = reps;
  }
  return out;
}

Module simple_module(const FinDimAlgebra& a, int v) {
  Module m;
  m.A = &a;
  m.dims.assign(a.num_vertices(), 0);
  m.dims[v] = 1;
  m.act.resize(a.dim());
  for (int z = 0; z < a.dim(); ++z) {
    m.act[z] = Mat(m.dims[a.src(z)], m.dims[a.tgt(z)]);
    if (z == a.idem[v]) m.act[z].at(0, 0) = Rat(1);
  }
  return m;
}

Module projective_module(const FinDimAlgebra& a, int v) {
  // Basis of e_v A: elements with tgt == v, graded by src.
  Module m;
  m.A = &a;
  m.dims.assign(a.num_vertices(), 0);
  std::vector<std::vector<int>> slot(a.num_vertices());  // per vertex: basis elts
  for (int z = 0; z < a.dim(); ++z)
    if (a.tgt(z) == v) slot[a.src(z)].push_back(z);
  for (int u = 0; u < a.num_vertices(); ++u) m.dims[u] = (int)slot[u].size();
  m.act.resize(a.dim());
  for (int w = 0; w < a.dim(); ++w) {
    const auto& from = slot[a.tgt(w)];
    const auto& to = slot[a.src(w)];
    Mat mat((int)to.size(), (int)from.size());
    for (int c = 0; c < (int)from.size(); ++c) {
      // x . w = mul(x, w), x in e_v A with src(x) = tgt(w).
      for (const auto& [z, coef] : a.product(from[c], w)) {
        auto it = std::find(to.begin(), to.end(), z);
        if (it == to.end()) throw std::runtime_error("projective module: product left e_vA");
        mat.at((int)(it - to.begin()), c) = coef;
      }
    }
    m.act[w] = mat;
  }
  return m;
}

Module injective_module(const FinDimAlgebra& a, int v) {
  // Dual of A e_v: functionals on elements with src == v, graded by tgt.
  Module m;
  m.A = &a;
  m.dims.assign(a.num_vertices(), 0);
  std::vector<std::vector<int>> slot(a.num_vertices());
  for (int z = 0; z < a.dim(); ++z)
    if (a.src(z) == v) slot[a.tgt(z)].push_back(z);
  for (int u = 0; u < a.num_vertices(); ++u) m.dims[u] = (int)slot[u].size();
  m.act.resize(a.dim());
  for (int w = 0; w < a.dim(); ++w) {
    const auto& from = slot[a.tgt(w)];  // functionals on tgt(w) part
    const auto& to = slot[a.src(w)];
    Mat mat((int)to.size(), (int)from.size());
    // (xi . w)(x) = xi(w . x) for x with tgt(x) = src(w): row x, col z.
    for (int r = 0; r < (int)to.size(); ++r) {
      for (const auto& [z, coef] : a.product(w, to[r])) {
        auto it = std::find(from.begin(), from.end(), z);
        if (it == from.end()) throw std::runtime_error("injective module: product left A e_v");
        mat.at(r, (int)(it - from.begin())) = coef;
      }
    }
    m.act[w] = mat;
  }
  return m;
}

Module regular_module(const FinDimAlgebra& a) {
  std::vector<Module> parts;
  for (int v = 0; v < a.num_vertices(); ++v) parts.push_back(projective_module(a, v));
  std::vector<const Module*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return direct_sum(a, ptrs);
}

Module direct_sum(const FinDimAlgebra& a, const std::vector<const Module*>& parts) {
  Module m;
  m.A = &a;
  m.dims.assign(a.num_vertices(), 0);
  for (const Module* p : parts)
    for (int v = 0; v < a.num_vertices(); ++v) m.dims[v] += p->dims[v];
  m.act.resize(a.dim());
  for (int z = 0; z < a.dim(); ++z) {
    Mat mat(m.dims[a.src(z)], m.dims[a.tgt(z)]);
    int roff = 0, coff = 0;
    for (const Module* p : parts) {
      const Mat& blk = p->act[z];
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) mat.at(roff + r, coff + c) = blk.at(r, c);
      roff += p->dims[a.src(z)];
      coff += p->dims[a.tgt(z)];
    }
    m.act[z] = mat;
  }
  return m;
}

Module module_from_arrow_matrices(const BoundQuiverAlgebra& a, const std::vector<int>& dims,
                                  const std::map<std::string, Mat>& arrow_matrices) {
  const Quiver& q = a.quiver();
  Module m;
  m.A = &a.alg;
  m.dims = dims;
  m.act.resize(a.alg.dim());
  for (int z = 0; z < a.alg.dim(); ++z) {
    const auto& be = a.alg.basis[z];
    if (!be.path) throw std::runtime_error("module_from_arrow_matrices needs a path basis");
    Mat mat = Mat::identity(dims[be.tgt]);
    // act[p] = act[a_1] ... act[a_m] (a_m applied first).
    for (auto it = be.path->arrows.rbegin(); it != be.path->arrows.rend(); ++it) {
      const auto& name = q.arrow(*it).name;
      auto mit = arrow_matrices.find(name);
      if (mit == arrow_matrices.end())
        throw InputError("missing matrix for arrow '" + name + "'");
      mat = mit->second * mat;
    }
    m.act[z] = mat;
  }
  if (!m.satisfies_relations())
    throw InputError("representation does not satisfy the algebra's relations");
  return m;
}

bool ModuleMorphism::commutes() const {
  const FinDimAlgebra& a = *src->A;
  for (int z = 0; z < a.dim(); ++z) {
    Mat lhs = f[a.src(z)] * src->act[z];
    Mat rhs = tgt->act[z] * f[a.tgt(z)];
    if (lhs != rhs) return false;
  }
  return true;
}

bool ModuleMorphism::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

ModuleMorphism zero_morphism(const Module& src, const Module& tgt) {
  ModuleMorphism h;
  h.src = &src;
  h.tgt = &tgt;
  for (size_t v = 0; v < src.dims.size(); ++v) h.f.push_back(Mat(tgt.dims[v], src.dims[v]));
  return h;
}

ModuleMorphism identity_morphism(const Module& m) {
  ModuleMorphism h;
  h.src = &m;
  h.tgt = &m;
  for (int d : m.dims) h.f.push_back(Mat::identity(d));
  return h;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  ModuleMorphism h;
  h.src = f.src;
  h.tgt = g.tgt;
  for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
  return h;
}

std::vector<ModuleMorphism> hom_basis(const Module& l, const Module& m) {
  const FinDimAlgebra& a = *l.A;
  int nv = a.num_vertices();
  // Unknowns: entries of f_v (m.dims[v] x l.dims[v]).
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * l.dims[v];
  int unknowns = offset[nv];
  std::vector<std::vector<Rat>> rows;
  auto var = [&](int v, int r, int c) { return offset[v] + r * l.dims[v] + c; };
  for (int z = 0; z < a.dim(); ++z) {
    int sv = a.src(z), tv = a.tgt(z);
    // f_{sv} * l.act[z] == m.act[z] * f_{tv}
    for (int r = 0; r < m.dims[sv]; ++r)
      for (int c = 0; c < l.dims[tv]; ++c) {
        std::vector<Rat> row(unknowns);
        for (int k = 0; k < l.dims[sv]; ++k) {
          const Rat& lc = l.act[z].at(k, c);
          if (!lc.is_zero()) row[var(sv, r, k)] += lc;
        }
        for (int k = 0; k < m.dims[tv]; ++k) {
          const Rat& mc = m.act[z].at(r, k);
          if (!mc.is_zero()) row[var(tv, k, c)] -= mc;
        }
        bool nonzero = false;
        for (const auto& x : row)
          if (!x.is_zero()) { nonzero = true; break; }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  Mat sys((int)rows.size(), unknowns);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) sys.at(r, c) = rows[r][c];
  Mat ker = unknowns == 0 ? Mat(0, 0) : kernel_basis(sys);
  std::vector<ModuleMorphism> out;
  for (int j = 0; j < ker.cols(); ++j) {
    ModuleMorphism h = zero_morphism(l, m);
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < m.dims[v]; ++r)
        for (int c = 0; c < l.dims[v]; ++c) h.f[v].at(r, c) = ker.at(var(v, r, c), j);
    out.push_back(std::move(h));
  }
  return out;
}

int hom_dim(const Module& l, const Module& m) { return (int)hom_basis(l, m).size(); }

namespace {

// Induced action of the submodule spanned per vertex by the columns of
// basis[v] (linearly independent): solve basis_{s} X = act[z] basis_{t}.
Module induced_on_columns(const Module& m, const std::vector<Mat>& basis) {
  const FinDimAlgebra& a = *m.A;
  Module s;
  s.A = &a;
  s.dims.resize(a.num_vertices());
  for (int v = 0; v < a.num_vertices(); ++v) s.dims[v] = basis[v].cols();
  s.act.resize(a.dim());
  for (int z = 0; z < a.dim(); ++z) {
    Mat rhs = m.act[z] * basis[a.tgt(z)];
    auto x = solve_matrix(basis[a.src(z)], rhs);
    if (!x) throw std::runtime_error("induced_on_columns: subspace not invariant");
    s.act[z] = *x;
  }
  return s;
}

}  // namespace

SubquotientResult kernel_of(const ModuleMorphism& f) {
  const Module& m = *f.src;
  std::vector<Mat> basis;
  for (size_t v = 0; v < m.dims.size(); ++v) basis.push_back(kernel_basis(f.f[v]));
  SubquotientResult r{induced_on_columns(m, basis), basis};
  return r;
}

SubquotientResult image_of(const ModuleMorphism& f) {
  const Module& m = *f.tgt;
  std::vector<Mat> basis;
  for (size_t v = 0; v < m.dims.size(); ++v) basis.push_back(column_space_basis(f.f[v]));
  SubquotientResult r{induced_on_columns(m, basis), basis};
  return r;
}

SubquotientResult cokernel_of(const ModuleMorphism& f) {
  const Module& m = *f.tgt;
  const FinDimAlgebra& a = *m.A;
  std::vector<Mat> proj;   // per vertex: coker coords from m coords
  std::vector<Mat> sect;   // per vertex: section coker -> m
  std::vector<int> cdims;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    Mat img = column_space_basis(f.f[v]);
    // Greedy complement of img by standard vectors.
    Mat span = img;
    Mat comp(m.dims[v], 0);
    for (int i = 0; i < m.dims[v]; ++i) {
      Mat e(m.dims[v], 1);
      e.at(i, 0) = Rat(1);
      Mat trial = hstack(span, e);
      if (rank(trial) > rank(span)) {
        span = trial;
        comp = hstack(comp, e);
      }
    }
    cdims.push_back(comp.cols());
    // Projection: coordinates in [img | comp], take comp part.
    Mat full = hstack(img, comp);
    Mat inv = *inverse(full);  // full is square invertible
    Mat p(comp.cols(), m.dims[v]);
    for (int r = 0; r < comp.cols(); ++r)
      for (int c = 0; c < m.dims[v]; ++c) p.at(r, c) = inv.at(img.cols() + r, c);
    proj.push_back(p);
    sect.push_back(comp);
  }
  Module q;
  q.A = &a;
  q.dims = cdims;
  q.act.resize(a.dim());
  for (int z = 0; z < a.dim(); ++z)
    q.act[z] = proj[a.src(z)] * (m.act[z] * sect[a.tgt(z)]);
  SubquotientResult r{std::move(q), proj};
  return r;
}

bool isomorphic_modules(const Module& a, const Module& b) {
  if (a.dims != b.dims) return false;
  if (a.total_dim() == 0) return true;
  // Explicit bounded search: some invertible combination of a hom basis.
  auto homs = hom_basis(a, b);
  if (homs.empty()) return false;
  auto invertible = [&](const ModuleMorphism& h) {
    for (size_t v = 0; v < a.dims.size(); ++v)
      if (rank(h.f[v]) != a.dims[v]) return false;
    return true;
  };
  for (const auto& h : homs)
    if (invertible(h)) return true;
  // Small integer combinations of two basis morphisms.
  for (size_t i = 0; i < homs.size(); ++i)
    for (size_t j = i + 1; j < homs.size(); ++j)
      for (int c = -3; c <= 3; ++c) {
        if (c == 0) continue;
        ModuleMorphism h = zero_morphism(a, b);
        for (size_t v = 0; v < a.dims.size(); ++v)
          h.f[v] = homs[i].f[v] + homs[j].f[v].scaled(Rat(c));
        if (invertible(h)) return true;
      }
  return false;
}

}  // namespace iceq
