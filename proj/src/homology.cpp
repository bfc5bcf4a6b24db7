#include "iceq/homology.hpp"

#include <algorithm>

namespace iceq {

Module projective_sum(const FinDimAlgebra& a, const std::vector<int>& vertices) {
  std::vector<Module> parts;
  for (int v : vertices) parts.push_back(projective_module(a, v));
  std::vector<const Module*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return direct_sum(a, ptrs);
}

Module injective_sum(const FinDimAlgebra& a, const std::vector<int>& vertices) {
  std::vector<Module> parts;
  for (int v : vertices) parts.push_back(injective_module(a, v));
  std::vector<const Module*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return direct_sum(a, ptrs);
}

namespace {

// Block layout of (+)_c P_{w_c} (projective = true) or (+)_c I_{w_c}
// (projective = false). elems[c][u] lists the basis elements indexing
// copy c's block at vertex u, in basis order, matching the coordinate
// order used by projective_module / injective_module and direct_sum.
struct SumLayout {
  std::vector<int> copy_vertices;
  std::vector<std::vector<int>> offset;           // [copy][vertex]
  std::vector<std::vector<std::vector<int>>> elems;

  SumLayout(const FinDimAlgebra& a, const std::vector<int>& copies, bool projective)
      : copy_vertices(copies) {
    int nv = a.num_vertices();
    offset.assign(copies.size(), std::vector<int>(nv, 0));
    elems.assign(copies.size(), std::vector<std::vector<int>>(nv));
    std::vector<int> cur(nv, 0);
    for (size_t c = 0; c < copies.size(); ++c)
      for (int u = 0; u < nv; ++u) {
        offset[c][u] = cur[u];
        for (int z = 0; z < a.dim(); ++z) {
          bool in = projective ? (a.tgt(z) == copies[c] && a.src(z) == u)
                               : (a.src(z) == copies[c] && a.tgt(z) == u);
          if (in) elems[c][u].push_back(z);
        }
        cur[u] += (int)elems[c][u].size();
      }
  }
};

std::vector<FinDimAlgebra::SVec> read_entries(const SumLayout& layout,
                                              const std::vector<Rat>& vec, int u) {
  std::vector<FinDimAlgebra::SVec> out(layout.copy_vertices.size());
  for (size_t c = 0; c < layout.copy_vertices.size(); ++c) {
    const auto& elems = layout.elems[c][u];
    for (size_t k = 0; k < elems.size(); ++k) {
      const Rat& coef = vec[layout.offset[c][u] + k];
      if (!coef.is_zero()) out[c].emplace_back(elems[k], coef);
    }
  }
  return out;
}

// psi_z : I_u -> I_v for z in e_v A e_u, blockwise per vertex w:
// rows = basis {y : src y = v, tgt y = w}, cols = {x : src x = u, tgt x = w},
// entry [y][x] = coefficient of x in y.z.
std::vector<Mat> psi_blocks(const FinDimAlgebra& a, int u, int v, int z) {
  int nv = a.num_vertices();
  std::vector<std::vector<int>> xu(nv), yv(nv);
  for (int i = 0; i < a.dim(); ++i) {
    if (a.src(i) == u) xu[a.tgt(i)].push_back(i);
    if (a.src(i) == v) yv[a.tgt(i)].push_back(i);
  }
  std::vector<Mat> blocks(nv);
  for (int w = 0; w < nv; ++w) {
    Mat b((int)yv[w].size(), (int)xu[w].size());
    for (int r = 0; r < (int)yv[w].size(); ++r)
      for (const auto& [x, c] : a.product(yv[w][r], z)) {
        auto it = std::find(xu[w].begin(), xu[w].end(), x);
        if (it == xu[w].end()) throw std::runtime_error("psi_blocks: product misses A e_u");
        b.at(r, (int)(it - xu[w].begin())) = c;
      }
    blocks[w] = b;
  }
  return blocks;
}

std::vector<Rat> flatten_blocks(const std::vector<Mat>& blocks) {
  std::vector<Rat> out;
  for (const auto& b : blocks)
    for (int r = 0; r < b.rows(); ++r)
      for (int c = 0; c < b.cols(); ++c) out.push_back(b.at(r, c));
  return out;
}

}  // namespace

ModuleMorphism projective_map_from_amat(const FinDimAlgebra& a, const AMat& m,
                                        const Module& src, const Module& tgt) {
  SumLayout ls(a, m.col_vertices, true);
  SumLayout lt(a, m.row_vertices, true);
  ModuleMorphism h = zero_morphism(src, tgt);
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) {
      const auto& entry = m.entries[r][c];
      if (entry.empty()) continue;
      for (int u = 0; u < a.num_vertices(); ++u) {
        const auto& cols = ls.elems[c][u];
        const auto& rows = lt.elems[r][u];
        for (size_t ci = 0; ci < cols.size(); ++ci) {
          FinDimAlgebra::SVec prod = a.mul(entry, FinDimAlgebra::unit_vec(cols[ci]));
          for (const auto& [z, coef] : prod) {
            auto it = std::find(rows.begin(), rows.end(), z);
            if (it == rows.end())
              throw std::runtime_error("projective_map_from_amat: product misses the block");
            h.f[u].at(lt.offset[r][u] + (int)(it - rows.begin()), ls.offset[c][u] + (int)ci) +=
                coef;
          }
        }
      }
    }
  return h;
}

ModuleMorphism injective_map_from_amat(const FinDimAlgebra& a, const AMat& m,
                                       const Module& src, const Module& tgt) {
  SumLayout ls(a, m.col_vertices, false);
  SumLayout lt(a, m.row_vertices, false);
  ModuleMorphism h = zero_morphism(src, tgt);
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) {
      const auto& entry = m.entries[r][c];
      if (entry.empty()) continue;
      int u = m.col_vertices[c], v = m.row_vertices[r];
      for (const auto& [z, coef] : entry) {
        auto blocks = psi_blocks(a, u, v, z);
        for (int w = 0; w < a.num_vertices(); ++w) {
          const Mat& b = blocks[w];
          for (int rr = 0; rr < b.rows(); ++rr)
            for (int cc = 0; cc < b.cols(); ++cc)
              h.f[w].at(lt.offset[r][w] + rr, ls.offset[c][w] + cc) += b.at(rr, cc) * coef;
        }
      }
    }
  return h;
}

AMat injective_map_to_amat(const FinDimAlgebra& a, const std::vector<Mat>& vertex_mats,
                           const std::vector<int>& src_copies,
                           const std::vector<int>& tgt_copies) {
  SumLayout ls(a, src_copies, false);
  SumLayout lt(a, tgt_copies, false);
  AMat out;
  out.row_vertices = tgt_copies;
  out.col_vertices = src_copies;
  out.entries.assign(out.rows(), std::vector<FinDimAlgebra::SVec>(out.cols()));
  int nv = a.num_vertices();
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) {
      int u = src_copies[c], v = tgt_copies[r];
      // Flatten the (r, c) component blocks of the morphism.
      std::vector<Mat> comp(nv);
      for (int w = 0; w < nv; ++w) {
        int rows = (int)lt.elems[r][w].size(), cols = (int)ls.elems[c][w].size();
        Mat b(rows, cols);
        for (int rr = 0; rr < rows; ++rr)
          for (int cc = 0; cc < cols; ++cc)
            b.at(rr, cc) = vertex_mats[w].at(lt.offset[r][w] + rr, ls.offset[c][w] + cc);
        comp[w] = b;
      }
      std::vector<Rat> target = flatten_blocks(comp);
      std::vector<int> zs = a.component(u, v);
      if (zs.empty()) {
        for (const auto& t : target)
          if (!t.is_zero())
            throw std::runtime_error("injective_map_to_amat: nonzero map with empty hom space");
        continue;
      }
      Mat sys((int)target.size(), (int)zs.size());
      for (size_t j = 0; j < zs.size(); ++j) {
        auto fl = flatten_blocks(psi_blocks(a, u, v, zs[j]));
        for (size_t i = 0; i < fl.size(); ++i) sys.at((int)i, (int)j) = fl[i];
      }
      auto sol = solve(sys, target);
      if (!sol) throw std::runtime_error("injective_map_to_amat: map is not in the psi span");
      FinDimAlgebra::SVec entry;
      for (size_t j = 0; j < zs.size(); ++j)
        if (!(*sol)[j].is_zero()) entry.emplace_back(zs[j], (*sol)[j]);
      out.entries[r][c] = entry;
    }
  return out;
}

ProjResolution minimal_projective_resolution(const Module& m, int bound) {
  const FinDimAlgebra& a = *m.A;
  ProjResolution res;
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }

  auto tops = m.top_representatives();
  std::vector<int> verts;
  std::vector<std::vector<Rat>> gens;
  std::vector<int> gen_vertex;
  for (int v = 0; v < a.num_vertices(); ++v)
    for (int j = 0; j < tops[v].cols(); ++j) {
      verts.push_back(v);
      std::vector<Rat> vec(m.dims[v]);
      for (int i = 0; i < m.dims[v]; ++i) vec[i] = tops[v].at(i, j);
      gens.push_back(vec);
      gen_vertex.push_back(v);
    }
  res.steps.push_back(verts);

  Module ambient = projective_sum(a, verts);
  SumLayout layout(a, verts, true);
  ModuleMorphism pi = zero_morphism(ambient, m);
  for (size_t g = 0; g < gens.size(); ++g)
    for (int u = 0; u < a.num_vertices(); ++u) {
      const auto& elems = layout.elems[g][u];
      for (size_t k = 0; k < elems.size(); ++k) {
        std::vector<Rat> img = m.act[elems[k]].apply(gens[g]);
        for (int r = 0; r < m.dims[u]; ++r) pi.f[u].at(r, layout.offset[g][u] + (int)k) = img[r];
      }
    }

  SubquotientResult ker = kernel_of(pi);

  for (int step = 1;; ++step) {
    if (ker.module.is_zero()) {
      res.complete = true;
      break;
    }
    if (step > bound) break;
    auto tops_k = ker.module.top_representatives();
    std::vector<int> verts_k;
    std::vector<std::vector<Rat>> gens_k;
    std::vector<int> genv_k;
    for (int v = 0; v < a.num_vertices(); ++v)
      for (int j = 0; j < tops_k[v].cols(); ++j) {
        verts_k.push_back(v);
        std::vector<Rat> kvec(ker.module.dims[v]);
        for (int i = 0; i < ker.module.dims[v]; ++i) kvec[i] = tops_k[v].at(i, j);
        gens_k.push_back(ker.map[v].apply(kvec));
        genv_k.push_back(v);
      }
    AMat d;
    d.row_vertices = res.steps.back();
    d.col_vertices = verts_k;
    d.entries.assign(d.rows(), std::vector<FinDimAlgebra::SVec>(d.cols()));
    for (size_t g = 0; g < gens_k.size(); ++g) {
      auto col = read_entries(layout, gens_k[g], genv_k[g]);
      for (int r = 0; r < d.rows(); ++r) d.entries[r][g] = col[r];
    }
    res.steps.push_back(verts_k);
    res.d.push_back(d);

    Module pk = projective_sum(a, verts_k);
    ModuleMorphism dm = projective_map_from_amat(a, d, pk, ambient);
    ker = kernel_of(dm);
    ambient = std::move(pk);
    layout = SumLayout(a, verts_k, true);
  }
  return res;
}

InjResolution minimal_injective_resolution(const Module& m, int bound) {
  const FinDimAlgebra& a = *m.A;
  int nv = a.num_vertices();
  InjResolution res;
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }

  Module cur = m;
  std::vector<Mat> prev_proj;  // projection I^{k-1} -> cosyzygy (per vertex)

  for (int step = 0;; ++step) {
    if (cur.is_zero()) {
      res.complete = true;
      break;
    }
    if (step > bound) break;

    auto soc = cur.socle();
    std::vector<int> verts;
    for (int v = 0; v < nv; ++v)
      for (int j = 0; j < soc[v].cols(); ++j) verts.push_back(v);

    Module env = injective_sum(a, verts);
    SumLayout le(a, verts, false);
    ModuleMorphism emb = zero_morphism(cur, env);
    int copy = 0;
    for (int v = 0; v < nv; ++v) {
      if (soc[v].cols() == 0) continue;
      Mat span = soc[v];
      for (int i = 0; i < cur.dims[v]; ++i) {
        Mat e(cur.dims[v], 1);
        e.at(i, 0) = Rat(1);
        Mat trial = hstack(span, e);
        if (rank(trial) > rank(span)) span = trial;
      }
      Mat inv = *inverse(span);
      for (int j = 0; j < soc[v].cols(); ++j, ++copy) {
        for (int u = 0; u < nv; ++u) {
          const auto& elems = le.elems[copy][u];
          for (size_t k = 0; k < elems.size(); ++k)
            for (int cth = 0; cth < cur.dims[u]; ++cth) {
              std::vector<Rat> unit(cur.dims[u]);
              unit[cth] = Rat(1);
              std::vector<Rat> img = cur.act[elems[k]].apply(unit);
              Rat val(0);
              for (int i = 0; i < cur.dims[v]; ++i) val += inv.at(j, i) * img[i];
              emb.f[u].at(le.offset[copy][u] + (int)k, cth) = val;
            }
        }
      }
    }
    for (int v = 0; v < nv; ++v)
      if (rank(emb.f[v]) != cur.dims[v])
        throw std::runtime_error("injective envelope embedding failed to be injective");

    if (step > 0) {
      // d: I^{step-1} -> I^{step} is emb composed with the previous projection.
      std::vector<Mat> dmat(nv);
      for (int v = 0; v < nv; ++v) dmat[v] = emb.f[v] * prev_proj[v];
      res.dmats.push_back(dmat);
      res.d.push_back(injective_map_to_amat(a, dmat, res.steps.back(), verts));
    } else {
      res.aug.resize(nv);
      for (int v = 0; v < nv; ++v) res.aug[v] = emb.f[v];
    }
    res.steps.push_back(verts);
    res.terms.push_back(env);

    SubquotientResult cok = cokernel_of(emb);
    prev_proj = cok.map;
    cur = std::move(cok.module);
  }
  return res;
}

int ext_dim(const Module& m, const Module& n, int i, int bound) {
  if (i < 0) throw std::invalid_argument("ext_dim: negative degree");
  ProjResolution res = minimal_projective_resolution(m, std::max(bound, i + 1));
  if (!res.complete && res.length() < i + 1)
    throw std::runtime_error("ext_dim: resolution bound too small");

  auto hom_dim_at = [&](int k) {
    if (k < 0 || k >= (int)res.steps.size()) return 0;
    int d = 0;
    for (int v : res.steps[k]) d += n.dims[v];
    return d;
  };
  // delta(k): C^k -> C^{k+1}, precomposition with res.d[k].
  auto delta = [&](int k) {
    Mat out(hom_dim_at(k + 1), hom_dim_at(k));
    if (k < 0 || k >= (int)res.d.size()) return out;
    const AMat& dm = res.d[k];
    std::vector<int> coff(dm.rows() + 1, 0);  // input offsets over steps[k]
    for (int r = 0; r < dm.rows(); ++r) coff[r + 1] = coff[r] + n.dims[dm.row_vertices[r]];
    std::vector<int> roff(dm.cols() + 1, 0);  // output offsets over steps[k+1]
    for (int c = 0; c < dm.cols(); ++c) roff[c + 1] = roff[c] + n.dims[dm.col_vertices[c]];
    for (int r = 0; r < dm.rows(); ++r)
      for (int c = 0; c < dm.cols(); ++c) {
        const auto& entry = dm.entries[r][c];
        if (entry.empty()) continue;
        Mat blk = n.act_vec(entry, dm.row_vertices[r], dm.col_vertices[c]);
        for (int i2 = 0; i2 < blk.rows(); ++i2)
          for (int j2 = 0; j2 < blk.cols(); ++j2)
            out.at(roff[c] + i2, coff[r] + j2) += blk.at(i2, j2);
      }
    return out;
  };

  if (i > res.length()) return 0;
  Mat dout = delta(i);
  int kerdim = hom_dim_at(i) - rank(dout);
  if (i == 0) return kerdim;
  Mat din = delta(i - 1);
  return kerdim - rank(din);
}

DimResult pdim(const Module& m, int bound) {
  ProjResolution res = minimal_projective_resolution(m, bound);
  if (res.complete) return {false, std::max(res.length(), 0)};
  return {true, bound};
}

DimResult global_dimension(const FinDimAlgebra& a, int bound) {
  DimResult out{false, 0};
  for (int v = 0; v < a.num_vertices(); ++v) {
    Module s = simple_module(a, v);
    DimResult p = pdim(s, bound);
    if (p.exceeded) return {true, bound};
    out.value = std::max(out.value, p.value);
  }
  return out;
}

DimResult injective_dimension_of_regular(const FinDimAlgebra& a, int bound) {
  DimResult out{false, 0};
  for (int v = 0; v < a.num_vertices(); ++v) {
    Module p = projective_module(a, v);
    InjResolution r = minimal_injective_resolution(p, bound);
    if (!r.complete) return {true, bound};
    out.value = std::max(out.value, r.length());
  }
  return out;
}

bool is_gorenstein_projective(const Module& m, const FinDimAlgebra& a, int bound) {
  Module reg = regular_module(a);
  for (int i = 1; i <= bound; ++i)
    if (ext_dim(m, reg, i, bound + 1) != 0) return false;
  return true;
}

bool self_injective(const FinDimAlgebra& a) {
  DimResult d = injective_dimension_of_regular(a, 1);
  return !d.exceeded && d.value == 0;
}

}  // namespace iceq
