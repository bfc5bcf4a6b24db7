#pragma once

#include <vector>

#include "iceq/module.hpp"

namespace iceq {

// Matrix with entries in the algebra: entry (r, c) lies in
// e_{row_vertex[r]} A e_{col_vertex[c]} and acts by left multiplication
// P_{col_vertex[c]} -> P_{row_vertex[r]}, or as the corresponding
// morphism I_{col_vertex[c]} -> I_{row_vertex[r]} on the dual side.
struct AMat {
  std::vector<int> row_vertices;
  std::vector<int> col_vertices;
  std::vector<std::vector<FinDimAlgebra::SVec>> entries;  // [r][c]

  int rows() const { return (int)row_vertices.size(); }
  int cols() const { return (int)col_vertices.size(); }
};

Module projective_sum(const FinDimAlgebra& a, const std::vector<int>& vertices);
Module injective_sum(const FinDimAlgebra& a, const std::vector<int>& vertices);

// Left-multiplication morphism (+)P_{col} -> (+)P_{row} on the explicit
// projective modules built by projective_sum.
ModuleMorphism projective_map_from_amat(const FinDimAlgebra& a, const AMat& m,
                                        const Module& src, const Module& tgt);

// The corresponding morphism (+)I_{col} -> (+)I_{row} on injectives.
ModuleMorphism injective_map_from_amat(const FinDimAlgebra& a, const AMat& m,
                                       const Module& src, const Module& tgt);

// Express a morphism between injective sums (given by per-vertex
// matrices) through the canonical bases Hom(I_u, I_v) ~ e_v A e_u.
AMat injective_map_to_amat(const FinDimAlgebra& a, const std::vector<Mat>& vertex_mats,
                           const std::vector<int>& src_copies, const std::vector<int>& tgt_copies);

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0.
// steps[k] lists the cover vertices of P_k; d[k] (0 <= k < steps-1) is
// the algebra-entry matrix of P_{k+1} -> P_k (rows = steps[k]).
struct ProjResolution {
  std::vector<std::vector<int>> steps;
  std::vector<AMat> d;
  bool complete = false;
  int length() const { return (int)steps.size() - 1; }
};

ProjResolution minimal_projective_resolution(const Module& m, int bound);

// Minimal injective resolution 0 -> M -> I^0 -> I^1 -> ...
// steps[k] lists the socle vertices of I^k; d[k] is the algebra-entry
// matrix of I^k -> I^{k+1} (rows = steps[k+1]); terms[k] is I^k as an
// explicit module; aug is the envelope embedding M -> I^0; dmats[k] are
// the per-vertex matrices of d[k].
struct InjResolution {
  std::vector<std::vector<int>> steps;
  std::vector<Module> terms;
  std::vector<Mat> aug;
  std::vector<std::vector<Mat>> dmats;
  std::vector<AMat> d;
  bool complete = false;
  int length() const { return (int)steps.size() - 1; }
};

InjResolution minimal_injective_resolution(const Module& m, int bound);

int ext_dim(const Module& m, const Module& n, int i, int bound);

struct DimResult {
  bool exceeded = false;  // true: only known to be > value
  int value = 0;
  std::string str() const {
    return exceeded ? (">" + std::to_string(value)) : std::to_string(value);
  }
};

DimResult pdim(const Module& m, int bound);
DimResult global_dimension(const FinDimAlgebra& a, int bound);
DimResult injective_dimension_of_regular(const FinDimAlgebra& a, int bound);
bool is_gorenstein_projective(const Module& m, const FinDimAlgebra& a, int bound);
bool self_injective(const FinDimAlgebra& a);

}  // namespace iceq
