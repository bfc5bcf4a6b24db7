#pragma once

#include <map>
#include <string>
#include <vector>

#include "iceq/findim.hpp"
#include "iceq/linalg.hpp"

namespace iceq {

// Right module over a FinDimAlgebra, graded by source vertex:
// dims[v] = dim M e_v, and a basis element z acts by
// act[z] : M e_{tgt(z)} -> M e_{src(z)}  (m . z applies z on the right).
// For a bound quiver algebra this is the representation with one exact
// matrix per arrow, expanded to all basis elements.
class Module {
 public:
  const FinDimAlgebra* A = nullptr;
  std::vector<int> dims;
  std::vector<Mat> act;  // per basis element

  static Module zero(const FinDimAlgebra& a);
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  // act extended to an algebra element given by coordinates.
  Mat act_vec(const FinDimAlgebra::SVec& v, int from_vertex, int to_vertex) const;
  std::vector<int> dim_vector() const { return dims; }
  // m . (x*y) == (m . x) . y on all basis pairs.
  bool satisfies_relations() const;

  // Per-vertex socle: vectors killed by every radical basis element.
  std::vector<Mat> socle() const;
  // Per-vertex top: representative columns spanning M_v modulo M.rad.
  std::vector<Mat> top_representatives() const;
};

Module simple_module(const FinDimAlgebra& a, int v);
Module projective_module(const FinDimAlgebra& a, int v);
Module injective_module(const FinDimAlgebra& a, int v);
Module regular_module(const FinDimAlgebra& a);  // sum of all projectives
Module direct_sum(const FinDimAlgebra& a, const std::vector<const Module*>& parts);

// Representation input: per-arrow matrices over a path-basis algebra.
// arrow_matrices[name] maps M_{target} -> M_{source}.
Module module_from_arrow_matrices(const BoundQuiverAlgebra& a, const std::vector<int>& dims,
                                  const std::map<std::string, Mat>& arrow_matrices);

struct ModuleMorphism {
  const Module* src = nullptr;
  const Module* tgt = nullptr;
  std::vector<Mat> f;  // per vertex

  bool commutes() const;
  bool is_zero() const;
};

ModuleMorphism zero_morphism(const Module& src, const Module& tgt);
ModuleMorphism identity_morphism(const Module& m);
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g after f

// Basis of Hom(L, M) as solutions of the commuting linear system.
std::vector<ModuleMorphism> hom_basis(const Module& l, const Module& m);
int hom_dim(const Module& l, const Module& m);

// Kernel/image/cokernel with explicit structure maps. The returned
// modules own fresh coordinate systems.
struct SubquotientResult {
  Module module;
  std::vector<Mat> map;  // inclusion (kernel/image) or projection (cokernel)
};
SubquotientResult kernel_of(const ModuleMorphism& f);
SubquotientResult image_of(const ModuleMorphism& f);
SubquotientResult cokernel_of(const ModuleMorphism& f);

// Dimension-vector equality, valid as an isomorphism test for the
// Dynkin-hereditary situations; elsewhere a bounded explicit search.
bool isomorphic_modules(const Module& a, const Module& b);

}  // namespace iceq
