#pragma once

#include <string>
#include <vector>

#include "iceq/homology.hpp"
#include "iceq/module.hpp"

namespace iceq {

struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

bool is_dynkin_type(const std::string& type);
Quiver dynkin_quiver(const std::string& type);  // A1..A8, D4..D8, E6..E8

// nu^{-1} transports a morphism between injective sums (copy labels
// given) to the morphism between the projective sums with the same
// algebra entries.
ModuleMorphism nakayama_inverse(const FinDimAlgebra& a, const std::vector<Mat>& f_vertex_mats,
                                const std::vector<int>& src_copies,
                                const std::vector<int>& tgt_copies, const Module& psrc,
                                const Module& ptgt);

// Higher inverse AR translation: minimal injective resolution of length
// at most n, nu^{-1} termwise, cokernel of the last map. Zero when the
// resolution is shorter than n; error when it is longer.
Module tau_inverse(const Module& m, int n);

// Transport of f: L -> M; tl and tm must be tau_inverse of L and M.
ModuleMorphism tau_inverse_morphism(const ModuleMorphism& f, int n, const Module& tl,
                                    const Module& tm);

// tau^{-i} P_v for every vertex v until the orbit dies.
struct TauOrbits {
  std::vector<std::vector<Module>> orbit;  // orbit[v][i], nonzero entries
};
TauOrbits tau_orbits(const FinDimAlgebra& a, int n, int cap = 64);

// All indecomposables of the hereditary Dynkin path algebra, by
// tau-orbit iteration from the indecomposable projectives. The modules
// reference kq.alg, which must outlive them.
std::vector<Module> indecomposables_dynkin(const BoundQuiverAlgebra& kq);

// Category algebra of a list of modules over one algebra: vertices are
// the objects, basis elements are morphisms (identities first).
FinDimAlgebra category_algebra(const std::vector<const Module*>& objects);

// The graded endomorphism category with hom spaces Hom(L, tau^{-i} M).
struct HigherEndAlgebra {
  FinDimAlgebra flat;
  std::vector<std::pair<int, int>> objects;  // flat vertex -> (proj vertex, orbit index)
  std::vector<int> basis_grade;              // per flat basis element
  std::vector<int> frozen_objects;           // flat vertices with orbit index 0
};

HigherEndAlgebra higher_end_algebra(const Quiver& q, int n = 1);
FinDimAlgebra auslander_algebra(const Quiver& q);
// The flat algebra together with the frozen idempotent's vertex set.
std::pair<FinDimAlgebra, std::vector<int>> extract_h0_algebra(const HigherEndAlgebra& h);

// Double quiver with the commutator relations, through the rewriting
// engine.
BoundQuiverAlgebra preprojective_classical(const Quiver& q, int degree_bound = 0);
// Hom(B0, tau^{-i} B0) with the graded composition (projective objects
// only); isomorphic to the classical presentation.
FinDimAlgebra higher_preprojective(const Quiver& q, int n = 1);

bool self_injectivity(const FinDimAlgebra& a);
FinDimAlgebra stable_auslander(const Quiver& q);

// T = Je as a right module over B' = eJe.
Module cluster_tilting_module(const FinDimAlgebra& j, const std::vector<int>& frozen_vertices,
                              const FinDimAlgebra& bprime);
// Direct summands e_w J e per algebra vertex w (nonzero ones), in
// vertex order; the pair lists the J-vertex of each summand.
std::vector<std::pair<int, Module>> cluster_tilting_summands(
    const FinDimAlgebra& j, const std::vector<int>& frozen_vertices, const FinDimAlgebra& bprime);

// Ext^i(T, T) = 0 for 1 <= i <= level-1 (rigidity of a candidate
// level-cluster-tilting object), resolutions bounded by `bound`.
bool check_rigidity(const Module& t, int level, int bound);

FinDimAlgebra endomorphism_algebra(const std::vector<std::pair<int, Module>>& summands);

}  // namespace iceq
