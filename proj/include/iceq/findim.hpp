#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iceq/linalg.hpp"
#include "iceq/rewrite.hpp"

namespace iceq {

struct Certificate {
  enum Kind { JacobiFinite, UnknownUpToDegree } kind = JacobiFinite;
  int value = 0;  // dimension, or the truncation degree

  std::string str() const {
    return kind == JacobiFinite ? "JacobiFinite{dim=" + std::to_string(value) + "}"
                                : "UnknownUpToDegree{" + std::to_string(value) + "}";
  }
};

// Finite-dimensional basic algebra with an endpoint-graded basis:
// every basis element z satisfies z = e_{tgt(z)} z e_{src(z)}, and the
// vertex idempotents sum to 1. Multiplication is composition in the gf
// convention: mul(i, j) applies j first (nonzero needs tgt(j) == src(i)).
class FinDimAlgebra {
 public:
  using SVec = std::vector<std::pair<int, Rat>>;  // sorted by basis index

  struct BasisElt {
    std::string label;
    int src = -1, tgt = -1;
    std::optional<Path> path;  // present for path-basis algebras
  };

  std::vector<std::string> vertex_labels;
  std::vector<BasisElt> basis;
  std::vector<int> idem;  // vertex -> basis index of e_v
  Certificate cert;

  int dim() const { return (int)basis.size(); }
  int num_vertices() const { return (int)vertex_labels.size(); }
  int src(int i) const { return basis[i].src; }
  int tgt(int i) const { return basis[i].tgt; }

  void set_product(int i, int j, SVec v);
  const SVec& product(int i, int j) const;
  SVec mul(const SVec& x, const SVec& y) const;
  static SVec unit_vec(int i) { return {{i, Rat(1)}}; }
  static SVec add(const SVec& x, const SVec& y);
  static SVec scale(const SVec& x, const Rat& c);

  // Basis indices from u to v (src == u, tgt == v).
  std::vector<int> component(int u, int v) const;

  bool check_unit() const;
  bool check_associativity_exhaustive() const;
  // Columns span the Jacobson radical (Dickson trace-form criterion;
  // exact over the rationals).
  Mat radical_basis() const;
  // For the algebras built here the radical is spanned by the
  // non-idempotent basis elements; verified against the trace form.
  bool radical_is_nonidempotent_span() const;

  void finish();  // validates shape invariants, throws on violation

 private:
  std::vector<SVec> table_;
};

// Quotient of the path algebra by a completed rewriting system,
// together with the system for reducing arbitrary elements.
struct BoundQuiverAlgebra {
  FinDimAlgebra alg;
  RewritingSystem rw;
  // Coordinates of an arbitrary element's normal form in the basis.
  FinDimAlgebra::SVec express(const AlgebraElement& x) const;
  const Quiver& quiver() const { return rw.quiver(); }
  int basis_index_of(const Path& p) const;
};

// Irreducible paths up to the bound; Jacobi-finiteness certified by the
// closure argument (a length with no irreducible path).
BoundQuiverAlgebra quotient_basis(RewritingSystem rw);

// kQ / < dW/da : a unfrozen >.
BoundQuiverAlgebra relative_jacobian(const IceQuiver& iq, const Potential& w, int degree_bound = 0,
                                     std::optional<PathOrder> order = std::nullopt);

// Path algebra itself (no relations).
BoundQuiverAlgebra path_algebra(const Quiver& q, int degree_bound = 0);

// e J e at the frozen vertices; errors on an empty frozen set.
FinDimAlgebra boundary_algebra(const FinDimAlgebra& j, const std::vector<int>& frozen_vertices);

// A / A e A for e the sum of idempotents at the given vertices.
FinDimAlgebra quotient_by_idempotent_ideal(const FinDimAlgebra& a,
                                           const std::vector<int>& vertices);

// Vertex-preserving isomorphism search by basis pairing and scalar
// propagation; supports at most one non-idempotent basis element per
// component, which covers every algebra compared in this project.
struct ScaledIso {
  bool found = false;
  std::vector<int> vertex_map;        // A vertex -> B vertex
  std::vector<int> basis_map;         // A basis -> B basis
  std::vector<Rat> basis_scale;       // A basis -> scalar
  std::string reason;                 // when not found
};
ScaledIso find_scaled_isomorphism(const FinDimAlgebra& a, const FinDimAlgebra& b,
                                  std::optional<std::vector<int>> vertex_map_hint = std::nullopt);

}  // namespace iceq
