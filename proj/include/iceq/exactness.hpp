#pragma once

#include <string>
#include <vector>

#include "iceq/algebra.hpp"
#include "iceq/findim.hpp"
#include "iceq/homology.hpp"

namespace iceq {

// a^{-1} c = b when c = ab, extended linearly; 0 otherwise.
AlgebraElement a_inverse(const Quiver& q, int arrow, const AlgebraElement& x);

// Complex of projective right modules augmented to the simple S_v,
// positions listed left to right as displayed; maps[k] runs from
// positions[k] to positions[k+1] (entries in J, acting by left
// multiplication). The rightmost position surjects onto S_v.
struct ModuleComplex {
  int vertex = -1;
  bool frozen = false;
  std::vector<std::vector<int>> positions;  // vertex lists
  std::vector<AMat> maps;
};

// 0 -> e_vJ -> (+)_{s(b)=v} e_{t(b)}J -> (+)_{t(a)=v} e_{s(a)}J -> e_vJ -> S_v -> 0
ModuleComplex unfrozen_simple_complex(const BoundQuiverAlgebra& j, const IceQuiver& iq,
                                      const Potential& w, int v);

// 0 -> (+)_{unfrozen b, s(b)=v} e_{t(b)}J -> (+)_{t(a)=v} e_{s(a)}J -> e_vJ -> S_v -> 0
ModuleComplex frozen_simple_complex(const BoundQuiverAlgebra& j, const IceQuiver& iq,
                                    const Potential& w, int v);

// Scalar realization on the path bases; the last matrix is the
// augmentation onto S_v.
std::vector<Mat> realize_scalar(const ModuleComplex& c, const FinDimAlgebra& j);

struct ExactnessReport {
  int vertex = -1;
  bool frozen = false;
  std::vector<int> position_dims;   // including the simple at the end
  std::vector<int> homology_dims;   // one per projective position
  bool compositions_vanish = true;  // symbolic and scalar
  bool exact = false;
  // First failing position and a cycle there that is not a boundary,
  // in the path-basis coordinates of that position.
  int witness_position = -1;
  std::vector<Rat> witness_vector;
};

ExactnessReport check_exactness(const ModuleComplex& c, const BoundQuiverAlgebra& j);

struct ConcentrationVerdict {
  enum Kind { Concentrated, NotConcentrated, Inapplicable } kind = Inapplicable;
  std::string reason;               // for Inapplicable
  int witness_vertex = -1;          // for NotConcentrated
  std::vector<ExactnessReport> per_vertex;
  Certificate certificate;

  std::string str() const {
    switch (kind) {
      case Concentrated: return "CONCENTRATED";
      case NotConcentrated: return "NOT_CONCENTRATED";
      default: return "INAPPLICABLE";
    }
  }
};

// Theorem hypotheses enforced: F full and Jacobi-finiteness certified.
ConcentrationVerdict degree0_verdict(const IceQuiver& iq, const Potential& w,
                                     int degree_bound = 0);

}  // namespace iceq
