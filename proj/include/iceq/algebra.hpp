#pragma once

#include <map>
#include <string>
#include <vector>

#include "iceq/quiver.hpp"

namespace iceq {

// Finite rational linear combination of paths of one quiver. Zero
// coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement term(const Path& p, const Rat& c);

  void add(const Path& p, const Rat& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator-() const { return scaled(Rat(-1)); }
  AlgebraElement scaled(const Rat& c) const;

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const std::map<Path, Rat>& terms() const { return terms_; }
  Rat coeff(const Path& p) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  std::map<Path, Rat> terms_;
};

// Bilinear extension of path composition (gf convention, q first);
// non-composable products vanish.
AlgebraElement mul(const Quiver& q, const AlgebraElement& x, const AlgebraElement& y);

// All supported paths share endpoints (source, target); nullopt for 0.
struct Endpoints {
  int source, target;
};
std::optional<Endpoints> element_endpoints(const Quiver& q, const AlgebraElement& x);
bool element_homogeneous(const Quiver& q, const AlgebraElement& x, int* degree = nullptr);

// Canonical text form: terms in path order, "-b*b", "a'c' + 2*xy".
std::string element_str(const Quiver& q, const AlgebraElement& x);

// e_i x e_i: keep only terms that are loops at v.
AlgebraElement loop_part(const Quiver& q, const AlgebraElement& x, int v);

// Potential: rational combination of cycles up to rotation, stored via
// the lexicographically minimal rotation of the arrow-name sequence.
class Potential {
 public:
  static Potential zero() { return Potential(); }
  static Potential make(const Quiver& q, const std::vector<std::pair<Rat, Path>>& cycles);

  const std::vector<std::pair<Rat, Path>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AlgebraElement as_element() const;

 private:
  std::vector<std::pair<Rat, Path>> terms_;
};

Path canonical_rotation(const Quiver& q, const Path& cycle);

// d/da of a potential: each decomposition p = uav of each cycle
// contributes coeff * vu. Result runs t(a) -> s(a).
AlgebraElement cyclic_derivative(const Quiver& q, int arrow, const Potential& w);

// One term of J (x) V (x) J: coeff * (left tensor middle tensor right).
struct BimoduleTerm {
  Rat coeff;
  Path left;
  int middle;
  Path right;
};

// Occurrence expansion a_m...a_{i+1} (x) a_i (x) a_{i-1}...a_1 over the
// occurrences a_i = a, extended linearly; one term per occurrence.
std::vector<BimoduleTerm> delta(const Quiver& q, int arrow, const AlgebraElement& x);

}  // namespace iceq
