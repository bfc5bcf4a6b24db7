#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "iceq/algebra.hpp"
#include "iceq/quiver.hpp"

namespace iceq {

enum class GenKind { Base, Star, TLoop, Tilde, RLoop };

// Graded quiver together with the differential on generators. The
// differential extends to the whole graded path algebra by the graded
// Leibniz rule d(uv) = d(u)v + (-1)^{|u|} u d(v).
class DgPresentation {
 public:
  Quiver gq;
  std::map<int, AlgebraElement> d;  // arrow id -> value in gq
  std::map<int, GenKind> kind;

  DgPresentation() = default;
  DgPresentation(const DgPresentation& o) : gq(o.gq), d(o.d), kind(o.kind), cache_(o.cache_) {}
  DgPresentation& operator=(const DgPresentation& o) {
    if (this != &o) {
      gq = o.gq;
      d = o.d;
      kind = o.kind;
      std::lock_guard<std::mutex> lock(cache_mutex_);
      cache_ = o.cache_;
    }
    return *this;
  }

  AlgebraElement d_of(const AlgebraElement& x) const;
  AlgebraElement d_of_path(const Path& p) const;

  std::string printer() const;  // canonical generator table

 private:
  // Leibniz extension memo; guarded so presentations can be shared
  // across threads.
  mutable std::map<Path, AlgebraElement> cache_;
  mutable std::mutex cache_mutex_;
};

// Degree-preserving functor given on generators; commutes with d when
// verify_functor passes.
struct GeneratorFunctor {
  DgPresentation domain;
  DgPresentation codomain;
  std::map<int, int> vertex_map;            // domain vertex -> codomain vertex
  std::map<int, AlgebraElement> generator;  // domain arrow -> codomain element

  AlgebraElement apply(const AlgebraElement& x) const;
};

struct DgCheckItem {
  std::string generator;
  bool ok;
  std::string detail;
};

struct DgCheckReport {
  std::vector<DgCheckItem> items;
  bool pass = true;
  void add(const std::string& g, bool ok, const std::string& detail = "");
};

// Arrows of Q in degree 0, a*: t(a)->s(a) in degree -1 for unfrozen a,
// loops t_i in degree -2 for unfrozen i; d(a)=0, d(a*)=dW/da,
// d(t_i) = e_i (sum over unfrozen a of [a,a*]) e_i.
DgPresentation build_relative_ginzburg(const IceQuiver& iq, const Potential& w);

// Arrows a and reversed arrows a~ in degree 0, loops r_i in degree -1;
// d(r_i) = e_i (sum over a of [a,a~]) e_i. Undeformed.
DgPresentation build_pi2(const Quiver& f);

// i -> i, a -> a, a~ -> -dW/da, r_i -> e_i (sum unfrozen [a,a*]) e_i.
GeneratorFunctor ginzburg_functor(const IceQuiver& iq, const Potential& w);

GeneratorFunctor identity_functor(const DgPresentation& p);

// Checks the degree invariants and d(d(g)) == 0 for every generator.
DgCheckReport verify_d_squared(const DgPresentation& p);

// Checks degree preservation and d(G(g)) == G(d(g)) per generator.
DgCheckReport verify_functor(const GeneratorFunctor& g);

// Delete frozen vertices, incident arrows, and cycles through them.
std::pair<Quiver, Potential> cofiber_quotient(const IceQuiver& iq, const Potential& w);

struct H0Presentation {
  Quiver q;                                // degree-0 subquiver
  std::vector<AlgebraElement> relations;   // d of the degree -1 generators
};

H0Presentation h0_presentation(const DgPresentation& p);

}  // namespace iceq
