#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "iceq/findim.hpp"

using namespace iceq;

// std::set<AlgebraElement> needs an order.
namespace iceq {
static bool operator<(const AlgebraElement& x, const AlgebraElement& y) {
  auto xi = x.terms().begin();
  auto yi = y.terms().begin();
  for (; xi != x.terms().end() && yi != y.terms().end(); ++xi, ++yi) {
    if (xi->first != yi->first) return xi->first < yi->first;
    if (xi->second != yi->second) return xi->second < yi->second;
  }
  return xi == x.terms().end() && yi != y.terms().end();
}
}  // namespace iceq

namespace {

IceQuiver ex1_ice() {
  IceQuiver ice;
  ice.quiver.add_vertex("1");
  ice.quiver.add_vertex("2");
  ice.quiver.add_vertex("3");
  ice.quiver.add_arrow("a", "2", "1");
  ice.quiver.add_arrow("b", "3", "2");
  ice.frozen_vertices = {0, 1};
  ice.frozen_arrows = {0};
  return ice;
}

struct Ex2 {
  IceQuiver ice;
  Potential w;
};

Ex2 ex2_ice() {
  Ex2 e;
  e.ice.quiver.add_vertex("1");
  e.ice.quiver.add_vertex("2");
  e.ice.quiver.add_vertex("3");
  e.ice.quiver.add_arrow("a'", "1", "2");
  e.ice.quiver.add_arrow("b'", "2", "3");
  e.ice.quiver.add_arrow("c'", "3", "1");
  e.ice.frozen_vertices = {0, 1};
  e.ice.frozen_arrows = {0};
  e.w = Potential::make(e.ice.quiver,
                        {{Rat(1), e.ice.quiver.path_from_names({"c'", "b'", "a'"})}});
  return e;
}

// Independent oracle: enumerate every composable path up to maxlen,
// reduce each by the system, count distinct normal forms.
int brute_force_dimension(const BoundQuiverAlgebra& a, int maxlen) {
  const Quiver& q = a.quiver();
  std::set<AlgebraElement> forms;
  std::vector<Path> level;
  for (const auto& v : q.vertices()) level.push_back(q.lazy(v.id));
  for (int len = 0; len <= maxlen && !level.empty(); ++len) {
    for (const auto& p : level)
      forms.insert(a.rw.reduce(AlgebraElement::term(p, Rat(1))));
    std::vector<Path> next;
    for (const auto& p : level)
      for (const auto& ar : q.arrows()) {
        if (ar.source != q.target(p)) continue;
        Path np = p;
        np.arrows.push_back(ar.id);
        next.push_back(np);
      }
    level = std::move(next);
  }
  forms.erase(AlgebraElement());
  return (int)forms.size();
}

}  // namespace

TEST_CASE("completion of the triangle relations is immediate") {
  Ex2 e = ex2_ice();
  const Quiver& q = e.ice.quiver;
  std::vector<AlgebraElement> rels;
  for (int a : e.ice.unfrozen_arrows()) rels.push_back(cyclic_derivative(q, a, e.w));
  RewritingSystem rw = complete_rewriting(q, rels, PathOrder::declaration_order(q), 12);
  CHECK(rw.complete());
  REQUIRE(rw.rules().size() == 2);
  for (const auto& r : rw.rules()) CHECK(r.tail.is_zero());
  std::set<std::string> leads;
  for (const auto& r : rw.rules()) leads.insert(q.path_str(r.lead));
  CHECK(leads == std::set<std::string>{"a'c'", "b'a'"});
}

TEST_CASE("empty relation set gives the free system") {
  Quiver q;
  q.add_vertex("1");
  RewritingSystem rw = complete_rewriting(q, {}, PathOrder::declaration_order(q), 12);
  CHECK(rw.complete());
  CHECK(rw.rules().empty());
}

TEST_CASE("preprojective A2 relations terminate as two monomial rules") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("a~", "2", "1");
  std::vector<AlgebraElement> rels;
  rels.push_back(AlgebraElement::term(q.path_from_names({"a~", "a"}), Rat(-1)));
  rels.push_back(AlgebraElement::term(q.path_from_names({"a", "a~"}), Rat(1)));
  RewritingSystem rw = complete_rewriting(q, rels, PathOrder::declaration_order(q), 12);
  CHECK(rw.complete());
  CHECK(rw.rules().size() == 2);
  BoundQuiverAlgebra alg = quotient_basis(std::move(rw));
  CHECK(alg.alg.cert.kind == Certificate::JacobiFinite);
  CHECK(alg.alg.dim() == 4);
}

TEST_CASE("relative Jacobian of example 2 has dimension 7") {
  Ex2 e = ex2_ice();
  BoundQuiverAlgebra j = relative_jacobian(e.ice, e.w);
  REQUIRE(j.alg.cert.kind == Certificate::JacobiFinite);
  CHECK(j.alg.dim() == 7);
  std::set<std::string> labels;
  for (const auto& b : j.alg.basis) labels.insert(b.label);
  CHECK(labels ==
        std::set<std::string>{"e_1", "e_2", "e_3", "a'", "b'", "c'", "c'b'"});
  CHECK(j.alg.dim() == brute_force_dimension(j, 6));
  CHECK(j.alg.check_associativity_exhaustive());
  CHECK(j.alg.radical_is_nonidempotent_span());
}

TEST_CASE("relative Jacobian of example 1 has dimension 6") {
  IceQuiver ice = ex1_ice();
  BoundQuiverAlgebra j = relative_jacobian(ice, Potential::zero());
  REQUIRE(j.alg.cert.kind == Certificate::JacobiFinite);
  CHECK(j.alg.dim() == 6);
  std::set<std::string> labels;
  for (const auto& b : j.alg.basis) labels.insert(b.label);
  CHECK(labels == std::set<std::string>{"e_1", "e_2", "e_3", "a", "b", "ab"});
  CHECK(j.alg.dim() == brute_force_dimension(j, 6));
  CHECK(j.alg.check_associativity_exhaustive());
}

TEST_CASE("fully frozen triangle gives the whole (infinite) path algebra") {
  Ex2 e = ex2_ice();
  IceQuiver all;
  all.quiver = e.ice.quiver;
  all.frozen_vertices = {0, 1, 2};
  all.frozen_arrows = {0, 1, 2};
  BoundQuiverAlgebra j = relative_jacobian(all, e.w);
  CHECK(j.alg.cert.kind == Certificate::UnknownUpToDegree);
}

TEST_CASE("one-loop quiver without relations is Unknown at the bound") {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("l", "1", "1");
  BoundQuiverAlgebra a = path_algebra(q, 12);
  CHECK(a.alg.cert.kind == Certificate::UnknownUpToDegree);
  CHECK(a.alg.cert.value == 12);
}

TEST_CASE("degree bound precondition is enforced") {
  Ex2 e = ex2_ice();
  const Quiver& q = e.ice.quiver;
  std::vector<AlgebraElement> rels;
  for (int a : e.ice.unfrozen_arrows()) rels.push_back(cyclic_derivative(q, a, e.w));
  CHECK_THROWS_AS(complete_rewriting(q, rels, PathOrder::declaration_order(q), 3), InputError);
}

TEST_CASE("boundary algebra of example 2 at the frozen vertices") {
  Ex2 e = ex2_ice();
  BoundQuiverAlgebra j = relative_jacobian(e.ice, e.w);
  FinDimAlgebra b = boundary_algebra(j.alg, {0, 1});
  CHECK(b.dim() == 4);
  std::set<std::string> labels;
  for (const auto& bb : b.basis) labels.insert(bb.label);
  CHECK(labels == std::set<std::string>{"e_1", "e_2", "a'", "c'b'"});
  CHECK(b.check_associativity_exhaustive());

  FinDimAlgebra whole = boundary_algebra(j.alg, {0, 1, 2});
  CHECK(whole.dim() == j.alg.dim());

  CHECK_THROWS_AS(boundary_algebra(j.alg, {}), InputError);
}

TEST_CASE("normal forms are strategy independent (confluence)") {
  std::mt19937_64 rng(424242);
  Ex2 e = ex2_ice();
  BoundQuiverAlgebra j = relative_jacobian(e.ice, e.w);
  BoundQuiverAlgebra pre = [&] {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_vertex("3");
    q.add_arrow("x", "1", "2");
    q.add_arrow("y", "2", "3");
    q.add_arrow("x~", "2", "1");
    q.add_arrow("y~", "3", "2");
    AlgebraElement r1 = AlgebraElement::term(q.path_from_names({"x~", "x"}), Rat(-1));
    AlgebraElement r2 = AlgebraElement::term(q.path_from_names({"x", "x~"}), Rat(1)) -
                        AlgebraElement::term(q.path_from_names({"y~", "y"}), Rat(1));
    AlgebraElement r3 = AlgebraElement::term(q.path_from_names({"y", "y~"}), Rat(1));
    return quotient_basis(
        complete_rewriting(q, {r1, r2, r3}, PathOrder::declaration_order(q), 12));
  }();
  CHECK(pre.alg.cert.kind == Certificate::JacobiFinite);
  CHECK(pre.alg.dim() == 10);  // preprojective algebra of A3

  for (const BoundQuiverAlgebra* alg : {&j, &pre}) {
    const Quiver& q = alg->quiver();
    std::uniform_int_distribution<int> pick(0, alg->alg.dim() - 1);
    int trials = 0;
    while (trials < 100) {
      const auto& p1 = alg->alg.basis[pick(rng)].path;
      const auto& p2 = alg->alg.basis[pick(rng)].path;
      auto comp = q.compose(*p1, *p2);
      if (!comp) continue;
      ++trials;
      AlgebraElement x = AlgebraElement::term(*comp, Rat(1));
      CHECK(alg->rw.reduce(x, ReduceStrategy::LeftmostLowestRule) ==
            alg->rw.reduce(x, ReduceStrategy::RightmostHighestRule));
    }
  }
}

TEST_CASE("user-specified arrow order validates its input") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("a~", "2", "1");
  AlgebraElement rel = AlgebraElement::term(q.path_from_names({"a", "a~"}), Rat(1));
  RewritingSystem r1 = complete_rewriting(q, {rel}, PathOrder::from_names(q, {"a", "a~"}), 12);
  CHECK(r1.rules().size() == 1);
  CHECK(q.path_str(r1.rules()[0].lead) == "aa~");
  CHECK_THROWS_AS(PathOrder::from_names(q, {"a", "a"}), InputError);
  CHECK_THROWS_AS(PathOrder::from_names(q, {"a"}), InputError);
}

TEST_CASE("the empty quiver has the zero algebra, certified") {
  Quiver q;
  BoundQuiverAlgebra a = path_algebra(q);
  CHECK(a.alg.cert.kind == Certificate::JacobiFinite);
  CHECK(a.alg.dim() == 0);
}
