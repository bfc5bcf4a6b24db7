#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "iceq/ar.hpp"
#include "iceq/exactness.hpp"

using namespace iceq;

namespace {

std::vector<int> sorted_dims(const std::vector<Module>& ms) {
  std::vector<int> out;
  for (const auto& m : ms) out.push_back(m.total_dim());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("tau inverse over kA2") {
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A2"));
  Module p1 = projective_module(a.alg, 0);  // simple projective (1,0)
  Module p2 = projective_module(a.alg, 1);  // projective-injective (1,1)
  Module s2 = simple_module(a.alg, 1);      // simple injective (0,1)

  Module t1 = tau_inverse(p1, 1);
  CHECK(t1.dims == s2.dims);  // simple projective -> simple injective
  CHECK(tau_inverse(p2, 1).is_zero());
  CHECK(tau_inverse(s2, 1).is_zero());

  // tau of the identity morphism is the identity.
  ModuleMorphism idp1 = identity_morphism(p1);
  ModuleMorphism tid = tau_inverse_morphism(idp1, 1, t1, t1);
  for (size_t v = 0; v < tid.f.size(); ++v)
    CHECK(tid.f[v] == Mat::identity(t1.dims[v]));
}

TEST_CASE("nakayama inverse of an identity is an identity") {
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A2"));
  Module i1 = injective_module(a.alg, 0);
  Module p1 = projective_module(a.alg, 0);
  std::vector<Mat> id_mats;
  for (int d : i1.dims) id_mats.push_back(Mat::identity(d));
  ModuleMorphism nu = nakayama_inverse(a.alg, id_mats, {0}, {0}, p1, p1);
  for (size_t v = 0; v < nu.f.size(); ++v) CHECK(nu.f[v] == Mat::identity(p1.dims[v]));
}

TEST_CASE("indecomposables of Dynkin quivers count positive roots") {
  auto count = [](const char* type) {
    BoundQuiverAlgebra a = path_algebra(dynkin_quiver(type));
    return indecomposables_dynkin(a).size();
  };
  CHECK(count("A1") == 1);
  CHECK(count("A3") == 6);
  CHECK(count("A4") == 10);
  CHECK(count("D4") == 12);

  BoundQuiverAlgebra a2alg = path_algebra(dynkin_quiver("A2"));
  auto a2 = indecomposables_dynkin(a2alg);
  CHECK(a2.size() == 3);
  std::set<std::vector<int>> dimvecs;
  for (const auto& m : a2) dimvecs.insert(m.dims);
  CHECK(dimvecs ==
        std::set<std::vector<int>>{{1, 0}, {1, 1}, {0, 1}});

  Quiver bad;
  bad.add_vertex("1");
  bad.add_vertex("2");
  bad.add_arrow("x", "1", "2");
  bad.add_arrow("y", "1", "2");  // Kronecker: not a tree
  BoundQuiverAlgebra badalg = path_algebra(bad);
  CHECK_THROWS_AS(indecomposables_dynkin(badalg), InputError);
}

TEST_CASE("tau kills injectives and only injectives (A1-A4)") {
  for (const char* type : {"A1", "A2", "A3", "A4"}) {
    BoundQuiverAlgebra a = path_algebra(dynkin_quiver(type));
    auto ind = indecomposables_dynkin(a);
    // injective dim vectors
    std::set<std::vector<int>> inj;
    for (int v = 0; v < a.alg.num_vertices(); ++v)
      inj.insert(injective_module(a.alg, v).dims);
    for (const auto& m : ind) {
      // rebuild over a.alg so the algebra pointers agree
      Module mm = m;
      bool is_inj = inj.count(mm.dims) > 0;
      CHECK(tau_inverse(mm, 1).is_zero() == is_inj);
    }
  }
}

TEST_CASE("Auslander algebra of kA2") {
  FinDimAlgebra aus = auslander_algebra(dynkin_quiver("A2"));
  CHECK(aus.dim() == 5);
  CHECK(aus.num_vertices() == 3);
  CHECK(aus.check_associativity_exhaustive());
  CHECK(aus.radical_is_nonidempotent_span());
  DimResult g = global_dimension(aus, 5);
  CHECK_FALSE(g.exceeded);
  CHECK(g.value == 2);
  CHECK_FALSE(self_injectivity(aus));

  // isomorphic to the path algebra of 1 -> 2 -> 3 with the length-2 relation
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("u", "1", "2");
  q.add_arrow("v", "2", "3");
  AlgebraElement rel = AlgebraElement::term(q.path_from_names({"v", "u"}), Rat(1));
  BoundQuiverAlgebra presented =
      quotient_basis(complete_rewriting(q, {rel}, PathOrder::declaration_order(q), 12));
  ScaledIso iso = find_scaled_isomorphism(presented.alg, aus);
  CHECK(iso.found);
}

TEST_CASE("higher end algebra of A2 and its boundary") {
  HigherEndAlgebra he = higher_end_algebra(dynkin_quiver("A2"), 1);
  auto [h0, frozen] = extract_h0_algebra(he);
  CHECK(h0.dim() == 7);
  CHECK(h0.num_vertices() == 3);
  CHECK(frozen.size() == 2);
  CHECK(h0.check_associativity_exhaustive());
  DimResult g = global_dimension(h0, 6);
  CHECK_FALSE(g.exceeded);
  CHECK(g.value == 3);  // sharp: pdims of the three simples are 1, 2, 3

  // Grading law: grades add under composition.
  for (int i = 0; i < h0.dim(); ++i)
    for (int j = 0; j < h0.dim(); ++j)
      for (const auto& [k, c] : h0.product(i, j))
        CHECK(he.basis_grade[k] == he.basis_grade[i] + he.basis_grade[j]);

  // Degree-0 part is the Auslander algebra.
  int grade0 = 0;
  for (int g0 : he.basis_grade)
    if (g0 == 0) ++grade0;
  CHECK(grade0 == 5);

  // Oracle: dim h0 = sum over (L, M, i) of dim Hom(L, tau^{-i} M),
  // recomputed by an independent double loop over the indecomposables.
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A2"));
  auto ind = indecomposables_dynkin(a);
  int total = 0;
  for (const auto& l : ind)
    for (const auto& m : ind) {
      Module cur = m;
      for (;;) {
        total += hom_dim(l, cur);
        cur = tau_inverse(cur, 1);
        if (cur.is_zero()) break;
      }
    }
  CHECK(total == h0.dim());

  // Boundary at the frozen idempotent is the preprojective algebra.
  FinDimAlgebra bprime = boundary_algebra(h0, frozen);
  CHECK(bprime.dim() == 4);
  BoundQuiverAlgebra pre = preprojective_classical(dynkin_quiver("A2"));
  ScaledIso iso = find_scaled_isomorphism(pre.alg, bprime);
  CHECK(iso.found);
}

TEST_CASE("preprojective algebras classical vs higher (A1, A2, A3)") {
  struct Row {
    const char* type;
    int dim;
  } rows[] = {{"A1", 1}, {"A2", 4}, {"A3", 10}};
  for (const auto& r : rows) {
    BoundQuiverAlgebra classical = preprojective_classical(dynkin_quiver(r.type));
    REQUIRE(classical.alg.cert.kind == Certificate::JacobiFinite);
    CHECK(classical.alg.dim() == r.dim);
    FinDimAlgebra higher = higher_preprojective(dynkin_quiver(r.type), 1);
    CHECK(higher.dim() == r.dim);
    ScaledIso iso = find_scaled_isomorphism(classical.alg, higher);
    CHECK(iso.found);
    CHECK(self_injectivity(higher) == self_injectivity(classical.alg));
  }
}

TEST_CASE("self-injectivity of the preprojective algebras") {
  CHECK(self_injectivity(preprojective_classical(dynkin_quiver("A2")).alg));
  CHECK(self_injectivity(preprojective_classical(dynkin_quiver("A3")).alg));
  CHECK_FALSE(self_injectivity(path_algebra(dynkin_quiver("A2")).alg));
}

TEST_CASE("stable Auslander algebra of A2 has dimension 1") {
  FinDimAlgebra st = stable_auslander(dynkin_quiver("A2"));
  CHECK(st.dim() == 1);
  CHECK(st.num_vertices() == 1);
}

TEST_CASE("higher end interface rejects n != 1") {
  CHECK_THROWS_AS(higher_end_algebra(dynkin_quiver("A2"), 2), UnsupportedError);
}

TEST_CASE("cluster-tilting module over the boundary of H0(A2)") {
  HigherEndAlgebra he = higher_end_algebra(dynkin_quiver("A2"), 1);
  auto [h0, frozen] = extract_h0_algebra(he);
  FinDimAlgebra bprime = boundary_algebra(h0, frozen);
  REQUIRE(bprime.dim() == 4);

  Module t = cluster_tilting_module(h0, frozen, bprime);
  CHECK(t.total_dim() == 5);

  auto summands = cluster_tilting_summands(h0, frozen, bprime);
  CHECK(summands.size() == 3);
  std::vector<int> dims;
  for (const auto& [w, m] : summands) dims.push_back(m.total_dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 2, 2});
  int sum = 0;
  for (const auto& [w, m] : summands) sum += m.total_dim();
  CHECK(sum == t.total_dim());
  // Each summand is indecomposable: local endomorphism ring.
  for (const auto& [w, m] : summands) CHECK(hom_dim(m, m) == 1);

  // Rigidity at level 2: Ext^1(T, T) = 0.
  CHECK(check_rigidity(t, 2, 4));
  // At level 3 the check includes Ext^2(T, T) which is nonzero here
  // (Ext^2(S, S) = Ext^1(Omega S, S) = 1 over the preprojective algebra).
  CHECK_FALSE(check_rigidity(t, 3, 4));

  // End(T) matches H0 with matching structure constants.
  FinDimAlgebra endt = endomorphism_algebra(summands);
  CHECK(endt.dim() == 7);
  ScaledIso iso = find_scaled_isomorphism(h0, endt);
  CHECK(iso.found);
}

TEST_CASE("hom functor dimensions over A2 via the graded category") {
  // dim Hom(P_big, tau^{-1} P_small) = 1 = dim Hom(I_small, tau^{-1} P_small)
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A2"));
  Module p1 = projective_module(a.alg, 0);
  Module p2 = projective_module(a.alg, 1);
  Module t1 = tau_inverse(p1, 1);  // simple injective
  CHECK(hom_dim(p2, t1) == 1);
  CHECK(hom_dim(t1, t1) == 1);
  CHECK(hom_dim(p1, t1) == 0);
}

TEST_CASE("tau inverse is functorial on composites") {
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A3"));
  Module p1 = projective_module(a.alg, 0);
  Module p2 = projective_module(a.alg, 1);
  auto homs12 = hom_basis(p1, p2);
  auto homs2_s2 = hom_basis(p2, simple_module(a.alg, 1));
  REQUIRE(homs12.size() == 1);
  // g: P_2 ->> S_2 does not literally land in a tau image; instead use
  // P_1 -> P_2 -> P_3 over A3.
  Module p3 = projective_module(a.alg, 2);
  auto homs23 = hom_basis(p2, p3);
  REQUIRE(homs23.size() == 1);
  const ModuleMorphism& f = homs12[0];
  const ModuleMorphism& g = homs23[0];
  ModuleMorphism gf = compose(g, f);

  Module t1 = tau_inverse(p1, 1);
  Module t2 = tau_inverse(p2, 1);
  Module t3 = tau_inverse(p3, 1);
  REQUIRE_FALSE(t1.is_zero());
  REQUIRE_FALSE(t2.is_zero());
  // P_3 is projective-injective over linear A3: tau kills it, and then
  // both routes give the zero morphism.
  CHECK(t3.is_zero());
  ModuleMorphism tf = tau_inverse_morphism(f, 1, t1, t2);
  CHECK(tf.commutes());
  ModuleMorphism tg = tau_inverse_morphism(g, 1, t2, t3);
  ModuleMorphism tgf = tau_inverse_morphism(gf, 1, t1, t3);
  ModuleMorphism comp = compose(tg, tf);
  for (size_t v = 0; v < tgf.f.size(); ++v) CHECK(tgf.f[v] == comp.f[v]);

  // A composite that survives: S_1 = P_1 -> P_2 with tau images S_2, (0,1,1).
  // tau(g . f) = tau(g) . tau(f) checked above in the degenerate case;
  // check a surviving square via the identity.
  ModuleMorphism idp1 = identity_morphism(p1);
  ModuleMorphism t_id = tau_inverse_morphism(idp1, 1, t1, t1);
  ModuleMorphism tf_id = tau_inverse_morphism(f, 1, t1, t2);
  ModuleMorphism left = compose(tf_id, t_id);
  for (size_t v = 0; v < left.f.size(); ++v) CHECK(left.f[v] == tf.f[v]);
}

TEST_CASE("stable Auslander of A1 degenerates to the zero algebra") {
  FinDimAlgebra st = stable_auslander(dynkin_quiver("A1"));
  CHECK(st.dim() == 0);
  CHECK(st.num_vertices() == 0);
}

TEST_CASE("hom_basis morphisms commute with the action") {
  BoundQuiverAlgebra a = path_algebra(dynkin_quiver("A3"));
  auto ind = indecomposables_dynkin(a);
  for (const auto& l : ind)
    for (const auto& m : ind)
      for (const auto& h : hom_basis(l, m)) CHECK(h.commutes());
}

TEST_CASE("D4 path algebra smoke test through the higher machinery") {
  FinDimAlgebra aus = auslander_algebra(dynkin_quiver("D4"));
  CHECK(aus.num_vertices() == 12);
  CHECK(aus.check_unit());
}
