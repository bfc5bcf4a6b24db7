#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "iceq/algebra.hpp"
#include "iceq/iqp_io.hpp"
#include "iceq/linalg.hpp"
#include "iceq/quiver.hpp"

using namespace iceq;

namespace {

// Example 1: b: 3 -> 2, a: 2 -> 1; frozen 1, 2 and arrow a; W = 0.
IqpFile example1() {
  IqpFile f;
  Quiver& q = f.ice.quiver;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "2", "1");
  q.add_arrow("b", "3", "2");
  f.ice.frozen_vertices = {0, 1};
  f.ice.frozen_arrows = {0};
  return f;
}

// Example 2: a': 1 -> 2 frozen, b': 2 -> 3, c': 3 -> 1; W' = c'b'a'.
IqpFile example2() {
  IqpFile f;
  Quiver& q = f.ice.quiver;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a'", "1", "2");
  q.add_arrow("b'", "2", "3");
  q.add_arrow("c'", "3", "1");
  f.ice.frozen_vertices = {0, 1};
  f.ice.frozen_arrows = {0};
  f.potential = Potential::make(q, {{Rat(1), q.path_from_names({"c'", "b'", "a'"})}});
  return f;
}

std::mt19937_64 rng(20240801);

Quiver random_quiver(int max_v, int max_a) {
  std::uniform_int_distribution<int> nv(1, max_v), na(0, max_a);
  Quiver q;
  int n = nv(rng);
  for (int i = 0; i < n; ++i) q.add_vertex("v" + std::to_string(i));
  int m = na(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i)
    q.add_arrow_ids("x" + std::to_string(i), pick(rng), pick(rng));
  return q;
}

std::optional<Path> random_path(const Quiver& q, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  int l = len(rng);
  std::uniform_int_distribution<int> pv(0, q.num_vertices() - 1);
  if (l == 0) return q.lazy(pv(rng));
  std::uniform_int_distribution<int> pa(0, q.num_arrows() - 1);
  if (q.num_arrows() == 0) return q.lazy(pv(rng));
  std::vector<int> arrows{pa(rng)};
  for (int i = 1; i < l; ++i) {
    int at = q.arrow(arrows.back()).target;
    std::vector<int> outs = q.arrows_from(at);
    if (outs.empty()) break;
    std::uniform_int_distribution<int> po(0, (int)outs.size() - 1);
    arrows.push_back(outs[po(rng)]);
  }
  return q.path_from_arrow_ids(arrows);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and checked") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK((Rat(7) / Rat(-2)).str() == "-7/2");
  CHECK(Rat::parse("-3/2") == Rat(-3, 2));
  CHECK(Rat::parse("0") == Rat(0));
  CHECK_THROWS(Rat::parse("3//2"));
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse(""));
  CHECK_THROWS(Rat(1, 0));
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rat(8), std::overflow_error);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(1, 3));
}

TEST_CASE("exact linear algebra kernel/rank/solve/inverse") {
  using iceq::Mat;
  Mat m(2, 3);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(0, 2) = Rat(3);
  m.at(1, 0) = Rat(2);
  m.at(1, 1) = Rat(4);
  m.at(1, 2) = Rat(6);
  CHECK(iceq::rank(m) == 1);
  Mat k = iceq::kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());

  Mat a(2, 2);
  a.at(0, 0) = Rat(2);
  a.at(0, 1) = Rat(1);
  a.at(1, 0) = Rat(1);
  a.at(1, 1) = Rat(1);
  auto inv = iceq::inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == Mat::identity(2));
  auto x = iceq::solve(a, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));
  // inconsistent system
  Mat bad(2, 1);
  bad.at(0, 0) = Rat(1);
  bad.at(1, 0) = Rat(2);
  CHECK_FALSE(iceq::solve(bad, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("compose follows the gf convention") {
  IqpFile f = example1();
  const Quiver& q = f.ice.quiver;
  Path ea = q.lazy(0);
  CHECK(*q.compose(ea, ea) == ea);

  Path a = q.path_from_names({"a"});
  Path b = q.path_from_names({"b"});
  auto ab = q.compose(a, b);
  REQUIRE(ab.has_value());
  CHECK(q.source(*ab) == q.require_vertex("3"));
  CHECK(q.target(*ab) == q.require_vertex("1"));
  CHECK(q.path_str(*ab) == "ab");
  CHECK_FALSE(q.compose(b, a).has_value());
}

TEST_CASE("compose associativity and units on random quivers") {
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = random_quiver(5, 8);
    auto p1 = random_path(q, 3);
    auto p2 = random_path(q, 3);
    auto p3 = random_path(q, 3);
    if (!p1 || !p2 || !p3) continue;
    // units
    CHECK(*q.compose(q.lazy(q.target(*p1)), *p1) == *p1);
    CHECK(*q.compose(*p1, q.lazy(q.source(*p1))) == *p1);
    // associativity where defined
    auto q12 = q.compose(*p1, *p2);
    auto q23 = q.compose(*p2, *p3);
    if (q12 && q23) {
      auto l = q.compose(*q12, *p3);
      auto r = q.compose(*p1, *q23);
      REQUIRE(l.has_value());
      REQUIRE(r.has_value());
      CHECK(*l == *r);
    }
  }
}

TEST_CASE("multiply is bilinear and drops incomposables") {
  IqpFile f = example1();
  const Quiver& q = f.ice.quiver;
  AlgebraElement x = AlgebraElement::term(q.path_from_names({"a"}), Rat(2));
  AlgebraElement y = AlgebraElement::term(q.path_from_names({"b"}), Rat(3));
  AlgebraElement xy = mul(q, x, y);
  CHECK(xy.num_terms() == 1);
  CHECK(xy.coeff(q.path_from_names({"a", "b"})) == Rat(6));
  CHECK(mul(q, x, AlgebraElement()).is_zero());

  AlgebraElement apluse = x + AlgebraElement::term(q.lazy(0), Rat(0));
  CHECK(apluse == x);  // zero coefficients never stored
  AlgebraElement sum = AlgebraElement::term(q.path_from_names({"a"}), Rat(1)) +
                       AlgebraElement::term(q.lazy(2), Rat(1));
  AlgebraElement b1 = AlgebraElement::term(q.path_from_names({"b"}), Rat(1));
  AlgebraElement prod = mul(q, sum, b1);  // e_3 . b vanishes (b ends at 2)
  CHECK(prod.num_terms() == 1);
  CHECK(prod.coeff(q.path_from_names({"a", "b"})) == Rat(1));
}

TEST_CASE("cyclic derivative on the triangle potential") {
  IqpFile f = example2();
  const Quiver& q = f.ice.quiver;
  int cp = q.require_arrow("c'");
  AlgebraElement d = cyclic_derivative(q, cp, f.potential);
  CHECK(d.num_terms() == 1);
  CHECK(d.coeff(q.path_from_names({"b'", "a'"})) == Rat(1));
  // an arrow in no cycle of W
  Quiver q2;
  q2.add_vertex("1");
  q2.add_vertex("2");
  q2.add_arrow("u", "1", "2");
  q2.add_arrow("v", "2", "1");
  q2.add_arrow("w", "1", "2");
  Potential w = Potential::make(q2, {{Rat(1), q2.path_from_names({"v", "u"})}});
  CHECK(cyclic_derivative(q2, q2.require_arrow("w"), w).is_zero());
}

TEST_CASE("cyclic derivative with coefficient 2 on a 3-cycle") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  q.add_arrow("c", "3", "1");
  Potential w = Potential::make(q, {{Rat(2), q.path_from_names({"c", "b", "a"})}});
  AlgebraElement d = cyclic_derivative(q, q.require_arrow("b"), w);
  CHECK(d.num_terms() == 1);
  CHECK(d.coeff(q.path_from_names({"a", "c"})) == Rat(2));
}

TEST_CASE("cyclic derivative is rotation invariant") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  q.add_arrow("c", "3", "1");
  Path r1 = q.path_from_names({"c", "b", "a"});
  Path r2 = q.path_from_names({"a", "c", "b"});  // rotation of the same cycle
  Potential w1 = Potential::make(q, {{Rat(1), r1}});
  Potential w2 = Potential::make(q, {{Rat(1), r2}});
  for (const char* name : {"a", "b", "c"}) {
    int ar = q.require_arrow(name);
    CHECK(cyclic_derivative(q, ar, w1) == cyclic_derivative(q, ar, w2));
  }
  // and the two rotations canonicalize to the same stored cycle
  CHECK(w1.terms() == w2.terms());
}

TEST_CASE("delta expands occurrences") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  q.add_arrow("c", "3", "1");
  AlgebraElement cba = AlgebraElement::term(q.path_from_names({"c", "b", "a"}), Rat(1));
  auto d = delta(q, q.require_arrow("b"), cba);
  REQUIRE(d.size() == 1);
  CHECK(d[0].left == q.path_from_names({"c"}));
  CHECK(d[0].middle == q.require_arrow("b"));
  CHECK(d[0].right == q.path_from_names({"a"}));

  // loop quiver: two occurrences of a in aa
  Quiver ql;
  ql.add_vertex("1");
  ql.add_vertex("2");
  ql.add_arrow("c", "1", "1");
  ql.add_arrow("b", "1", "2");
  AlgebraElement cc = AlgebraElement::term(ql.path_from_names({"c", "c"}), Rat(1));
  CHECK(delta(ql, ql.require_arrow("b"), cc).empty());
  auto two = delta(ql, ql.require_arrow("c"), cc);
  REQUIRE(two.size() == 2);
  CHECK(two[0].left == ql.path_from_names({"c"}));
  CHECK(two[0].right == ql.lazy(0));
  CHECK(two[1].left == ql.lazy(0));
  CHECK(two[1].right == ql.path_from_names({"c"}));
}

TEST_CASE("delta cross-checks the cyclic derivative") {
  // For every cycle p and arrow a: #delta(a,p) = #occurrences and
  // sum of compose(right, left) = d/da(p).
  for (int trial = 0; trial < 100; ++trial) {
    Quiver q = random_quiver(4, 6);
    auto p = random_path(q, 4);
    if (!p || p->is_lazy() || q.source(*p) != q.target(*p)) continue;
    Potential w = Potential::make(q, {{Rat(1), *p}});
    const Path& canon = w.terms()[0].second;
    for (const auto& ar : q.arrows()) {
      auto d = delta(q, ar.id, AlgebraElement::term(canon, Rat(1)));
      size_t occurrences = 0;
      for (int a : canon.arrows)
        if (a == ar.id) ++occurrences;
      CHECK(d.size() == occurrences);
      AlgebraElement sum;
      for (const auto& t : d) {
        auto c = q.compose(t.right, t.left);
        REQUIRE(c.has_value());
        sum.add(*c, t.coeff);
      }
      CHECK(sum == cyclic_derivative(q, ar.id, w));
    }
  }
}

TEST_CASE("parse the shipped example files") {
  IqpFile f1 = parse_iqp_file(std::string(ICEQ_DATA_DIR) + "/example1.iqp");
  CHECK(f1.ice.quiver.num_vertices() == 3);
  CHECK(f1.ice.frozen_vertices.size() == 2);
  CHECK(f1.ice.frozen_arrows.size() == 1);
  CHECK(f1.potential.is_zero());
  CHECK(f1.ice.is_full());  // a is the only arrow between frozen vertices

  IqpFile f2 = parse_iqp_file(std::string(ICEQ_DATA_DIR) + "/example2.iqp");
  CHECK(f2.ice.is_full());
  CHECK(f2.potential.terms().size() == 1);
  const Quiver& q = f2.ice.quiver;
  CHECK(f2.potential.terms()[0].second == q.path_from_names({"c'", "b'", "a'"}));
}

TEST_CASE("serialize-parse round trip is the identity on canonical files") {
  for (const char* name : {"/example1.iqp", "/example2.iqp"}) {
    std::string path = std::string(ICEQ_DATA_DIR) + name;
    IqpFile f = parse_iqp_file(path);
    std::string ser = serialize_iqp(f);
    IqpFile f2 = parse_iqp(ser, "round-trip");
    CHECK(serialize_iqp(f2) == ser);
    // identity on the canonical file itself
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    CHECK(ser == ss.str());
  }
}

TEST_CASE("parser rejects the malformed corpus") {
  const char* files[] = {
      "bad_duplicate_vertex.iqp",  "bad_duplicate_arrow.iqp",  "bad_dangling_source.iqp",
      "bad_frozen_vertex_unknown.iqp", "bad_frozen_arrow_endpoint.iqp", "bad_loop.iqp",
      "bad_noncycle_potential.iqp", "bad_malformed_rational.iqp", "bad_broken_json.iqp",
      "bad_unknown_key.iqp", "bad_noncomposable_cycle.iqp"};
  for (const char* f : files) {
    std::string path = std::string(ICEQ_DATA_DIR) + "/bad/" + f;
    CHECK_THROWS_AS(parse_iqp_file(path), InputError);
  }
}

TEST_CASE("frozen arrow with unfrozen endpoint is rejected with location") {
  try {
    parse_iqp_file(std::string(ICEQ_DATA_DIR) + "/bad/bad_frozen_arrow_endpoint.iqp");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("frozen arrow endpoint") != std::string::npos);
    CHECK(msg.find("bad_frozen_arrow_endpoint.iqp") != std::string::npos);
  }
}
