#include <doctest.h>

#include "flipiet/gasket.hpp"
#include "flipiet/induction.hpp"
#include "oracles.hpp"

using namespace flipiet;

namespace {
const FieldSpec::Ptr kQ = FieldSpec::rationals();

FieldElement q(long num, long den = 1) { return kQ->from_rational(make_rational(num, den)); }

SimplexPoint qpoint(long a1, long a2, long a3, long den) {
  return SimplexPoint::make(q(a1, den), q(a2, den), q(a3, den));
}
}  // namespace

TEST_CASE("gasket step: subtract the dominant coordinate and renormalize") {
  // (3/5, 3/10, 1/10) -> (1/5, 3/10, 1/10) / (3/5) = (1/3, 1/2, 1/6).
  auto next = gasket_step(qpoint(6, 3, 1, 10));
  REQUIRE(next.has_value());
  CHECK(next->x1 == q(1, 3));
  CHECK(next->x2 == q(1, 2));
  CHECK(next->x3 == q(1, 6));

  CHECK_FALSE(gasket_step(qpoint(1, 1, 1, 3)).has_value());
}

TEST_CASE("gasket step commutes with coordinate permutations") {
  oracles::Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    auto parts = rng.simplex(3, 500);
    SimplexPoint p{kQ->from_rational(parts[0]), kQ->from_rational(parts[1]),
                   kQ->from_rational(parts[2])};
    SimplexPoint swapped{p.x2, p.x1, p.x3};
    auto a = gasket_step(p);
    auto b = gasket_step(swapped);
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
      CHECK(a->x1 == b->x2);
      CHECK(a->x2 == b->x1);
      CHECK(a->x3 == b->x3);
      // Renormalization is exact.
      CHECK(a->x1 + a->x2 + a->x3 == kQ->one());
    }
  }
}

TEST_CASE("tribonacci point cycles through coordinate rotations forever") {
  auto trib = FieldRegistry::with_builtins().get("trib");
  FieldElement x = trib->generator();
  SimplexPoint p = SimplexPoint::make(x, x * x, x * x * x);

  auto next = gasket_step(p);
  REQUIRE(next.has_value());
  CHECK(next->x1 == x * x * x);
  CHECK(next->x2 == x);
  CHECK(next->x3 == x * x);

  GasketDepth gd = gasket_depth(p, 50);
  CHECK(gd.depth == 50);
  CHECK_FALSE(gd.hit_degenerate);
}

TEST_CASE("symmetric point has depth 0, random rational points die out") {
  CHECK(gasket_depth(qpoint(1, 1, 1, 3), 50).depth == 0);
  oracles::Rng rng(79);
  int max_seen = 0;
  for (int i = 0; i < 100; ++i) {
    auto parts = rng.simplex(3, 1000);
    SimplexPoint p{kQ->from_rational(parts[0]), kQ->from_rational(parts[1]),
                   kQ->from_rational(parts[2])};
    GasketDepth gd = gasket_depth(p, 200);
    CHECK(gd.depth < 200);  // rational points leave the gasket in finite time
    max_seen = std::max(max_seen, static_cast<int>(gd.depth));
  }
  CHECK(max_seen >= 1);
}

TEST_CASE("boundary ties leave the open simplex and are flagged") {
  // x1 == x2 + x3 exactly.
  GasketDepth gd = gasket_depth(qpoint(2, 1, 1, 4), 10);
  CHECK(gd.depth == 0);
  CHECK(gd.hit_degenerate);
}

TEST_CASE("triangle gasket point") {
  SimplexPoint p = triangle_gasket_point(q(1, 3), q(1, 3), q(1, 3));
  CHECK(p.x1 == q(1, 3));
  CHECK(p.x2 == q(1, 3));
  CHECK(p.x3 == q(1, 3));

  auto trib = FieldRegistry::with_builtins().get("trib");
  FieldElement x = trib->generator();
  FieldElement one = trib->one();
  SimplexPoint t = triangle_gasket_point((one - x * x * x) / Rational(2),
                                         (one - x * x) / Rational(2), (one - x) / Rational(2));
  CHECK(t.x1 == x * x * x);
  CHECK(t.x2 == x * x);
  CHECK(t.x3 == x);

  CHECK_THROWS_AS(triangle_gasket_point(q(6, 10), q(3, 10), q(1, 10)), NotAcute);
}

TEST_CASE("the square of an acute tau = 1/2 map is the six-interval family") {
  SUBCASE("equilateral: all six pieces have length 1/6") {
    ArSquareReport rep = ar_square_report(q(1, 3), q(1, 3), q(1, 3), 200);
    CHECK(rep.pieces.size() == 6);
    for (const auto& p : rep.pieces) CHECK(p.len == q(1, 6));
    CHECK(rep.pairs_match);
    CHECK(rep.pointwise_match);
  }
  SUBCASE("tribonacci parameters: the 1 - 2 l identities") {
    auto trib = FieldRegistry::with_builtins().get("trib");
    FieldElement x = trib->generator();
    FieldElement one = trib->one();
    ArSquareReport rep = ar_square_report((one - x * x * x) / Rational(2),
                                          (one - x * x) / Rational(2), (one - x) / Rational(2),
                                          100);
    CHECK(rep.x[0] == x * x * x);
    CHECK(rep.x[1] == x * x);
    CHECK(rep.x[2] == x);
    CHECK(rep.pairs_match);
    CHECK(rep.pointwise_match);
  }
  SUBCASE("random acute triples: pointwise oracle equivalence") {
    oracles::Rng rng(83);
    int done = 0;
    while (done < 10) {
      auto parts = rng.simplex(3, 120);
      bool acute = true;
      for (const auto& p : parts)
        if (p >= make_rational(1, 2)) acute = false;
      if (!acute) continue;
      ++done;
      ArSquareReport rep = ar_square_report(kQ->from_rational(parts[0]),
                                            kQ->from_rational(parts[1]),
                                            kQ->from_rational(parts[2]), 150);
      CHECK(rep.pieces.size() == 6);
      CHECK(rep.pairs_match);
      CHECK(rep.pointwise_match);
    }
  }
  CHECK_THROWS_AS(ar_square_report(q(6, 10), q(3, 10), q(1, 10)), NotAcute);
}

TEST_CASE("escape criterion coherence: deep gasket points match shrinking inductions") {
  // Acute rational triangles at tau = 1/2: the gasket depth of the angle
  // point is finite iff the induction stops (both detect non-minimality).
  oracles::Rng rng(89);
  int done = 0;
  while (done < 15) {
    auto parts = rng.simplex(3, 60);
    bool acute = true;
    for (const auto& p : parts)
      if (p >= make_rational(1, 2)) acute = false;
    if (!acute) continue;
    ++done;
    SimplexPoint p = triangle_gasket_point(kQ->from_rational(parts[0]),
                                           kQ->from_rational(parts[1]),
                                           kQ->from_rational(parts[2]));
    GasketDepth gd = gasket_depth(p, 50);
    CetMap f = triangle_to_cet3(kQ->from_rational(parts[0]), kQ->from_rational(parts[1]),
                                kQ->from_rational(parts[2]), q(1, 2));
    MinimalityCertificate cert =
        minimality_certificate(cet_to_ietf(f), 100000, make_rational(1, 1000));
    // Rational points are not in the gasket; the induction must stop.
    CHECK(gd.depth < 50);
    CHECK(cert.kind == MinimalityCertificate::Kind::StoppedAt);
  }

  auto trib = FieldRegistry::with_builtins().get("trib");
  FieldElement x = trib->generator();
  FieldElement one = trib->one();
  SimplexPoint deep = triangle_gasket_point((one - x * x * x) / Rational(2),
                                            (one - x * x) / Rational(2), (one - x) / Rational(2));
  CHECK(gasket_depth(deep, 50).depth == 50);
  CetMap f = triangle_to_cet3((one - x * x * x) / Rational(2), (one - x * x) / Rational(2),
                              (one - x) / Rational(2),
                              trib->from_rational(make_rational(1, 2)));
  MinimalityCertificate cert =
      minimality_certificate(cet_to_ietf(f), 10000, make_rational(1, 1000));
  CHECK(cert.kind == MinimalityCertificate::Kind::ShrinkingNoStop);
}
