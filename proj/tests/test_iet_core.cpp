#include <doctest.h>

#include <cmath>

#include "flipiet/cet.hpp"
#include "flipiet/serial.hpp"
#include "oracles.hpp"

using namespace flipiet;

namespace {
const FieldSpec::Ptr kQ = FieldSpec::rationals();

FieldElement q(long num, long den = 1) { return kQ->from_rational(make_rational(num, den)); }

CetMap tribonacci_cet3() {
  auto trib = FieldRegistry::with_builtins().get("trib");
  FieldElement x = trib->generator();
  FieldElement half = trib->from_rational(make_rational(1, 2));
  FieldElement l1 = (trib->one() - x * x * x) / Rational(2);
  FieldElement l2 = (trib->one() - x * x) / Rational(2);
  FieldElement l3 = (trib->one() - x) / Rational(2);
  return triangle_to_cet3(l1, l2, l3, half);
}
}  // namespace

TEST_CASE("a 2-letter unflipped exchange is a rotation") {
  FlipIet f = make_flip_iet("AB/BA", {q(1, 3), q(2, 3)});
  // Rotation by 2/3: x -> x + 2/3 on [0, 1/3), x - 1/3 on [1/3, 1).
  CHECK(f.evaluate(q(1, 6)) == q(5, 6));
  CHECK(f.evaluate(q(1, 2)) == q(1, 6));
  CHECK(f.evaluate(q(0)) == q(2, 3));
}

TEST_CASE("fully flipped 4-letter maps validate") {
  FlipIet f = make_flip_iet("A~B~C~D~/D~A~C~B~", {q(1, 10), q(2, 10), q(3, 10), q(4, 10)});
  CHECK(f.fully_flipped());
  CHECK(f.total() == kQ->one());
  CHECK_THROWS_AS(make_flip_iet("AB/BA", {q(1, 3), q(0)}), NonPositiveLength);
  CHECK_THROWS_AS(make_flip_iet("AB/AB", {q(1, 2), q(1, 2)}, /*strict_ietf=*/true),
                  AllFlipsTrivial);
}

TEST_CASE("evaluate on circle maps: definition examples") {
  CetMap f = triangle_to_cet3(q(1, 3), q(1, 3), q(1, 3), q(1, 2));
  CHECK(f.evaluate(q(0)) == q(5, 6));

  // A single flipped interval on the circle squares to the identity.
  CetMap one(std::vector<FieldElement>{kQ->one()}, q(1, 2));
  FieldElement y = one.evaluate(q(1, 5));
  CHECK(one.evaluate(y) == q(1, 5));

  // Tribonacci parameters: F(0) = l1 + 1/2, cross-checked in floating point.
  CetMap t = tribonacci_cet3();
  FieldElement img = t.evaluate(t.spec()->zero());
  CHECK(img == t.lengths()[0] + make_rational(1, 2));
  double l1 = t.lengths()[0].to_double();
  CHECK(std::abs(img.to_double() - (l1 + 0.5)) < 1e-12);
}

TEST_CASE("flip involution on one interval") {
  FlipIet f = make_flip_iet("A~/A~", {q(1)});
  FieldElement x = q(3, 7);
  CHECK(f.evaluate(f.evaluate(x)) == x);
}

TEST_CASE("cet_to_ietf produces the cut combinatorics") {
  // 0 in the image of the second interval: the irreducible type.
  CetMap f = triangle_to_cet3(q(1, 3), q(1, 3), q(1, 3), q(1, 2));
  FlipIet cut = cet_to_ietf(f);
  CHECK(format_combinatorics(cut.perm(), cut.flips()) == "A~B~C~D~/B~D~A~C~");
  CHECK_FALSE(cut.perm().is_reducible());

  // 0 in the image of the first interval: a reducible type.
  CetMap g = triangle_to_cet3(q(1, 3), q(1, 3), q(1, 3), q(4, 5));
  FlipIet gcut = cet_to_ietf(g);
  CHECK(format_combinatorics(gcut.perm(), gcut.flips()) == "A~B~C~D~/A~C~D~B~");
  CHECK(gcut.perm().reducible_at() == 1);

  // 4-interval map with 0 in the image of the second interval.
  CetMap h = quad_to_cet4({q(1, 4), q(1, 4), q(1, 4), q(1, 4)}, q(3, 5));
  FlipIet hcut = cet_to_ietf(h);
  CHECK(format_combinatorics(hcut.perm(), hcut.flips()) == "A~B~C~D~E~/B~D~E~A~C~");

  // Boundary case: 0 exactly an image singularity keeps n letters.
  CetMap b({q(1, 2), q(1, 2)}, q(1, 2));
  FlipIet bcut = cet_to_ietf(b);
  CHECK(bcut.size() == 2);
}

TEST_CASE("cut map evaluates identically to the circle map") {
  oracles::Rng rng(23);
  for (int inst = 0; inst < 5; ++inst) {
    CetMap f = rng.random_cet(kQ, 3, rng.rational(97));
    FlipIet cut = cet_to_ietf(f);
    for (int i = 0; i < 200; ++i) {
      FieldElement x = q(rng.uniform(1, 9999), 10000);
      if (f.is_singular(x)) continue;
      CHECK(cut.evaluate(x) == f.evaluate(x));
    }
  }
}

TEST_CASE("evaluate is a bijection off singularities") {
  oracles::Rng rng(29);
  FlipIet f = rng.random_flip_iet(kQ, 5);
  for (int i = 0; i < 200; ++i) {
    FieldElement x = q(rng.uniform(1, 9999), 10000);
    CHECK(f.evaluate_inverse(f.evaluate(x)) == x);
  }
}

TEST_CASE("is_reducible examples") {
  CHECK(GenPerm({'A', 'B'}, {'A', 'B'}).reducible_at() == 1);
  auto [p1, f1] = parse_combinatorics("A~B~C~D~/B~D~A~C~");
  CHECK_FALSE(p1.is_reducible());
  auto [p2, f2] = parse_combinatorics("A~B~C~D~/A~C~D~B~");
  CHECK(p2.reducible_at() == 1);
}

TEST_CASE("triangle_to_cet3 validates the angle sum") {
  CHECK_NOTHROW(triangle_to_cet3(q(1, 6), q(1, 3), q(1, 2), q(1, 2)));
  CHECK_THROWS_AS(triangle_to_cet3(q(1, 5), q(3, 10), q(3, 5), q(1, 2)), AngleSumNotOne);
}

TEST_CASE("lambda_from_params and the hyperplane residual") {
  auto lambda = lambda_from_params(q(1, 3), q(1, 3), q(1, 3), q(1, 2));
  CHECK(lambda[0] == q(1, 3));
  CHECK(lambda[1] == q(1, 6));
  CHECK(lambda[2] == q(1, 6));
  CHECK(lambda[3] == q(1, 3));
  CHECK((lambda[0] + lambda[1] + lambda[2] + lambda[3]) == kQ->one());
  CHECK(hyperplane_residual(lambda).sign() == 0);
  // lambda_A + lambda_C == 1/2 == lambda_B + lambda_D on the hyperplane.
  CHECK(lambda[0] + lambda[2] == q(1, 2));
  CHECK(lambda[1] + lambda[3] == q(1, 2));

  CHECK_THROWS_AS(lambda_from_params(q(1, 2), q(1, 4), q(1, 4), q(1, 10)),
                  CombinatoricsMismatch);

  CHECK(hyperplane_residual({q(1), q(1), q(1), q(1)}).sign() == 0);
  CHECK(hyperplane_residual({q(2), q(1), q(1), q(1)}) == q(1));

  // The cut of the same circle map carries exactly these lengths.
  CetMap f = triangle_to_cet3(q(1, 3), q(1, 3), q(1, 3), q(1, 2));
  FlipIet cut = cet_to_ietf(f);
  for (int i = 0; i < 4; ++i)
    CHECK(cut.length_of(static_cast<Letter>('A' + i)) == lambda[static_cast<size_t>(i)]);
}

TEST_CASE("square of a tau = 1/2 circle map has paired pieces") {
  CetMap f = triangle_to_cet3(q(1, 3), q(1, 3), q(1, 3), q(1, 2));
  SquaredIet t = square(f);
  CHECK(t.pieces().size() == 6);
  for (const auto& p : t.pieces()) CHECK(p.len == q(1, 6));

  // |I_{i,j}| = |I_{j,i}| = 1/2 - l_k for the third letter k, on a scalene
  // acute example.
  CetMap g = triangle_to_cet3(q(5, 12), q(4, 12), q(3, 12), q(1, 2));
  SquaredIet tg = square(g);
  CHECK(tg.pieces().size() == 6);
  for (const auto& p : tg.pieces()) {
    int k = 3 - p.i - p.j;
    CHECK(p.len == q(1, 2) - g.lengths()[static_cast<size_t>(k)]);
    CHECK(p.i != p.j);
  }
}

TEST_CASE("square agrees with evaluate twice, exactly") {
  oracles::Rng rng(31);
  for (int inst = 0; inst < 4; ++inst) {
    CetMap f = rng.random_cet(kQ, 3, rng.rational(89));
    SquaredIet t = square(f);
    for (int i = 0; i < 250; ++i) {
      FieldElement x = q(rng.uniform(1, 99991), 100000);
      if (f.is_singular(x) || f.is_singular(f.evaluate(x))) continue;
      CHECK(t.evaluate(x) == f.evaluate(f.evaluate(x)));
    }
  }
  // Interval version on fully flipped maps.
  for (int inst = 0; inst < 4; ++inst) {
    FlipIet f = rng.random_flip_iet(kQ, 4, /*fully_flipped=*/true);
    SquaredIet t = square(f);
    for (int i = 0; i < 250; ++i) {
      FieldElement x = q(rng.uniform(1, 99991), 100000);
      CHECK(t.evaluate(x) == f.evaluate(f.evaluate(x)));
    }
  }
  CHECK_THROWS_AS(square(make_flip_iet("AB~/B~A", {q(1, 2), q(1, 2)})), NotFullyFlipped);
}

TEST_CASE("tribonacci square matches the 1 - 2 l identities") {
  CetMap t = tribonacci_cet3();
  auto trib = t.spec();
  FieldElement x = trib->generator();
  FieldElement expected[3] = {x * x * x, x * x, x};  // 1 - 2 l_j
  for (int j = 0; j < 3; ++j)
    CHECK(trib->one() - t.lengths()[static_cast<size_t>(j)] * Rational(2) == expected[j]);
  SquaredIet sq = square(t);
  CHECK(sq.pieces().size() == 6);
  for (const auto& p : sq.pieces()) {
    int k = 3 - p.i - p.j;
    CHECK(p.len * Rational(2) == expected[k]);
  }
}

TEST_CASE("JSON round trips for interval and circle maps") {
  FieldRegistry reg = FieldRegistry::with_builtins();
  FlipIet f = make_flip_iet("A~BC~D~/D~A~C~B", {q(1, 10), q(2, 10), q(3, 10), q(4, 10)});
  FlipIet f2 = flip_iet_from_json(to_json(f), reg);
  CHECK(f2 == f);

  CetMap c = tribonacci_cet3();
  CetMap c2 = cet_from_json(to_json(c), reg);
  CHECK(c2.tau() == c.tau());
  for (int i = 0; i < 3; ++i)
    CHECK(c2.lengths()[static_cast<size_t>(i)] == c.lengths()[static_cast<size_t>(i)]);
}
