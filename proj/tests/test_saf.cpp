#include <doctest.h>

#include "flipiet/saf.hpp"
#include "oracles.hpp"

using namespace flipiet;

namespace {
const FieldSpec::Ptr kQ = FieldSpec::rationals();

FieldElement q(long num, long den = 1) { return kQ->from_rational(make_rational(num, den)); }

// Rotation by alpha on [0, 1) as a 2-letter exchange.
FlipIet rotation(const FieldElement& alpha) {
  const auto spec = alpha.spec();
  return make_flip_iet("AB/BA", {spec->one() - alpha, alpha});
}
}  // namespace

TEST_CASE("SAF of rotations") {
  auto reg = FieldRegistry::with_builtins();
  auto s2 = reg.get("sqrt2");
  FieldElement alpha = s2->generator() - Rational(1);  // sqrt2 - 1
  SafTensor t = saf(rotation(alpha));
  CHECK_FALSE(t.is_zero());
  // 1 (x) alpha - alpha (x) 1 in coordinates: an antisymmetric matrix.
  CHECK(t.dim() == 2);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) CHECK(t.at(r, s) == -t.at(s, r));
  CHECK(t.at(0, 1) == Rational(1));

  // Rational rotations are periodic: zero tensor.
  CHECK(saf(rotation(q(1, 3))).is_zero());
  // The identity map.
  FlipIet ident = make_flip_iet("A/A", {q(1)});
  CHECK(saf(ident).is_zero());
}

TEST_CASE("SAF rejects maps with flips") {
  CHECK_THROWS_AS(saf(make_flip_iet("A~B/BA~", {q(1, 3), q(2, 3)})), Error);
}

TEST_CASE("SAF is additive under refinement of a continuity interval") {
  auto s2 = FieldRegistry::with_builtins().get("sqrt2");
  FieldElement alpha = s2->generator() / Rational(2);
  FieldElement one = s2->one();
  // Rotation as two pieces vs the same rotation with the first piece split.
  SafTensor coarse = saf_of_pieces({{one - alpha, alpha}, {alpha, alpha - one}});
  SafTensor fine = saf_of_pieces({{(one - alpha) / Rational(2), alpha},
                                  {(one - alpha) / Rational(2), alpha},
                                  {alpha, alpha - one}});
  CHECK(coarse == fine);
}

TEST_CASE("squares of fully flipped maps have zero SAF") {
  oracles::Rng rng(101);
  auto s2 = FieldRegistry::with_builtins().get("sqrt2");
  for (int n = 3; n <= 5; ++n) {
    for (int inst = 0; inst < 30; ++inst) {
      FlipIet f = rng.random_flip_iet(kQ, n, /*fully_flipped=*/true);
      CHECK(saf_of_square(f).is_zero());
    }
    // A couple of quadratic-field instances per n.
    for (int inst = 0; inst < 5; ++inst) {
      auto parts = rng.simplex(n, 200);
      std::vector<FieldElement> lengths;
      FieldElement gen = s2->generator();
      FieldElement eps = gen / Rational(100);
      for (int i = 0; i < n; ++i) lengths.push_back(s2->from_rational(parts[static_cast<size_t>(i)]));
      lengths[0] = lengths[0] + eps;
      lengths[1] = lengths[1] - eps;
      std::string letters, bot;
      for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('A' + i));
      bot = letters;
      std::reverse(bot.begin(), bot.end());
      GenPerm perm({letters.begin(), letters.end()}, {bot.begin(), bot.end()});
      FlipVector flips(static_cast<size_t>(n), -1);
      FlipIet f(perm, flips, lengths);
      CHECK(saf_of_square(f).is_zero());
    }
  }
}

TEST_CASE("squares of circle maps have zero SAF, including the tribonacci one") {
  auto trib = FieldRegistry::with_builtins().get("trib");
  FieldElement x = trib->generator();
  FieldElement one = trib->one();
  CetMap f = triangle_to_cet3((one - x * x * x) / Rational(2), (one - x * x) / Rational(2),
                              (one - x) / Rational(2),
                              trib->from_rational(make_rational(1, 2)));
  CHECK(saf_of_square(f).is_zero());

  oracles::Rng rng(103);
  for (int inst = 0; inst < 20; ++inst) {
    CetMap g = rng.random_cet(kQ, 3, rng.rational(59));
    CHECK(saf_of_square(g).is_zero());
  }
}

TEST_CASE("SAF is invariant along the induction") {
  auto s2 = FieldRegistry::with_builtins().get("sqrt2");
  FieldElement gen = s2->generator();

  // 3-letter rotation-like exchange over Q(sqrt2).
  FieldElement a = gen / Rational(4);                    // ~0.3536
  FieldElement b = s2->from_rational(make_rational(1, 3));
  FieldElement c = s2->one() - a - b;
  FlipIet t3 = make_flip_iet("ABC/CAB", {a, b, c});
  CHECK(saf_rauzy_invariance_check(t3, 10));

  // Random 4-letter exchanges over Q(sqrt2), 25 steps.
  oracles::Rng rng(107);
  for (int inst = 0; inst < 10; ++inst) {
    auto parts = rng.simplex(4, 100);
    std::vector<FieldElement> lengths;
    for (int i = 0; i < 4; ++i) lengths.push_back(s2->from_rational(parts[static_cast<size_t>(i)]));
    FieldElement eps = gen / Rational(200);
    lengths[0] = lengths[0] + eps;
    lengths[2] = lengths[2] - eps;
    std::string bot = "ABCD";
    do {
      std::shuffle(bot.begin(), bot.end(), rng.gen);
    } while (bot == "ABCD");
    GenPerm perm({'A', 'B', 'C', 'D'}, {bot.begin(), bot.end()});
    FlipIet f(perm, FlipVector(4, 1), lengths);
    CHECK(saf_rauzy_invariance_check(f, 25));
  }

  // A stopped induction is vacuously invariant.
  FlipIet stopped = make_flip_iet("AB/AB", {q(1, 2), q(1, 2)});
  CHECK(saf_rauzy_invariance_check(stopped, 25));
}
