// Test-only oracles, kept independent of the implementation paths they
// check: plain rational bisection for root values, pointwise first-return
// iteration for induction steps, and simple deterministic generators.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "flipiet/cet.hpp"
#include "flipiet/flip_iet.hpp"

namespace oracles {

using flipiet::CetMap;
using flipiet::FieldElement;
using flipiet::FieldSpec;
using flipiet::FlipIet;
using flipiet::Int;
using flipiet::Rational;
using flipiet::ZPoly;

// Rational bisection on [lo, hi]; requires a sign change. Independent of the
// FieldSpec refinement machinery.
inline Rational bisect_root(const ZPoly& p, Rational lo, Rational hi, int iters) {
  auto eval = [&](const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  int slo = sgn(eval(lo));
  for (int k = 0; k < iters; ++k) {
    Rational mid = (lo + hi) / 2;
    int sm = sgn(eval(mid));
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / 2;
}

// First-return map of F to [0, cut) by plain forward iteration.
inline FieldElement first_return(const FlipIet& F, const FieldElement& cut,
                                 const FieldElement& x, int max_iters = 64) {
  FieldElement y = F.evaluate(x);
  for (int k = 0; k < max_iters; ++k) {
    if ((y - cut).sign() < 0) return y;
    y = F.evaluate(y);
  }
  throw std::runtime_error("first_return: no return within the iteration cap");
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}

  long uniform(long lo, long hi) {  // inclusive
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }

  Rational rational(long max_den = 1000) {
    long den = uniform(2, max_den);
    long num = uniform(1, den - 1);
    return flipiet::make_rational(num, den);
  }

  // n positive rationals summing to 1.
  std::vector<Rational> simplex(int n, long resolution = 1000) {
    while (true) {
      std::vector<long> cuts{0, resolution};
      for (int i = 1; i < n; ++i) cuts.push_back(uniform(1, resolution - 1));
      std::sort(cuts.begin(), cuts.end());
      bool distinct = true;
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i] == cuts[i + 1]) distinct = false;
      if (!distinct) continue;
      std::vector<Rational> out;
      for (size_t i = 0; i + 1 < cuts.size(); ++i)
        out.push_back(flipiet::make_rational(cuts[i + 1] - cuts[i], resolution));
      return out;
    }
  }

  FlipIet random_flip_iet(const FieldSpec::Ptr& spec, int n, bool fully_flipped = false) {
    std::string letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('A' + i));
    std::string bot = letters;
    do {
      std::shuffle(bot.begin(), bot.end(), gen);
    } while (n > 1 && bot == letters);
    flipiet::GenPerm perm({letters.begin(), letters.end()}, {bot.begin(), bot.end()});
    flipiet::FlipVector flips(static_cast<size_t>(n), -1);
    if (!fully_flipped) {
      bool any = false;
      for (int i = 0; i < n; ++i) {
        flips[static_cast<size_t>(i)] = uniform(0, 1) ? 1 : -1;
        any = any || flips[static_cast<size_t>(i)] == -1;
      }
      if (!any) flips[static_cast<size_t>(uniform(0, n - 1))] = -1;
    }
    auto parts = simplex(n);
    std::vector<FieldElement> lengths;
    for (const auto& q : parts) lengths.push_back(spec->from_rational(q));
    return FlipIet(std::move(perm), std::move(flips), std::move(lengths));
  }

  CetMap random_cet(const FieldSpec::Ptr& spec, int n, const Rational& tau,
                    long resolution = 1000) {
    auto parts = simplex(n, resolution);
    std::vector<FieldElement> lengths;
    for (const auto& q : parts) lengths.push_back(spec->from_rational(q));
    return CetMap(std::move(lengths), spec->from_rational(tau));
  }
};

}  // namespace oracles
