#include "doctest.h"

#include <stdexcept>
#include <random>

#include "braidkit/alexander.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/oracles.hpp"

using namespace braidkit;

static LaurentPoly poly(int lo, std::vector<Integer> c) { return LaurentPoly(lo, std::move(c)); }

// Delta = det(V - t V^T) for a 2x2 Seifert matrix, normalized.
static LaurentPoly seifert_alexander(int a, int b, int c, int d) {
  const LaurentPoly t = LaurentPoly::variable();
  const LaurentPoly m00 = LaurentPoly(a) - t * a, m01 = LaurentPoly(b) - t * c;
  const LaurentPoly m10 = LaurentPoly(c) - t * b, m11 = LaurentPoly(d) - t * d;
  return normalize_alexander(m00 * m11 - m01 * m10, 1);
}

static BraidWord random_word(std::mt19937& rng, int n, int max_len) {
  std::vector<int> letters(rng() % (max_len + 1));
  for (int& g : letters) g = (1 + static_cast<int>(rng() % (n - 1))) * (rng() % 2 ? 1 : -1);
  return BraidWord(n, letters);
}

TEST_CASE("Alexander: trefoil and figure-eight against Seifert matrices") {
  CHECK(alexander_polynomial(BraidWord(2, {1, 1, 1})) == seifert_alexander(-1, 1, 0, -1));
  CHECK(alexander_polynomial(BraidWord(2, {1, 1, 1})) == poly(-1, {1, -1, 1}));
  CHECK(alexander_polynomial(BraidWord(3, {1, -2, 1, -2})) == seifert_alexander(-1, 1, 0, 1));
  CHECK(alexander_polynomial(BraidWord(3, {1, -2, 1, -2})) == poly(-1, {-1, 3, -1}));
  CHECK(alexander_genus_bound(alexander_polynomial(BraidWord(2, {1, 1, 1}))) ==
        HalfInteger::from_int(1));
}

TEST_CASE("Alexander: unknots, unlinks, links") {
  CHECK(alexander_polynomial(BraidWord(1, {})) == LaurentPoly(1));
  CHECK(alexander_polynomial(BraidWord(2, {1})) == LaurentPoly(1));
  CHECK(alexander_polynomial(BraidWord(3, {1, -2})) == LaurentPoly(1));
  CHECK(alexander_polynomial(BraidWord(2, {})).is_zero());          // split link
  CHECK(alexander_polynomial(BraidWord(2, {1, 1})).breadth() == 1);  // Hopf link
  // (2,5) torus knot: t^-2 - t^-1 + 1 - t + t^2
  CHECK(alexander_polynomial(BraidWord(2, {1, 1, 1, 1, 1})) == poly(-2, {1, -1, 1, -1, 1}));
}

TEST_CASE("Alexander: knot closures are symmetric with Delta(1) = 1") {
  std::mt19937 rng(21);
  int knots = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const BraidWord w = random_word(rng, n, 14);
    if (closure_summary(w).components != 1) continue;
    ++knots;
    const LaurentPoly d = alexander_polynomial(w);
    CHECK(d.evaluate_at_one() == 1);
    CHECK(d.inverted_variable() == d);
  }
  CHECK(knots > 20);
}

TEST_CASE("Jones: standard values") {
  // Right-handed trefoil t + t^3 - t^4, and its mirror.
  CHECK(jones_polynomial(BraidWord(2, {1, 1, 1})).in_t() == poly(1, {1, 0, 1, -1}));
  CHECK(jones_polynomial(BraidWord(2, {-1, -1, -1})).in_t() == poly(-4, {-1, 1, 0, 1}));
  CHECK(to_string(jones_polynomial(BraidWord(2, {-1, -1, -1}))) == "-t^-4 + t^-3 + t^-1");
  CHECK(jones_polynomial(BraidWord(3, {1, -2, 1, -2})).in_t() == poly(-2, {1, -1, 1, -1, 1}));
  CHECK(jones_polynomial(BraidWord(1, {})).in_t() == LaurentPoly(1));
  CHECK(jones_polynomial(BraidWord(4, {1, -2, 3})).in_t() == LaurentPoly(1));
  // Positive Hopf link: -t^{1/2} - t^{5/2}.
  const JonesPolynomial hopf = jones_polynomial(BraidWord(2, {1, 1}));
  CHECK_FALSE(hopf.in_t().has_value());
  CHECK(hopf.quarter == poly(2, {-1, 0, 0, 0, 0, 0, 0, 0, -1}));
  CHECK(to_string(hopf) == "-t^(1/2) - t^(5/2)");
  // Two-component unlink: -t^{1/2} - t^{-1/2}.
  CHECK(jones_polynomial(BraidWord(2, {})).quarter == poly(-2, {-1, 0, 0, 0, -1}));
}

TEST_CASE("Jones: transfer matrix agrees with the state sum") {
  std::mt19937 rng(8);
  for (int t = 0; t < 300; ++t) {
    const BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 3), 11);
    CHECK(jones_polynomial(w) == oracles::state_sum_jones(w));
  }
}

TEST_CASE("Jones: V(1) = (-2)^{k-1} and the strand guard") {
  std::mt19937 rng(12);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_word(rng, 2 + static_cast<int>(rng() % 4), 12);
    const int k = closure_summary(w).components;
    Integer expected = 1;
    for (int i = 1; i < k; ++i) expected *= -2;
    CHECK(jones_polynomial(w).quarter.evaluate_at_one() == expected);
  }
  CHECK_THROWS_AS(jones_polynomial(BraidWord(5, {1}), 4), std::length_error);
}

TEST_CASE("Invariance under conjugation and stabilization") {
  std::mt19937 rng(33);
  for (int t = 0; t < 80; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const BraidWord w = random_word(rng, n, 12);
    const BraidWord moved =
        stabilize(conjugate_closure(w, random_word(rng, n, 5)), rng() % 2 ? 1 : -1);
    CHECK(alexander_polynomial(moved) == alexander_polynomial(w));
    CHECK(jones_polynomial(moved) == jones_polynomial(w));
  }
}
