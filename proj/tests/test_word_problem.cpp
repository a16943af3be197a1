#include "doctest.h"

#include <stdexcept>
#include <random>

#include "braidkit/alexander.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/word_problem.hpp"

using namespace braidkit;

static BraidWord random_word(std::mt19937& rng, int n, int max_len) {
  std::vector<int> letters(rng() % (max_len + 1));
  for (int& g : letters) g = (1 + static_cast<int>(rng() % (n - 1))) * (rng() % 2 ? 1 : -1);
  return BraidWord(n, letters);
}

TEST_CASE("braid relations are trivial") {
  CHECK(is_trivial_braid(BraidWord(3, {1, 2, 1, -2, -1, -2})));
  CHECK(is_trivial_braid(BraidWord(4, {1, 3, -1, -3})));
  CHECK(is_trivial_braid(BraidWord(2, {})));
  CHECK(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
}

TEST_CASE("nontrivial braids are detected") {
  CHECK_FALSE(is_trivial_braid(BraidWord(2, {1, 1})));
  CHECK_FALSE(is_trivial_braid(BraidWord(3, {1, -2})));
  CHECK_FALSE(braid_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  // The commutator of sigma_1^2 and sigma_2^2 is not trivial (pure braid group is not abelian).
  CHECK_FALSE(is_trivial_braid(BraidWord(3, {1, 1, 2, 2, -1, -1, -2, -2})));
}

TEST_CASE("reduced words have no handle") {
  const BraidWord r = handle_reduce(BraidWord(3, {1, 2, -1, 2, 1, -2}));
  bool pos = false, neg = false;
  int lowest = 99;
  for (int g : r.letters()) lowest = std::min(lowest, std::abs(g));
  for (int g : r.letters()) {
    if (std::abs(g) == lowest) (g > 0 ? pos : neg) = true;
  }
  CHECK_FALSE((pos && neg));
}

TEST_CASE("budget exhaustion is an error, not a verdict") {
  CHECK_THROWS_AS(is_trivial_braid(BraidWord(2, {1, -1}), 0), BudgetExceeded);
  CHECK_NOTHROW(is_trivial_braid(BraidWord(2, {}), 0));
}

TEST_CASE("w w^{-1} after scrambling is trivial; verdicts agree with Burau") {
  std::mt19937 rng(17);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const BraidWord w = random_word(rng, n, 12);
    const BraidWord u = random_word(rng, n, 6);
    // u w u^{-1} u w^{-1} u^{-1}, unreduced
    const BraidWord id = concat(conjugate(w, u), conjugate(inverse(w), u));
    CHECK(is_trivial_braid(id));
    // Burau is a homomorphism: trivial verdicts imply identity matrices
    // (necessary condition, independent of handle reduction).
    const BraidWord v = random_word(rng, n, 8);
    if (is_trivial_braid(v)) {
      CHECK(reduced_burau(v) == LaurentMatrix::identity(n - 1));
    } else if (n <= 3) {
      // Burau is faithful for n <= 3.
      CHECK_FALSE(reduced_burau(v) == LaurentMatrix::identity(n - 1));
    }
  }
}
