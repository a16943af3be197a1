#include "braidkit/oracles.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidkit::oracles {

std::vector<int> band_generator_prefix_product(int i, int j) {
  std::vector<int> prefix;
  for (int g = i; g <= j - 2; ++g) prefix.push_back(g);
  std::vector<int> out = prefix;
  out.push_back(j - 1);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) out.push_back(-*it);
  return out;
}

namespace {

struct UnionFind {
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

LaurentPoly state_sum_bracket(const BraidWord& w) {
  const int n = w.strands();
  const auto& letters = w.letters();
  const int c = static_cast<int>(letters.size());
  if (c > 20) throw std::length_error("state sum limited to 20 crossings");
  // Point (level t, position p), level c identified with level 0 by closure.
  auto point = [&](int t, int p) { return (t % (c == 0 ? 1 : c)) * n + p; };
  const int points = (c == 0 ? 1 : c) * n;
  const LaurentPoly d = LaurentPoly(-2, {-1, 0, 0, 0, -1});

  LaurentPoly total;
  for (unsigned long state = 0; state < (1UL << c); ++state) {
    UnionFind uf(points);
    int a_count = 0;
    for (int t = 0; t < c; ++t) {
      const int g = letters[t];
      const int i = std::abs(g) - 1;
      for (int p = 0; p < n; ++p) {
        if (p != i && p != i + 1) uf.join(point(t, p), point(t + 1, p));
      }
      const bool vertical = (state >> t) & 1UL;
      if (vertical) {
        uf.join(point(t, i), point(t + 1, i));
        uf.join(point(t, i + 1), point(t + 1, i + 1));
      } else {
        uf.join(point(t, i), point(t, i + 1));
        uf.join(point(t + 1, i), point(t + 1, i + 1));
      }
      // sigma: vertical smoothing weighs A, horizontal A^{-1}; reversed for
      // sigma^{-1}.
      a_count += (vertical == (g > 0)) ? 1 : -1;
    }
    int loops = 0;
    for (int x = 0; x < points; ++x) loops += uf.find(x) == x;
    LaurentPoly term = LaurentPoly::monomial(1, a_count);
    for (int k = 1; k < loops; ++k) term *= d;
    total += term;
  }
  return total;
}

JonesPolynomial state_sum_jones(const BraidWord& w) {
  const int writhe = w.exponent_sum();
  const LaurentPoly f =
      state_sum_bracket(w) * LaurentPoly::monomial(writhe % 2 == 0 ? 1 : -1, -3 * writhe);
  return JonesPolynomial{f.inverted_variable()};
}

}  // namespace braidkit::oracles
