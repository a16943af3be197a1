#include "braidkit/alexander.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "braidkit/closure.hpp"

namespace braidkit {

namespace {

const LaurentPoly kT = LaurentPoly::variable();
const LaurentPoly kTInv = LaurentPoly::monomial(1, -1);

// m <- m * burau(sigma_g): only column g-1 changes.
void right_multiply_generator(LaurentMatrix& m, int g) {
  const std::size_t dim = m.dim();
  const std::size_t c = static_cast<std::size_t>(std::abs(g)) - 1;
  for (std::size_t r = 0; r < dim; ++r) {
    LaurentPoly col;
    const LaurentPoly* left = c > 0 ? &m(r, c - 1) : nullptr;
    const LaurentPoly* right = c + 1 < dim ? &m(r, c + 1) : nullptr;
    if (g > 0) {
      // column c of sigma: t e_{c-1} - t e_c + e_{c+1}
      if (left) col += *left * kT;
      col -= m(r, c) * kT;
      if (right) col += *right;
    } else {
      // column c of sigma^{-1}: e_{c-1} - t^{-1} e_c + t^{-1} e_{c+1}
      if (left) col += *left;
      col -= m(r, c) * kTInv;
      if (right) col += *right * kTInv;
    }
    m(r, c) = std::move(col);
  }
}

}  // namespace

LaurentMatrix burau_generator(int letter, int strands) {
  check_letters(std::vector<int>{letter}, strands);
  LaurentMatrix m = LaurentMatrix::identity(strands - 1);
  right_multiply_generator(m, letter);
  return m;
}

LaurentMatrix reduced_burau(const BraidWord& w) {
  if (w.strands() < 2) {
    throw std::invalid_argument("reduced Burau needs at least 2 strands");
  }
  LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
  for (int g : w.letters()) right_multiply_generator(m, g);
  return m;
}

LaurentPoly alexander_unnormalized(const BraidWord& w) {
  if (w.strands() == 1) return 1;
  const auto dim = static_cast<std::size_t>(w.strands() - 1);
  const LaurentPoly det =
      determinant(LaurentMatrix::identity(dim) - reduced_burau(w));
  // (1 - t) / (1 - t^n) = 1 / (1 + t + ... + t^{n-1})
  const LaurentPoly geometric(0, std::vector<Integer>(w.strands(), 1));
  return exact_divide(det, geometric);
}

LaurentPoly normalize_alexander(const LaurentPoly& delta, int components) {
  if (delta.is_zero()) return delta;
  LaurentPoly out = delta.shifted(-(delta.breadth() / 2) - delta.min_exp());
  const bool flip = components == 1 ? out.evaluate_at_one() < 0 : out.leading() < 0;
  return flip ? -out : out;
}

LaurentPoly alexander_polynomial(const BraidWord& w) {
  return normalize_alexander(alexander_unnormalized(w),
                             closure_summary(w).components);
}

HalfInteger alexander_genus_bound(const LaurentPoly& delta) {
  return HalfInteger::from_twice(delta.breadth());
}

}  // namespace braidkit
