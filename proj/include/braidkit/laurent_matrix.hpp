#pragma once

#include <cstddef>
#include <vector>

#include "braidkit/laurent.hpp"

namespace braidkit {

// Dense square matrix over Z[t, t^{-1}].
class LaurentMatrix {
public:
  explicit LaurentMatrix(std::size_t dim = 0);
  static LaurentMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

private:
  std::size_t dim_;
  std::vector<LaurentPoly> entries_;
};

// Fraction-free (Bareiss) elimination; every division is exact.
LaurentPoly determinant(LaurentMatrix m);

}  // namespace braidkit
