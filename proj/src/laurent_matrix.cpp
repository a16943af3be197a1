#include "braidkit/laurent_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace braidkit {

LaurentMatrix::LaurentMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim) {}

LaurentMatrix LaurentMatrix::identity(std::size_t dim) {
  LaurentMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix out(a.dim_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const LaurentPoly& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] -= b.entries_[i];
  return out;
}

LaurentPoly determinant(LaurentMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  LaurentPoly previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      negate = !negate;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        m(r, c) = exact_divide(m(r, c) * m(k, k) - m(r, k) * m(k, c), previous);
      }
      m(r, k) = LaurentPoly{};
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace braidkit
