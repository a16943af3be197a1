#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidkit {

using Integer = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in one variable, stored as a dense coefficient
// run starting at min_exp. The run is trimmed: both end coefficients are
// nonzero, and the zero polynomial has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit by design of the ring
  LaurentPoly(Integer constant);    // NOLINT
  LaurentPoly(int min_exp, std::vector<Integer> coeffs);

  static LaurentPoly monomial(Integer coeff, int exp);
  static LaurentPoly variable() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exp() const noexcept { return min_exp_; }
  int max_exp() const noexcept {
    return min_exp_ + static_cast<int>(coeffs_.size()) - 1;
  }
  int breadth() const noexcept { return is_zero() ? 0 : max_exp() - min_exp_; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  Integer coeff(int exp) const;
  const Integer& leading() const { return coeffs_.back(); }

  Integer evaluate_at_one() const;
  LaurentPoly shifted(int k) const;       // times t^k
  LaurentPoly inverted_variable() const;  // t -> t^{-1}
  // p(t) -> p(t^k), k != 0
  LaurentPoly substitute_power(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void trim();

  int min_exp_ = 0;
  std::vector<Integer> coeffs_;
};

// Quotient p / q in Z[t, t^{-1}]; throws InexactDivision unless q divides p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q);

// Human form, lowest degree first: "t^-2 - 2t^-1 + 3 - 2t + t^2".
std::string to_string(const LaurentPoly& p, std::string_view var = "t");

}  // namespace braidkit
