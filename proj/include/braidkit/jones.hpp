#pragma once

#include <optional>
#include <string>

#include "braidkit/braid_word.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

inline constexpr int kDefaultJonesMaxStrands = 10;

// Jones polynomial stored on the t^{1/4} grid: quarter is a Laurent
// polynomial in s = t^{1/4}.
struct JonesPolynomial {
  LaurentPoly quarter;

  // Polynomial in t when every exponent is integral (always for knots).
  std::optional<LaurentPoly> in_t() const;
  friend bool operator==(const JonesPolynomial&, const JonesPolynomial&) = default;
};

// "t^-4 + t^-3", with fractional exponents written "t^(1/2)".
std::string to_string(const JonesPolynomial& v);

// Kauffman bracket of the closure, normalized so the unknot has bracket 1.
// Laurent polynomial in A. sigma_i expands as A * 1 + A^{-1} * e_i.
LaurentPoly kauffman_bracket(const BraidWord& w,
                             int max_strands = kDefaultJonesMaxStrands);

// (-A^3)^{-writhe} <closure>, then t = A^{-4}. Computed by transfer through
// the Temperley-Lieb algebra TL_n (dimension Catalan(n)); throws
// std::length_error above max_strands.
JonesPolynomial jones_polynomial(const BraidWord& w,
                                 int max_strands = kDefaultJonesMaxStrands);

}  // namespace braidkit
