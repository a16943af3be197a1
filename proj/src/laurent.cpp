#include "braidkit/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "braidkit/errors.hpp"

namespace braidkit {

LaurentPoly::LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(Integer constant) : coeffs_{std::move(constant)} {
  trim();
}

LaurentPoly::LaurentPoly(int min_exp, std::vector<Integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer coeff, int exp) {
  return LaurentPoly(exp, {std::move(coeff)});
}

void LaurentPoly::trim() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return c != 0; });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_exp_ = 0;
}

Integer LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < min_exp_ || exp > max_exp()) return 0;
  return coeffs_[exp - min_exp_];
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.min_exp_ += k;
  return out;
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return {};
  return LaurentPoly(-max_exp(),
                     std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("substitute_power needs k != 0");
  if (is_zero()) return {};
  if (k < 0) return substitute_power(-k).inverted_variable();
  std::vector<Integer> out(static_cast<std::size_t>(breadth()) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return LaurentPoly(min_exp_ * k, std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(min_exp_, o.min_exp_);
  const int hi = std::max(max_exp(), o.max_exp());
  std::vector<Integer> sum(hi - lo + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum[min_exp_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    sum[o.min_exp_ - lo + i] += o.coeffs_[i];
  min_exp_ = lo;
  coeffs_ = std::move(sum);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  return *this = *this * o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly(a.min_exp_ + b.min_exp_, std::move(prod));
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw InexactDivision("division by zero polynomial");
  if (p.is_zero()) return {};
  // Both runs start with a nonzero coefficient, so this is ordinary
  // polynomial long division from the top degree down.
  std::vector<Integer> rem = p.coeffs();
  const auto& den = q.coeffs();
  if (rem.size() < den.size()) {
    throw InexactDivision("divisor has larger breadth than dividend");
  }
  std::vector<Integer> quot(rem.size() - den.size() + 1);
  const Integer& lead = den.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + den.size() - 1];
    if (top % lead != 0) {
      throw InexactDivision("inexact division: " + to_string(p) + " by " +
                            to_string(q));
    }
    const Integer c = top / lead;
    quot[k] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= c * den[j];
    }
  }
  if (std::any_of(rem.begin(), rem.end(),
                  [](const Integer& c) { return c != 0; })) {
    throw InexactDivision("inexact division: " + to_string(p) + " by " +
                          to_string(q));
  }
  return LaurentPoly(p.min_exp() - q.min_exp(), std::move(quot));
}

std::string to_string(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
    Integer c = p.coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0 || c != 1) out << c;
    if (e != 0) {
      out << var;
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

}  // namespace braidkit
