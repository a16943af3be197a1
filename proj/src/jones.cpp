#include "braidkit/jones.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace braidkit {

namespace {

// A Temperley-Lieb basis diagram on n strands: a planar perfect matching of
// 2n boundary points. Points 0..n-1 are the top row, n..2n-1 the bottom row.
using Diagram = std::vector<std::uint8_t>;
using Element = std::map<Diagram, LaurentPoly>;

Diagram identity_diagram(int n) {
  Diagram d(2 * n);
  for (int k = 0; k < n; ++k) {
    d[k] = static_cast<std::uint8_t>(n + k);
    d[n + k] = static_cast<std::uint8_t>(k);
  }
  return d;
}

// Stacks the cup-cap e_i (0-based i joins positions i, i+1) below d.
// Returns the new diagram and whether a closed loop was produced.
std::pair<Diagram, bool> append_cup_cap(const Diagram& d, int n, int i) {
  const int a = n + i;  // bottom points of d that the cap joins
  const int b = n + i + 1;
  Diagram out = d;
  const int pa = d[a];
  const int pb = d[b];
  if (pa == b) {
    // d already caps these two points: the cap closes a loop and the cup
    // reproduces the same pair below.
    return {out, true};
  }
  // The cap connects pa to pb; the cup gives a fresh pair at a, b.
  out[pa] = static_cast<std::uint8_t>(pb);
  out[pb] = static_cast<std::uint8_t>(pa);
  out[a] = static_cast<std::uint8_t>(b);
  out[b] = static_cast<std::uint8_t>(a);
  return {out, false};
}

// Loops in the trace closure (top k joined to bottom n+k).
int closure_loops(const Diagram& d, int n) {
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = start;
    while (!seen[p]) {
      seen[p] = true;
      const int q = d[p];
      seen[q] = true;
      p = q < n ? q + n : q - n;
    }
  }
  return loops;
}

LaurentPoly power(const LaurentPoly& base, int k) {
  LaurentPoly out = 1;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

LaurentPoly kauffman_bracket(const BraidWord& w, int max_strands) {
  const int n = w.strands();
  if (n > max_strands) {
    throw std::length_error("Jones computation limited to " +
                            std::to_string(max_strands) + " strands, got " +
                            std::to_string(n));
  }
  const LaurentPoly a = LaurentPoly::monomial(1, 1);
  const LaurentPoly a_inv = LaurentPoly::monomial(1, -1);
  const LaurentPoly loop = LaurentPoly(-2, {-1, 0, 0, 0, -1});  // -A^2 - A^-2

  Element state{{identity_diagram(n), 1}};
  for (int g : w.letters()) {
    const int i = std::abs(g) - 1;
    const LaurentPoly& keep = g > 0 ? a : a_inv;
    const LaurentPoly& smooth = g > 0 ? a_inv : a;
    Element next;
    for (const auto& [diagram, coeff] : state) {
      next[diagram] += coeff * keep;
      auto [joined, closed] = append_cup_cap(diagram, n, i);
      LaurentPoly c = coeff * smooth;
      if (closed) c *= loop;
      next[joined] += c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    state = std::move(next);
  }

  LaurentPoly bracket;
  for (const auto& [diagram, coeff] : state) {
    bracket += coeff * power(loop, closure_loops(diagram, n) - 1);
  }
  return bracket;
}

JonesPolynomial jones_polynomial(const BraidWord& w, int max_strands) {
  const int writhe = w.exponent_sum();
  // (-A^3)^{-writhe}
  const LaurentPoly correction =
      LaurentPoly::monomial(writhe % 2 == 0 ? 1 : -1, -3 * writhe);
  const LaurentPoly f = kauffman_bracket(w, max_strands) * correction;
  // A = t^{-1/4} = s^{-1}
  return JonesPolynomial{f.inverted_variable()};
}

std::optional<LaurentPoly> JonesPolynomial::in_t() const {
  if (quarter.is_zero()) return LaurentPoly{};
  std::vector<Integer> coeffs;
  for (int e = quarter.min_exp(); e <= quarter.max_exp(); ++e) {
    const Integer c = quarter.coeff(e);
    if (c != 0 && ((e % 4) + 4) % 4 != 0) return std::nullopt;
  }
  if (((quarter.min_exp() % 4) + 4) % 4 != 0) return std::nullopt;
  for (int e = quarter.min_exp(); e <= quarter.max_exp(); e += 4) {
    coeffs.push_back(quarter.coeff(e));
  }
  return LaurentPoly(quarter.min_exp() / 4, std::move(coeffs));
}

std::string to_string(const JonesPolynomial& v) {
  if (auto t = v.in_t()) return to_string(*t);
  const LaurentPoly& q = v.quarter;
  std::ostringstream out;
  bool first = true;
  for (int e = q.min_exp(); e <= q.max_exp(); ++e) {
    Integer c = q.coeff(e);
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
    if (e == 0) continue;
    out << 't';
    if (e % 4 == 0) {
      if (e != 4) out << '^' << e / 4;
    } else if (e % 2 == 0) {
      out << "^(" << e / 2 << "/2)";
    } else {
      out << "^(" << e << "/4)";
    }
  }
  return out.str();
}

}  // namespace braidkit
