#pragma once

#include "braidkit/braid_word.hpp"
#include "braidkit/half_integer.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/laurent_matrix.hpp"

namespace braidkit {

// Reduced Burau image of one letter in GL_{n-1}(Z[t,t^-1]). sigma_i is the
// identity except in column i-1 (0-based), which holds t, -t, 1 at rows
// i-2, i-1, i (rows outside the matrix dropped).
LaurentMatrix burau_generator(int letter, int strands);

// Product of the generator images in word order. Requires n >= 2.
LaurentMatrix reduced_burau(const BraidWord& w);

// det(I - burau(w)) * (1 - t) / (1 - t^n), before normalization.
LaurentPoly alexander_unnormalized(const BraidWord& w);

// Centers the exponents (lowest exponent -floor(breadth/2)) and fixes the
// sign: Delta(1) = 1 for knots (components == 1), positive leading
// coefficient otherwise.
LaurentPoly normalize_alexander(const LaurentPoly& delta, int components);

// Normalized Alexander polynomial of the closure of w. B_1 gives 1.
LaurentPoly alexander_polynomial(const BraidWord& w);

// breadth / 2
HalfInteger alexander_genus_bound(const LaurentPoly& delta);

}  // namespace braidkit
