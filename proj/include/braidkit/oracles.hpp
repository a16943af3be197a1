#pragma once

#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/laurent.hpp"

// Deliberately naive reference computations, written without sharing code
// paths with the main algorithms they check.
namespace braidkit::oracles {

// sigma_{i,j} spelled out letter by letter from the defining product
// (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^{-1}.
std::vector<int> band_generator_prefix_product(int i, int j);

// Kauffman bracket by summing over all 2^c smoothings of the closed braid
// diagram, counting loops with union-find. Exponential; for short words only.
LaurentPoly state_sum_bracket(const BraidWord& w);
JonesPolynomial state_sum_jones(const BraidWord& w);

}  // namespace braidkit::oracles
