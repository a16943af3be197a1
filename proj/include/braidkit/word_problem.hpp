#pragma once

#include <cstddef>

#include "braidkit/braid_word.hpp"

namespace braidkit {

inline constexpr std::size_t kDefaultHandleBudget = 1'000'000;

// Dehornoy handle reduction. A sigma_i-handle is a factor
// sigma_i^e v sigma_i^{-e} where v has only letters of index > i; the handle
// whose closing letter comes first is reduced at each step, which makes it a
// permitted handle. Each reduction counts as one step against the budget.
// The result contains no handle: it is empty or its lowest generator occurs
// with a single sign. Throws BudgetExceeded.
BraidWord handle_reduce(const BraidWord& w,
                        std::size_t budget = kDefaultHandleBudget);

bool is_trivial_braid(const BraidWord& w,
                      std::size_t budget = kDefaultHandleBudget);

// is_trivial_braid(u v^{-1})
bool braid_equal(const BraidWord& u, const BraidWord& v,
                 std::size_t budget = kDefaultHandleBudget);

}  // namespace braidkit
