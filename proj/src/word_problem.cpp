#include "braidkit/word_problem.hpp"

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

struct Handle {
  std::size_t open;
  std::size_t close;
};

// Scan left to right; open[i] holds the latest sigma_i letter not yet followed
// by any letter of lower index.
std::optional<Handle> first_closing_handle(const std::vector<int>& word,
                                           int strands) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> open(strands, none);
  for (std::size_t q = 0; q < word.size(); ++q) {
    const int g = word[q];
    const int i = std::abs(g);
    const std::size_t p = open[i];
    if (p != none && word[p] == -g) return Handle{p, q};
    open[i] = q;
    for (int k = i + 1; k < strands; ++k) open[k] = none;
  }
  return std::nullopt;
}

void reduce_handle(std::vector<int>& word, Handle h) {
  const int e = word[h.open] > 0 ? 1 : -1;
  const int i = std::abs(word[h.open]);
  std::vector<int> out;
  out.reserve(word.size() + 2 * (h.close - h.open));
  out.insert(out.end(), word.begin(), word.begin() + h.open);
  for (std::size_t q = h.open + 1; q < h.close; ++q) {
    const int g = word[q];
    if (std::abs(g) == i + 1) {
      // sigma_i^e sigma_{i+1}^d sigma_i^{-e} = sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e
      const int d = g > 0 ? 1 : -1;
      out.push_back(-e * (i + 1));
      out.push_back(d * i);
      out.push_back(e * (i + 1));
    } else {
      out.push_back(g);
    }
  }
  out.insert(out.end(), word.begin() + h.close + 1, word.end());
  word = std::move(out);
}

}  // namespace

BraidWord handle_reduce(const BraidWord& w, std::size_t budget) {
  std::vector<int> word = w.letters();
  std::size_t steps = 0;
  while (auto h = first_closing_handle(word, w.strands())) {
    if (steps++ >= budget) throw BudgetExceeded(budget);
    reduce_handle(word, *h);
  }
  return BraidWord(w.strands(), std::move(word));
}

bool is_trivial_braid(const BraidWord& w, std::size_t budget) {
  return handle_reduce(w, budget).empty();
}

bool braid_equal(const BraidWord& u, const BraidWord& v, std::size_t budget) {
  return is_trivial_braid(concat(u, inverse(v)), budget);
}

}  // namespace braidkit
