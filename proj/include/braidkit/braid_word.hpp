#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

// A word in the Artin generators of B_n. Letter g > 0 is sigma_g, g < 0 is
// sigma_{|g|}^{-1}; every letter satisfies 1 <= |g| <= n - 1.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  int exponent_sum() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 1;
  std::vector<int> letters_;
};

// Throws std::out_of_range if some letter is outside [1, strands-1].
void check_letters(std::span<const int> letters, int strands);

// Grammar: whitespace-separated tokens. A token is a signed nonzero integer or
// a band "B(i,j)", optionally followed by "^k" (k a nonzero integer; negative
// k repeats the inverse). Throws ParseError or std::out_of_range.
BraidWord parse_word(std::string_view text, int strands);

// Canonical text form: letters joined by single spaces. Inverse of parse_word.
std::string to_string(const BraidWord& w);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& u, const BraidWord& v);
// u w u^{-1}
BraidWord conjugate(const BraidWord& w, const BraidWord& u);
BraidWord free_reduce(const BraidWord& w);

std::vector<int> inverse_letters(std::span<const int> letters);
std::vector<int> free_reduce_letters(std::span<const int> letters);

// (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^{-1}
BraidWord expand_band_generator(int i, int j, int strands);
std::vector<int> band_generator_letters(int i, int j, int sign = 1);

}  // namespace braidkit
