#include "braidkit/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "braidkit/errors.hpp"

namespace braidkit {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw std::invalid_argument("strand count must be positive, got " +
                                std::to_string(strands_));
  }
  check_letters(letters_, strands_);
}

int BraidWord::exponent_sum() const noexcept {
  int e = 0;
  for (int g : letters_) e += g > 0 ? 1 : -1;
  return e;
}

void check_letters(std::span<const int> letters, int strands) {
  for (int g : letters) {
    if (g == 0 || std::abs(g) > strands - 1) {
      throw std::out_of_range("letter " + std::to_string(g) +
                              " out of range for " + std::to_string(strands) +
                              " strands");
    }
  }
}

namespace {

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[end])))
      ++end;
    const char* first = text_.data() + start;
    if (*first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end || end == start) {
      throw ParseError("expected integer", start);
    }
    pos_ = end;
    return value;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 1) {
    throw std::invalid_argument("strand count must be positive");
  }
  Lexer lex(text);
  std::vector<int> letters;
  lex.skip_space();
  while (!lex.done()) {
    const std::size_t token_start = lex.pos();
    std::vector<int> atom;
    if (lex.peek() == 'B') {
      lex.expect('B');
      lex.expect('(');
      const int i = lex.integer();
      lex.expect(',');
      const int j = lex.integer();
      lex.expect(')');
      if (!(1 <= i && i < j)) {
        throw ParseError("band needs 1 <= i < j", token_start);
      }
      if (j > strands) {
        throw std::out_of_range("band B(" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range for " +
                                std::to_string(strands) + " strands");
      }
      atom = band_generator_letters(i, j);
    } else {
      const int g = lex.integer();
      if (g == 0) throw ParseError("zero is not a generator", token_start);
      atom = {g};
    }
    int repeat = 1;
    if (lex.peek() == '^') {
      lex.expect('^');
      const std::size_t exp_pos = lex.pos();
      repeat = lex.integer();
      if (repeat == 0) throw ParseError("zero exponent", exp_pos);
    }
    if (!lex.done() && !std::isspace(static_cast<unsigned char>(lex.peek()))) {
      throw ParseError("unexpected character", lex.pos());
    }
    if (repeat < 0) atom = inverse_letters(atom);
    for (int r = 0; r < std::abs(repeat); ++r) {
      letters.insert(letters.end(), atom.begin(), atom.end());
    }
    lex.skip_space();
  }
  check_letters(letters, strands);
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g);
  }
  return out;
}

std::vector<int> inverse_letters(std::span<const int> letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& g : out) g = -g;
  return out;
}

std::vector<int> free_reduce_letters(std::span<const int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int g : letters) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  return BraidWord(w.strands(), inverse_letters(w.letters()));
}

namespace {
void require_same_strands(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw std::invalid_argument("strand-count mismatch: " +
                                std::to_string(u.strands()) + " vs " +
                                std::to_string(v.strands()));
  }
}
}  // namespace

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v);
  std::vector<int> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& u) {
  return concat(concat(u, w), inverse(u));
}

BraidWord free_reduce(const BraidWord& w) {
  return BraidWord(w.strands(), free_reduce_letters(w.letters()));
}

std::vector<int> band_generator_letters(int i, int j, int sign) {
  if (!(1 <= i && i < j)) {
    throw std::out_of_range("band indices must satisfy 1 <= i < j");
  }
  std::vector<int> prefix;
  for (int g = i; g <= j - 2; ++g) prefix.push_back(g);
  std::vector<int> out = prefix;
  out.push_back(sign > 0 ? j - 1 : -(j - 1));
  const auto tail = inverse_letters(prefix);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

BraidWord expand_band_generator(int i, int j, int strands) {
  if (!(1 <= i && i < j && j <= strands)) {
    throw std::out_of_range("band (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range for " +
                            std::to_string(strands) + " strands");
  }
  return BraidWord(strands, band_generator_letters(i, j));
}

}  // namespace braidkit
