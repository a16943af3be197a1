#include "braidkit/bandwords.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "braidkit/closure.hpp"

namespace braidkit {

EmbeddedBandWord::EmbeddedBandWord(int strands, std::vector<BandLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
  for (const auto& l : letters_) {
    if (!(1 <= l.i && l.i < l.j && l.j <= strands_)) {
      throw std::out_of_range("band letter (" + std::to_string(l.i) + "," +
                              std::to_string(l.j) + ") out of range for " +
                              std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("band letter sign must be +1 or -1");
    }
  }
}

bool EmbeddedBandWord::all_positive() const noexcept {
  for (const auto& l : letters_)
    if (l.sign < 0) return false;
  return true;
}

QPBandWord::QPBandWord(int strands, std::vector<Band> bands)
    : strands_(strands), bands_(std::move(bands)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
  for (const auto& b : bands_) {
    check_letters(b.conjugator, strands_);
    if (b.index < 1 || b.index > strands_ - 1) {
      throw std::out_of_range("band index " + std::to_string(b.index) +
                              " out of range for " + std::to_string(strands_) +
                              " strands");
    }
  }
}

EmbeddedBandWord parse_embedded_bandword(std::string_view text, int strands) {
  // Reuse the braid-word tokenizer token by token so that positions in
  // error messages refer to the original text.
  std::vector<BandLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int repeat = 1;
    std::string_view atom = token;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      atom = token.substr(0, caret);
      // Validate the exponent through the braid-word grammar.
      const BraidWord probe = parse_word("1" + std::string(token.substr(caret)), 2);
      repeat = probe.exponent_sum();
    }
    BandLetter letter;
    if (!atom.empty() && atom.front() == 'B') {
      const BraidWord probe = parse_word(atom, strands);  // validates bounds
      (void)probe;
      const auto comma = atom.find(',');
      letter.i = std::stoi(std::string(atom.substr(2, comma - 2)));
      letter.j = std::stoi(std::string(atom.substr(comma + 1, atom.size() - comma - 2)));
    } else {
      const BraidWord probe = parse_word(atom, strands);
      if (probe.length() != 1) throw std::invalid_argument("bad band token");
      const int g = probe.letters().front();
      letter = BandLetter{std::abs(g), std::abs(g) + 1, g > 0 ? 1 : -1};
    }
    if (repeat < 0) letter.sign = -letter.sign;
    for (int r = 0; r < std::abs(repeat); ++r) letters.push_back(letter);
    pos = end;
  }
  return EmbeddedBandWord(strands, std::move(letters));
}

std::string to_string(const EmbeddedBandWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "B(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

BraidWord to_braid_word(const EmbeddedBandWord& w, bool reduce) {
  std::vector<int> letters;
  for (const auto& l : w.letters()) {
    const auto band = band_generator_letters(l.i, l.j, l.sign);
    letters.insert(letters.end(), band.begin(), band.end());
  }
  if (reduce) letters = free_reduce_letters(letters);
  return BraidWord(w.strands(), std::move(letters));
}

std::vector<int> expand_band(const Band& band) {
  std::vector<int> out = band.conjugator;
  out.push_back(band.index);
  const auto tail = inverse_letters(band.conjugator);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

BraidWord to_braid_word(const QPBandWord& w, bool reduce) {
  std::vector<int> letters;
  for (const auto& b : w.bands()) {
    const auto e = expand_band(b);
    letters.insert(letters.end(), e.begin(), e.end());
  }
  if (reduce) letters = free_reduce_letters(letters);
  return BraidWord(w.strands(), std::move(letters));
}

int surface_pieces(int strands,
                   const std::vector<std::pair<int, int>>& attachments) {
  std::vector<int> parent(strands + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = strands;
  for (auto [a, b] : attachments) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --pieces;
    }
  }
  return pieces;
}

SurfaceSummary bennequin_summary(const EmbeddedBandWord& w) {
  SurfaceSummary s;
  s.strands = w.strands();
  s.bands = static_cast<int>(w.size());
  s.components = closure_summary(to_braid_word(w)).components;
  s.euler_characteristic = s.strands - s.bands;
  std::vector<std::pair<int, int>> attachments;
  for (const auto& l : w.letters()) attachments.emplace_back(l.i, l.j);
  const int pieces = surface_pieces(w.strands(), attachments);
  const int twice_genus = 2 * pieces - s.components - s.euler_characteristic;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw std::logic_error("inconsistent Bennequin surface: chi=" +
                           std::to_string(s.euler_characteristic) + " k=" +
                           std::to_string(s.components));
  }
  s.genus = HalfInteger::from_int(twice_genus / 2);
  return s;
}

SurfaceSummary qp_ribbon_summary(const QPBandWord& w) {
  SurfaceSummary s;
  s.strands = w.strands();
  s.bands = static_cast<int>(w.size());
  s.components = closure_summary(to_braid_word(w)).components;
  s.euler_characteristic = s.strands - s.bands;
  if (s.components == 1) {
    s.genus = HalfInteger::from_twice(s.bands - s.strands + 1);
  }
  return s;
}

}  // namespace braidkit
