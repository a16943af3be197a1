#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/half_integer.hpp"

namespace braidkit {

// One letter sigma_{i,j}^{sign} of an embedded bandword, 1 <= i < j <= n.
struct BandLetter {
  int i = 1;
  int j = 2;
  int sign = 1;

  friend bool operator==(const BandLetter&, const BandLetter&) = default;
};

// Word in the band generators sigma_{i,j}^{+-1}. Each letter is one twisted
// band of the Bennequin surface built on n disks.
class EmbeddedBandWord {
public:
  EmbeddedBandWord() = default;
  EmbeddedBandWord(int strands, std::vector<BandLetter> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<BandLetter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool all_positive() const noexcept;

  friend bool operator==(const EmbeddedBandWord&, const EmbeddedBandWord&) = default;

private:
  int strands_ = 1;
  std::vector<BandLetter> letters_;
};

// A positive band conjugator * sigma_index * conjugator^{-1}.
struct Band {
  std::vector<int> conjugator;
  int index = 1;

  friend bool operator==(const Band&, const Band&) = default;
};

// Product of positive bands. There is no negative band: quasipositivity is
// carried by the type.
class QPBandWord {
public:
  QPBandWord() = default;
  QPBandWord(int strands, std::vector<Band> bands);

  int strands() const noexcept { return strands_; }
  const std::vector<Band>& bands() const noexcept { return bands_; }
  std::size_t size() const noexcept { return bands_.size(); }

  friend bool operator==(const QPBandWord&, const QPBandWord&) = default;

private:
  int strands_ = 1;
  std::vector<Band> bands_;
};

struct SurfaceSummary {
  int strands = 0;
  int bands = 0;       // handle count c
  int components = 0;  // closure components k
  int euler_characteristic = 0;
  // Seifert genus of the Bennequin surface, or slice genus of the ribbon
  // surface for a quasipositive knot. Empty when not defined.
  std::optional<HalfInteger> genus;

  friend bool operator==(const SurfaceSummary&, const SurfaceSummary&) = default;
};

// Tokens: "B(i,j)" and plain generator integers g (read as sigma_{|g|,|g|+1}
// with the sign of g), each with an optional "^k" suffix.
EmbeddedBandWord parse_embedded_bandword(std::string_view text, int strands);
std::string to_string(const EmbeddedBandWord& w);

BraidWord to_braid_word(const EmbeddedBandWord& w, bool reduce = false);
BraidWord to_braid_word(const QPBandWord& w, bool reduce = false);
std::vector<int> expand_band(const Band& band);

// chi = n - |w|; genus from chi and the closure component count, summed over
// the connected pieces of the surface (a single piece whenever the bands
// connect all n disks, where it reduces to (2 - k - chi) / 2).
SurfaceSummary bennequin_summary(const EmbeddedBandWord& w);

// chi = n - c. For a knot closure the genus is the sharp slice genus
// (c - n + 1) / 2; for links only chi and k are reported.
SurfaceSummary qp_ribbon_summary(const QPBandWord& w);

// Number of connected pieces of the disk-and-band surface.
int surface_pieces(int strands, const std::vector<std::pair<int, int>>& attachments);

}  // namespace braidkit
