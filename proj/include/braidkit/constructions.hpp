#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidkit/bandwords.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/word_problem.hpp"

namespace braidkit {

// A ribbon singularity of a quasipositive band: the two conjugator letters
// at [pos, pos+2) of band `band` are sigma_k^{2*sign}, and exactly one of the
// two strands twisting there is a foot strand of that band.
struct TransformSite {
  int band = 0;
  int pos = 0;
  int k = 1;
  int sign = 1;

  friend bool operator==(const TransformSite&, const TransformSite&) = default;
};

// Local rewrite at a site. Let Y be the pierced strand, X the foot strand it
// twists with, and N the site's new strand. N lives at the far right of the
// braid (position n + 1 + s for the s-th site in (band, pos) order) and is
// brought next to X by a finger F that crosses only strands it never links:
//   X right of Y: F = sigma_{P-1} ... sigma_{k+2}, giving [Y, X, N]
//   X left of Y:  F = sigma_{P-1}^{-1} ... sigma_k^{-1}, giving [N, X, Y]
// With a the X-Y generator and b the X-N generator, the twist a^{2e} becomes
//   F a^{2e} b^{-2e} F^{-1}                     (embedding)
//   F a b a b^{-2} F^{-1}           if e = +1   (unknotting, positive band b)
//   F a^{-2} b a b F^{-1}           if e = -1   (unknotting, positive band a)
// i.e. the unknotting band is a positive generator placed inside whichever
// clasp twist is positive. Deleting the new strands returns beta verbatim.
struct SublinkEmbedding {
  QPBandWord beta_prime;        // same band count as beta, n + m strands
  QPBandWord gamma;             // beta_prime plus one positive band per site
  BraidWord gamma_mixed;        // product of u'_b sigma u_b^{-1} per band
  std::vector<int> added_strands;  // starting positions of the new strands
  std::vector<TransformSite> sites;  // normalized (sorted) site list
};

// Validates the sites (range, pattern, foot strand, disjointness) and builds
// beta' and gamma. Throws PatternMismatch on any invalid or overlapping site.
SublinkEmbedding embed_sublink(const QPBandWord& beta,
                               std::span<const TransformSite> sites);

struct UnknotCertificate {
  int beta_components = 0;
  int beta_prime_components = 0;
  int beta_prime_bands = 0;
  int beta_bands = 0;
  int gamma_components = 0;
  int gamma_self_linking = 0;
  int gamma_exponent_sum = 0;
  int beta_prime_exponent_sum = 0;
  int sites = 0;
  LaurentPoly gamma_alexander;
  std::optional<JonesPolynomial> gamma_jones;
  bool sublink_recovered = false;  // deleting new strands gives beta's word
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct UnknotOptions {
  bool jones = true;
  int max_strands = kDefaultJonesMaxStrands;
};

// Recomputes every claimed property of an embedding from the words alone.
UnknotCertificate certify_embedding(const QPBandWord& beta,
                                    const SublinkEmbedding& e,
                                    const UnknotOptions& options = {});

// Families of 4-braids with genus 2n+1 (beta_n) and n+1 (gamma_n).
EmbeddedBandWord make_beta_n(int n);
QPBandWord make_beta_n_qp(int n);
EmbeddedBandWord make_gamma_n(int n);

struct SurgeryReport {
  EmbeddedBandWord result;  // beta_n with the positive bands inserted
  int insertions = 0;
  bool equal_to_gamma = false;
};

// Inserts sigma_{1,3} inside the u^{-1} term, sigma_1^n after it and
// sigma_2^{n+1} at the end, then decides equality with gamma_n.
SurgeryReport band_surgery_sequence(int n, std::size_t budget = kDefaultHandleBudget);
bool verify_band_surgery_sequence(int n, std::size_t budget = kDefaultHandleBudget);

// Plumbs a Hopf band across the sigma_{1,2}^{sign} letter at `position`,
// doubling it. Throws PatternMismatch if that letter is not (1,2) and
// std::invalid_argument if its sign differs from `sign`.
EmbeddedBandWord hopf_plumb_rewrite(const EmbeddedBandWord& w, std::size_t position,
                                    int sign);

// Positions in beta_{n-1} of the four sigma_1 runs' last letters, with signs,
// in order; applying the rewrites right to left yields beta_n. Empty for
// n < 2 (beta_0 has no sigma_1 letters to plumb across).
std::vector<std::pair<std::size_t, int>> beta_plumbing_sites(int n);

}  // namespace braidkit
