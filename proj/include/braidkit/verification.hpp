#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "braidkit/bandwords.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/word_problem.hpp"

namespace braidkit {

struct CheckResult {
  int criterion = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // one line per sub-check
  double seconds = 0;
};

struct VerifyOptions {
  bool jones = true;
  std::size_t budget = kDefaultHandleBudget;
  int max_strands = kDefaultJonesMaxStrands;
  unsigned seed = 20240917;
};

// Runs the nine acceptance checks in order. Throws BudgetExceeded when the
// handle-reduction budget is too small for a word-problem certificate.
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options = {});

// "PASS [3] title (0.12 s)" followed by indented detail lines.
std::string format_check(const CheckResult& r);

// The slice knot m(8_20) as a two-band quasipositive word on 3 strands and
// its single ribbon singularity (the sigma_1^2 twist in the first band).
QPBandWord m8_20_bandword();
std::vector<TransformSite> m8_20_sites();

// Words as printed for the same example in the source text: beta' and gamma
// on 5 strands, and the symmetric alternative w' sigma_2 w'^{-1} sigma_{1,5}.
BraidWord printed_m8_20_beta_prime();
BraidWord printed_m8_20_gamma();
BraidWord printed_m8_20_gamma_symmetric();

}  // namespace braidkit
