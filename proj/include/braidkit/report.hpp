#pragma once

#include <optional>
#include <string>

#include "braidkit/bandwords.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/half_integer.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

struct InvariantReport {
  std::string word;  // serialized input
  int strands = 0;
  int components = 0;
  int exponent_sum = 0;
  int self_linking = 0;
  LaurentPoly alexander;
  int alexander_breadth = 0;
  HalfInteger genus_bound;
  std::optional<JonesPolynomial> jones;
  std::optional<SurfaceSummary> surface;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct ReportOptions {
  bool jones = true;
  int max_strands = kDefaultJonesMaxStrands;
};

InvariantReport make_report(const BraidWord& w, const ReportOptions& options = {});

// Aligned "key : value" lines.
std::string to_text(const InvariantReport& r);
std::string to_text(const SurfaceSummary& s);

}  // namespace braidkit
