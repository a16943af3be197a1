#include <stdexcept>

#include "doctest.h"

#include "braidkit/bandwords.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/word_problem.hpp"

using namespace braidkit;

TEST_CASE("embedded bandword text") {
  const EmbeddedBandWord w = parse_embedded_bandword("B(1,4) 2 B(1,3)^-1 B(2,4) B(1,3)", 4);
  REQUIRE(w.size() == 5);
  CHECK(w.letters()[1] == BandLetter{2, 3, 1});
  CHECK(w.letters()[2] == BandLetter{1, 3, -1});
  CHECK(to_string(w) == "B(1,4) B(2,3) B(1,3)^-1 B(2,4) B(1,3)");
  CHECK(parse_embedded_bandword(to_string(w), 4) == w);
  CHECK(parse_embedded_bandword("-1^2", 2).letters() ==
        std::vector<BandLetter>{{1, 2, -1}, {1, 2, -1}});
  CHECK_THROWS(parse_embedded_bandword("B(2,2)", 3));
  CHECK_THROWS_AS(EmbeddedBandWord(3, {{1, 4, 1}}), std::out_of_range);
}

TEST_CASE("expansion letter counts") {
  // 5 + 1 + 3 + 3 + 3 letters.
  const EmbeddedBandWord w = parse_embedded_bandword("B(1,4) 2 B(1,3)^-1 B(2,4) B(1,3)", 4);
  CHECK(to_braid_word(w).length() == 15);
  CHECK(to_braid_word(w).letters() ==
        std::vector<int>{1, 2, 3, -2, -1, 2, 1, -2, -1, 2, 3, -2, 1, 2, -1});
}

TEST_CASE("Bennequin surfaces") {
  const SurfaceSummary trefoil = bennequin_summary(parse_embedded_bandword("1 1 1", 2));
  CHECK(trefoil.euler_characteristic == -1);
  CHECK(trefoil.components == 1);
  CHECK(trefoil.genus == HalfInteger::from_int(1));
  const SurfaceSummary hopf = bennequin_summary(parse_embedded_bandword("1 1", 2));
  CHECK(hopf.components == 2);
  CHECK(hopf.genus == HalfInteger::from_int(0));
  // Two disks and no bands: a split unlink of two disks.
  const SurfaceSummary split = bennequin_summary(EmbeddedBandWord(2, {}));
  CHECK(split.euler_characteristic == 2);
  CHECK(split.genus == HalfInteger::from_int(0));
  // Disconnected surface: a trefoil band pair and a lone disk.
  const SurfaceSummary pieces = bennequin_summary(parse_embedded_bandword("1 1 1", 3));
  CHECK(pieces.genus == HalfInteger::from_int(1));
}

TEST_CASE("quasipositive bandwords") {
  const QPBandWord w(3, {Band{{2, 1, 1}, 2}, Band{{1}, 2}});
  CHECK(to_braid_word(w).letters() == std::vector<int>{2, 1, 1, 2, -1, -1, -2, 1, 2, -1});
  CHECK(to_braid_word(w).exponent_sum() == 2);
  const SurfaceSummary s = qp_ribbon_summary(w);
  CHECK(s.bands == 2);
  CHECK(s.euler_characteristic == 1);
  CHECK(s.genus == HalfInteger::from_int(0));
  CHECK_FALSE(qp_ribbon_summary(QPBandWord(2, {Band{{}, 1}, Band{{}, 1}})).genus.has_value());
  CHECK(to_braid_word(QPBandWord(3, {Band{{1, -1}, 2}}), true).letters() == std::vector<int>{2});
  CHECK_THROWS_AS(QPBandWord(3, {Band{{}, 3}}), std::out_of_range);
}
