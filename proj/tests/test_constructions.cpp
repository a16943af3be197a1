#include "doctest.h"

#include <stdexcept>
#include <random>

#include "braidkit/alexander.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/verification.hpp"

using namespace braidkit;

TEST_CASE("m(8_20): embedding and unknotting") {
  const QPBandWord beta = m8_20_bandword();
  CHECK(to_string(alexander_polynomial(to_braid_word(beta))) == "t^-2 - 2t^-1 + 3 - 2t + t^2");
  const SublinkEmbedding e = embed_sublink(beta, m8_20_sites());
  CHECK(e.beta_prime.strands() == 4);
  CHECK(e.beta_prime.size() == beta.size());
  CHECK(e.gamma.size() == beta.size() + 1);
  CHECK(e.added_strands == std::vector<int>{4});
  const UnknotCertificate c = certify_embedding(beta, e);
  CHECK(c.passed());
  CHECK(c.beta_prime_components == 2);
  CHECK(c.gamma_components == 1);
  CHECK(c.gamma_self_linking == -1);
  CHECK(c.gamma_alexander == LaurentPoly(1));
  CHECK(c.gamma_jones == JonesPolynomial{LaurentPoly(1)});
  CHECK(c.gamma_exponent_sum == c.beta_prime_exponent_sum + 1);
  CHECK(c.sublink_recovered);
}

TEST_CASE("the sigma^2 site becomes sigma_k sigma_{k+1} sigma_k") {
  const SublinkEmbedding e = embed_sublink(m8_20_bandword(), m8_20_sites());
  const auto& prime = e.beta_prime.bands()[0].conjugator;
  CHECK(prime == std::vector<int>{2, 3, 1, 1, -2, -2, -3});
  const auto& mixed = e.gamma_mixed.letters();
  CHECK(std::vector<int>(mixed.begin(), mixed.begin() + 5) == std::vector<int>{2, 3, 1, 2, 1});
}

TEST_CASE("empty site list is a passthrough") {
  const QPBandWord beta(2, {Band{{}, 1}});
  const SublinkEmbedding e = embed_sublink(beta, {});
  CHECK(e.beta_prime == beta);
  CHECK(e.gamma_mixed == to_braid_word(beta));
  const UnknotCertificate c = certify_embedding(beta, e);
  CHECK(c.passed());
}

TEST_CASE("invalid sites are rejected") {
  const QPBandWord beta = m8_20_bandword();
  CHECK_THROWS_AS(embed_sublink(beta, std::vector<TransformSite>{{0, 0, 1, 1}}), PatternMismatch);
  CHECK_THROWS_AS(embed_sublink(beta, std::vector<TransformSite>{{0, 1, 1, -1}}), PatternMismatch);
  CHECK_THROWS_AS(embed_sublink(beta, std::vector<TransformSite>{{2, 0, 1, 1}}), PatternMismatch);
  CHECK_THROWS_AS(embed_sublink(beta, std::vector<TransformSite>{{0, 2, 1, 1}}), PatternMismatch);
  const QPBandWord triple(3, {Band{{1, 1, 1}, 2}, Band{{}, 1}});
  CHECK_THROWS_AS(embed_sublink(triple, std::vector<TransformSite>{{0, 0, 1, 1}, {0, 1, 1, 1}}),
                  PatternMismatch);
  // Twist between the two feet of the band: not a piercing.
  const QPBandWord feet(2, {Band{{1, 1}, 1}});
  CHECK_THROWS_AS(embed_sublink(feet, std::vector<TransformSite>{{0, 0, 1, 1}}), PatternMismatch);
  // Twist between two strands that are not feet.
  const QPBandWord away(4, {Band{{1, 1}, 3}});
  CHECK_THROWS_AS(embed_sublink(away, std::vector<TransformSite>{{0, 0, 1, 1}}), PatternMismatch);
}

namespace {

struct Case {
  const char* name;
  QPBandWord beta;
  std::vector<TransformSite> sites;
};

std::vector<Case> slice_cases() {
  return {
      {"right foot, positive", QPBandWord(3, {Band{{2, 1, 1}, 2}, Band{{1}, 2}}), {{0, 1, 1, 1}}},
      {"right foot, negative", QPBandWord(3, {Band{{2, -1, -1}, 2}, Band{{1, 2, -1}, 2}}),
       {{0, 1, 1, -1}}},
      {"left foot, positive", QPBandWord(3, {Band{{2, 2}, 1}, Band{{}, 2}}), {{0, 0, 2, 1}}},
      {"left foot, negative", QPBandWord(3, {Band{{-2, -2}, 1}, Band{{}, 2}}), {{0, 0, 2, -1}}},
      {"left foot after a crossing", QPBandWord(3, {Band{{1, 2, 2}, 1}, Band{{}, 2}}),
       {{0, 1, 2, 1}}},
      {"four strands", QPBandWord(4, {Band{{3, 3}, 2}, Band{{}, 1}, Band{{}, 3}}), {{0, 0, 3, 1}}},
      {"two sites, one band", QPBandWord(3, {Band{{2, 1, 1, -1, -1}, 2}, Band{{1, 2, -1}, 2}}),
       {{0, 1, 1, 1}, {0, 3, 1, -1}}},
      {"double positive twist",
       QPBandWord(3, {Band{{2, 1, 1, 1, 1}, 2}, Band{{1, 2, -1}, 2}}),
       {{0, 1, 1, 1}, {0, 3, 1, 1}}},
      {"left foot, two sites", QPBandWord(3, {Band{{2, 2, 2, 2}, 1}, Band{{}, 2}}),
       {{0, 0, 2, 1}, {0, 2, 2, 1}}},
  };
}

}  // namespace

TEST_CASE("slice knots with all pierce sites supplied unknot") {
  for (const auto& c : slice_cases()) {
    CAPTURE(c.name);
    const SublinkEmbedding e = embed_sublink(c.beta, c.sites);
    const UnknotCertificate cert = certify_embedding(c.beta, e);
    for (const auto& f : cert.failures) MESSAGE(f);
    CHECK(cert.passed());
    CHECK(cert.beta_prime_components == cert.beta_components + static_cast<int>(c.sites.size()));
  }
}

TEST_CASE("sublink recovery on random quasipositive words") {
  std::mt19937 rng(41);
  int runs = 0;
  for (int t = 0; t < 400 && runs < 120; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<Band> bands;
    std::vector<TransformSite> sites;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int b = 0; b < count; ++b) {
      Band band;
      band.index = 1 + static_cast<int>(rng() % (n - 1));
      const int len = static_cast<int>(rng() % 4);
      for (int q = 0; q < len; ++q) {
        const int g = (1 + static_cast<int>(rng() % (n - 1))) * (rng() % 2 ? 1 : -1);
        if (rng() % 2) {
          sites.push_back({b, static_cast<int>(band.conjugator.size()), std::abs(g), g > 0 ? 1 : -1});
          band.conjugator.push_back(g);
        }
        band.conjugator.push_back(g);
      }
      bands.push_back(band);
    }
    const QPBandWord beta(n, bands);
    SublinkEmbedding e;
    try {
      e = embed_sublink(beta, sites);
    } catch (const PatternMismatch&) {
      continue;  // a twist that does not involve exactly one foot
    }
    ++runs;
    const BraidWord prime = to_braid_word(e.beta_prime);
    std::set<int> ids;
    const auto cycles = permutation(prime).cycles();
    for (int s : e.added_strands) {
      for (std::size_t id = 0; id < cycles.size(); ++id) {
        if (cycles[id] == std::vector<int>{s}) ids.insert(static_cast<int>(id));
      }
    }
    REQUIRE(ids.size() == e.added_strands.size());
    const BraidWord sub = delete_strands(prime, ids);
    const BraidWord word = to_braid_word(beta);
    CHECK(alexander_polynomial(sub) == alexander_polynomial(word));
    CHECK(permutation(sub).cycle_type() == permutation(word).cycle_type());
    CHECK(sub.exponent_sum() == word.exponent_sum());
    CHECK(e.beta_prime.size() == beta.size());
    CHECK(closure_summary(prime).components ==
          closure_summary(word).components + static_cast<int>(sites.size()));
  }
  CHECK(runs > 50);
}

TEST_CASE("families") {
  for (int n = 0; n <= 4; ++n) {
    const EmbeddedBandWord beta = make_beta_n(n);
    const EmbeddedBandWord gamma = make_gamma_n(n);
    CHECK(beta.size() == static_cast<std::size_t>(5 + 4 * n));
    CHECK(gamma.size() == static_cast<std::size_t>(5 + 2 * n));
    CHECK(gamma.all_positive());
    CHECK(closure_summary(to_braid_word(gamma)).components == 1);
    CHECK(bennequin_summary(gamma).genus == HalfInteger::from_int(n + 1));
    CHECK(bennequin_summary(beta).genus == HalfInteger::from_int(2 * n + 1));
    CHECK(make_beta_n_qp(n).size() == 3);
  }
  CHECK(to_string(make_beta_n(0)) == "B(1,4) B(2,3) B(1,3)^-1 B(2,4) B(1,3)");
  CHECK_THROWS_AS(make_beta_n(-1), std::invalid_argument);
  for (int n = 0; n <= 2; ++n) {
    CHECK(braid_equal(to_braid_word(make_beta_n(n)), to_braid_word(make_beta_n_qp(n))));
  }
}

TEST_CASE("band surgery sequence") {
  for (int n = 0; n <= 3; ++n) {
    const SurgeryReport r = band_surgery_sequence(n);
    CHECK(r.insertions == 2 * n + 2);
    CHECK(r.equal_to_gamma);
    CHECK(r.result.size() == make_beta_n(n).size() + static_cast<std::size_t>(2 * n + 2));
    CHECK(verify_band_surgery_sequence(n));
  }
}

TEST_CASE("Hopf plumbing rewrite") {
  const EmbeddedBandWord one(2, {{1, 2, 1}});
  const EmbeddedBandWord two = hopf_plumb_rewrite(one, 0, 1);
  CHECK(two.size() == 2);
  CHECK(bennequin_summary(two).euler_characteristic == 0);
  CHECK(bennequin_summary(one).euler_characteristic == 1);
  CHECK_THROWS_AS(hopf_plumb_rewrite(one, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(hopf_plumb_rewrite(make_beta_n(1), 0, 1), PatternMismatch);
  CHECK_THROWS_AS(hopf_plumb_rewrite(one, 3, 1), std::out_of_range);
  CHECK(beta_plumbing_sites(1).empty());
  for (int n = 2; n <= 4; ++n) {
    EmbeddedBandWord w = make_beta_n(n - 1);
    const auto sites = beta_plumbing_sites(n);
    REQUIRE(sites.size() == 4);
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
      const int chi = bennequin_summary(w).euler_characteristic;
      w = hopf_plumb_rewrite(w, it->first, it->second);
      CHECK(bennequin_summary(w).euler_characteristic == chi - 1);
    }
    CHECK(w == make_beta_n(n));
  }
}
