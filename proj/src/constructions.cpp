#include "braidkit/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "braidkit/alexander.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/errors.hpp"

namespace braidkit {

namespace {

std::string describe(const TransformSite& s) {
  return "site (band " + std::to_string(s.band) + ", pos " + std::to_string(s.pos) +
         ", k " + std::to_string(s.k) + ", sign " + std::to_string(s.sign) + ")";
}

void append(std::vector<int>& out, const std::vector<int>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

std::vector<TransformSite> normalized_sites(const QPBandWord& beta,
                                            std::span<const TransformSite> sites) {
  std::vector<TransformSite> out(sites.begin(), sites.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.band != b.band ? a.band < b.band : a.pos < b.pos;
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& s = out[i];
    if (s.band < 0 || s.band >= static_cast<int>(beta.size())) {
      throw PatternMismatch(describe(s) + ": no such band");
    }
    if (s.sign != 1 && s.sign != -1) {
      throw PatternMismatch(describe(s) + ": sign must be +1 or -1");
    }
    const auto& conj = beta.bands()[s.band].conjugator;
    if (s.pos < 0 || s.pos + 1 >= static_cast<int>(conj.size())) {
      throw PatternMismatch(describe(s) + ": position outside the conjugator");
    }
    const int expected = s.sign * s.k;
    if (conj[s.pos] != expected || conj[s.pos + 1] != expected) {
      throw PatternMismatch(describe(s) + ": conjugator letters " +
                            std::to_string(conj[s.pos]) + " " +
                            std::to_string(conj[s.pos + 1]) + " do not match " +
                            std::to_string(expected) + " " + std::to_string(expected));
    }
    if (i > 0 && out[i - 1].band == s.band && out[i - 1].pos + 2 > s.pos) {
      throw PatternMismatch(describe(out[i - 1]) + " overlaps " + describe(s));
    }
  }
  return out;
}

// Strands (by starting position, 0-based) occupying positions k, k+1 after
// the whole conjugator, i.e. the two feet of the band.
std::pair<int, int> foot_strands(const Band& band, int strands) {
  std::vector<int> at(strands);
  for (int i = 0; i < strands; ++i) at[i] = i;
  for (int g : band.conjugator) {
    const int a = std::abs(g);
    std::swap(at[a - 1], at[a]);
  }
  return {at[band.index - 1], at[band.index]};
}

struct LocalRewrite {
  std::vector<int> finger;      // F
  std::vector<int> clasp;       // a^{2e} b^{-2e}
  std::vector<int> resolved;    // clasp with the unknotting generator inserted
  std::size_t band_offset = 0;  // index of the inserted letter in `resolved`
};

LocalRewrite local_rewrite(int k, int sign, bool foot_on_right, int new_position) {
  LocalRewrite r;
  int a;  // X-Y generator
  int b;  // X-N generator
  if (foot_on_right) {
    for (int i = new_position - 1; i >= k + 2; --i) r.finger.push_back(i);
    a = k;
    b = k + 1;
  } else {
    for (int i = new_position - 1; i >= k; --i) r.finger.push_back(-i);
    a = k + 1;
    b = k;
  }
  const int e = sign;
  r.clasp = {e * a, e * a, -e * b, -e * b};
  if (e > 0) {
    r.resolved = {a, b, a, -b, -b};
    r.band_offset = 1;
  } else {
    r.resolved = {-a, -a, b, a, b};
    r.band_offset = 3;
  }
  return r;
}

}  // namespace

SublinkEmbedding embed_sublink(const QPBandWord& beta,
                               std::span<const TransformSite> sites) {
  const int n = beta.strands();
  SublinkEmbedding out;
  out.sites = normalized_sites(beta, sites);
  const int m = static_cast<int>(out.sites.size());
  const int total = n + m;

  std::vector<Band> prime_bands;
  std::vector<Band> gamma_bands;
  std::vector<int> mixed;
  std::size_t next_site = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const Band& band = beta.bands()[b];
    const auto [foot1, foot2] = foot_strands(band, n);
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[i] = i;

    std::vector<int> prime_conj;    // u of beta'
    std::vector<int> resolved;      // u' of gamma
    std::vector<Band> inserted;     // unknotting bands of this conjugator
    const auto& conj = band.conjugator;
    for (std::size_t q = 0; q < conj.size();) {
      const bool is_site = next_site < out.sites.size() &&
                           out.sites[next_site].band == static_cast<int>(b) &&
                           out.sites[next_site].pos == static_cast<int>(q);
      if (!is_site) {
        prime_conj.push_back(conj[q]);
        resolved.push_back(conj[q]);
        const int a = std::abs(conj[q]);
        std::swap(at[a - 1], at[a]);
        ++q;
        continue;
      }
      const TransformSite& s = out.sites[next_site];
      const int left = at[s.k - 1];
      const int right = at[s.k];
      const bool left_is_foot = left == foot1 || left == foot2;
      const bool right_is_foot = right == foot1 || right == foot2;
      if (left_is_foot == right_is_foot) {
        throw PatternMismatch(describe(s) + (left_is_foot
                                                 ? ": both strands are feet of the band"
                                                 : ": neither strand is a foot of the band"));
      }
      const int new_position = n + 1 + static_cast<int>(next_site);
      const LocalRewrite r = local_rewrite(s.k, s.sign, right_is_foot, new_position);
      const auto finger_back = inverse_letters(r.finger);

      append(prime_conj, r.finger);
      // The unknotting band is conjugated by the unmodified prefix: the
      // beta' conjugator so far plus the clasp letters before the insertion.
      std::vector<int> band_conj = prime_conj;
      for (std::size_t i = 0; i < r.band_offset; ++i) band_conj.push_back(r.clasp[i]);
      inserted.push_back(Band{band_conj, std::abs(r.resolved[r.band_offset])});

      append(prime_conj, r.clasp);
      append(prime_conj, finger_back);
      append(resolved, r.finger);
      append(resolved, r.resolved);
      append(resolved, finger_back);
      out.added_strands.push_back(new_position);
      ++next_site;
      q += 2;
    }
    Band prime{prime_conj, band.index};
    prime_bands.push_back(prime);
    gamma_bands.insert(gamma_bands.end(), inserted.begin(), inserted.end());
    gamma_bands.push_back(prime);
    append(mixed, resolved);
    mixed.push_back(band.index);
    append(mixed, inverse_letters(prime_conj));
  }
  out.beta_prime = QPBandWord(total, std::move(prime_bands));
  out.gamma = QPBandWord(total, std::move(gamma_bands));
  out.gamma_mixed = BraidWord(total, std::move(mixed));
  return out;
}

UnknotCertificate certify_embedding(const QPBandWord& beta, const SublinkEmbedding& e,
                                    const UnknotOptions& options) {
  UnknotCertificate c;
  const BraidWord beta_word = to_braid_word(beta);
  const BraidWord prime_word = to_braid_word(e.beta_prime);
  const BraidWord& gamma_word = e.gamma_mixed;
  const int m = static_cast<int>(e.sites.size());
  auto fail = [&](std::string message) { c.failures.push_back(std::move(message)); };

  c.sites = m;
  c.beta_bands = static_cast<int>(beta.size());
  c.beta_prime_bands = static_cast<int>(e.beta_prime.size());
  c.beta_components = closure_summary(beta_word).components;
  const ClosureSummary prime = closure_summary(prime_word);
  const ClosureSummary gamma = closure_summary(gamma_word);
  c.beta_prime_components = prime.components;
  c.beta_prime_exponent_sum = prime.exponent_sum;
  c.gamma_components = gamma.components;
  c.gamma_self_linking = gamma.self_linking;
  c.gamma_exponent_sum = gamma.exponent_sum;

  if (c.beta_prime_bands != c.beta_bands) fail("band count of beta' differs from beta");
  if (c.beta_prime_components != c.beta_components + m) {
    fail("beta' has " + std::to_string(c.beta_prime_components) +
         " components, expected " + std::to_string(c.beta_components + m));
  }
  if (free_reduce(to_braid_word(e.gamma)) != free_reduce(gamma_word)) {
    fail("band form of gamma does not reduce to the mixed form");
  }

  // Each new strand is a fixed point of the permutation, so its component is
  // the cycle containing that position alone.
  std::set<int> new_components;
  const auto cycles = permutation(prime_word).cycles();
  for (int strand : e.added_strands) {
    for (std::size_t id = 0; id < cycles.size(); ++id) {
      if (std::find(cycles[id].begin(), cycles[id].end(), strand) != cycles[id].end()) {
        new_components.insert(static_cast<int>(id));
      }
    }
  }
  if (m == 0) {
    c.sublink_recovered = prime_word == beta_word;
  } else if (static_cast<int>(new_components.size()) == m) {
    const BraidWord sublink = delete_strands(prime_word, new_components);
    c.sublink_recovered = free_reduce(sublink) == free_reduce(beta_word);
  }
  if (!c.sublink_recovered) fail("deleting the new strands does not recover beta");

  if (c.gamma_components != 1) {
    fail("gamma has " + std::to_string(c.gamma_components) + " components");
  }
  if (c.gamma_self_linking != -1) {
    fail("gamma has self-linking " + std::to_string(c.gamma_self_linking));
  }
  if (c.gamma_exponent_sum != c.beta_prime_exponent_sum + m) {
    fail("e(gamma) != e(beta') + m");
  }
  c.gamma_alexander = alexander_polynomial(gamma_word);
  if (c.gamma_alexander != LaurentPoly(1)) {
    fail("Alexander polynomial of gamma is " + to_string(c.gamma_alexander));
  }
  if (options.jones) {
    c.gamma_jones = jones_polynomial(gamma_word, options.max_strands);
    if (*c.gamma_jones != JonesPolynomial{LaurentPoly(1)}) {
      fail("Jones polynomial of gamma is " + to_string(*c.gamma_jones));
    }
  }
  return c;
}

namespace {

void push_run(std::vector<BandLetter>& w, int count, int sign) {
  for (int i = 0; i < count; ++i) w.push_back({1, 2, sign});
}

}  // namespace

EmbeddedBandWord make_beta_n(int n) {
  if (n < 0) throw std::invalid_argument("family index must be non-negative");
  std::vector<BandLetter> w{{1, 4, 1}, {2, 3, 1}};
  push_run(w, n, 1);
  w.push_back({1, 3, -1});
  push_run(w, n, -1);
  w.push_back({2, 4, 1});
  push_run(w, n, 1);
  w.push_back({1, 3, 1});
  push_run(w, n, -1);
  return EmbeddedBandWord(4, std::move(w));
}

QPBandWord make_beta_n_qp(int n) {
  if (n < 0) throw std::invalid_argument("family index must be non-negative");
  // u^{-1} sigma_{2,4} u with u^{-1} = sigma_1^n sigma_{1,3}^{-1} sigma_1^{-n}
  // and sigma_{2,4} = sigma_2 sigma_3 sigma_2^{-1}.
  std::vector<int> conj(static_cast<std::size_t>(n), 1);
  append(conj, band_generator_letters(1, 3, -1));
  conj.insert(conj.end(), static_cast<std::size_t>(n), -1);
  conj.push_back(2);
  return QPBandWord(4, {Band{{1, 2}, 3}, Band{{}, 2}, Band{conj, 3}});
}

EmbeddedBandWord make_gamma_n(int n) {
  if (n < 0) throw std::invalid_argument("family index must be non-negative");
  std::vector<BandLetter> w{{1, 4, 1}, {2, 3, 1}, {2, 4, 1}};
  push_run(w, n, 1);
  w.push_back({1, 3, 1});
  for (int i = 0; i < n + 1; ++i) w.push_back({2, 3, 1});
  return EmbeddedBandWord(4, std::move(w));
}

SurgeryReport band_surgery_sequence(int n, std::size_t budget) {
  const EmbeddedBandWord beta = make_beta_n(n);
  std::vector<BandLetter> w = beta.letters();
  SurgeryReport report;
  // sigma_{1,3} right after sigma_{1,3}^{-1} inside sigma_1^n sigma_{1,3}^{-1} sigma_1^{-n}.
  const auto middle = w.begin() + 2 + n + 1;
  w.insert(middle, BandLetter{1, 3, 1});
  report.insertions += 1;
  push_run(w, n, 1);
  report.insertions += n;
  for (int i = 0; i < n + 1; ++i) w.push_back({2, 3, 1});
  report.insertions += n + 1;
  report.result = EmbeddedBandWord(4, std::move(w));
  report.equal_to_gamma = braid_equal(to_braid_word(report.result),
                                      to_braid_word(make_gamma_n(n)), budget);
  return report;
}

bool verify_band_surgery_sequence(int n, std::size_t budget) {
  const SurgeryReport r = band_surgery_sequence(n, budget);
  return r.equal_to_gamma && r.insertions == 2 * n + 2;
}

EmbeddedBandWord hopf_plumb_rewrite(const EmbeddedBandWord& w, std::size_t position,
                                    int sign) {
  if (position >= w.size()) throw std::out_of_range("plumbing position out of range");
  const BandLetter letter = w.letters()[position];
  if (letter.i != 1 || letter.j != 2) {
    throw PatternMismatch("letter at position " + std::to_string(position) +
                          " is not sigma_1^{+-1}");
  }
  if (letter.sign != sign) {
    throw std::invalid_argument("Hopf plumbing must be across a band of like sign");
  }
  std::vector<BandLetter> out = w.letters();
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(position), letter);
  return EmbeddedBandWord(w.strands(), std::move(out));
}

std::vector<std::pair<std::size_t, int>> beta_plumbing_sites(int n) {
  if (n < 2) return {};
  const auto r = static_cast<std::size_t>(n - 1);  // run length in beta_{n-1}
  return {{2 + r - 1, 1}, {3 + 2 * r - 1, -1}, {4 + 3 * r - 1, 1}, {5 + 4 * r - 1, -1}};
}

}  // namespace braidkit
