#include "braidkit/verification.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <random>
#include <sstream>

#include "braidkit/alexander.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/oracles.hpp"

namespace braidkit {

namespace {

// Collects sub-checks of one criterion; the criterion passes iff all do.
class Checker {
public:
  explicit Checker(CheckResult& r) : r_(r) {}

  bool expect(bool ok, const std::string& what) {
    r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    all_ &= ok;
    return ok;
  }
  void note(const std::string& what) { r_.details.push_back("info " + what); }
  bool all() const { return all_; }

private:
  CheckResult& r_;
  bool all_ = true;
};

std::string str(const LaurentPoly& p) { return to_string(p); }

const std::string kBeta8_20 = "t^-2 - 2t^-1 + 3 - 2t + t^2";

void check_band_expansion(Checker& c, const VerifyOptions& o) {
  c.expect(expand_band_generator(1, 3, 3).letters() == std::vector<int>{1, 2, -1},
           "sigma_{1,3} in B_3 expands to 1 2 -1");
  bool adjacent = true;
  bool formula = true;
  bool alternative = true;
  int pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      adjacent &= expand_band_generator(i, i + 1, n).letters() == std::vector<int>{i};
      for (int j = i + 1; j <= n; ++j) {
        ++pairs;
        const BraidWord got = expand_band_generator(i, j, n);
        formula &= got.letters() == oracles::band_generator_prefix_product(i, j);
        // The same band built from the other end:
        // (sigma_{j-1}^{-1} ... sigma_{i+1}^{-1}) sigma_i (sigma_{i+1} ... sigma_{j-1}).
        std::vector<int> other;
        for (int g = j - 1; g >= i + 1; --g) other.push_back(-g);
        other.push_back(i);
        for (int g = i + 1; g <= j - 1; ++g) other.push_back(g);
        alternative &= braid_equal(got, BraidWord(n, other), o.budget);
      }
    }
  }
  c.expect(adjacent, "sigma_{i,i+1} expands to sigma_i for all n <= 6");
  c.expect(formula, "prefix-product oracle agrees on all " + std::to_string(pairs) +
                        " pairs i < j <= n <= 6");
  c.expect(alternative, "handle reduction: equal to the band built from sigma_i outward");
}

void check_example_genera(Checker& c, const VerifyOptions&) {
  for (int n : {0, 1}) {
    const EmbeddedBandWord beta = make_beta_n(n);
    const LaurentPoly delta = alexander_polynomial(to_braid_word(beta));
    const SurfaceSummary s = bennequin_summary(beta);
    const int breadth = delta.breadth();
    const int expected = n == 0 ? 2 : 6;
    c.expect(breadth == expected, "beta_" + std::to_string(n) + " breadth " +
                                      std::to_string(breadth) + " (expected " +
                                      std::to_string(expected) + "), Delta = " + str(delta));
    c.expect(s.genus && alexander_genus_bound(delta) == *s.genus,
             "beta_" + std::to_string(n) + " genus bound " +
                 to_string(alexander_genus_bound(delta)) + " meets Bennequin genus " +
                 (s.genus ? to_string(*s.genus) : "n/a"));
  }
}

void check_family(Checker& c, const VerifyOptions&) {
  for (int n = 0; n <= 3; ++n) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const EmbeddedBandWord beta = make_beta_n(n);
    const EmbeddedBandWord gamma = make_gamma_n(n);
    const SurfaceSummary sb = bennequin_summary(beta);
    const SurfaceSummary sg = bennequin_summary(gamma);
    c.expect(sg.components == 1 && sg.genus == HalfInteger::from_int(n + 1) &&
                 gamma.all_positive(),
             tag + "gamma_n positive knot, Bennequin genus " +
                 (sg.genus ? to_string(*sg.genus) : "n/a"));
    c.expect(sb.components == 1 && sb.genus == HalfInteger::from_int(2 * n + 1) &&
                 sb.euler_characteristic == -1 - 4 * n,
             tag + "beta_n knot, chi " + std::to_string(sb.euler_characteristic) +
                 ", Bennequin genus " + (sb.genus ? to_string(*sb.genus) : "n/a"));
    const LaurentPoly db = alexander_polynomial(to_braid_word(beta));
    const LaurentPoly dg = alexander_polynomial(to_braid_word(gamma));
    if (n <= 1) {
      c.expect(alexander_genus_bound(db) == HalfInteger::from_int(2 * n + 1),
               tag + "Alexander bound certifies g(beta_n) = " + std::to_string(2 * n + 1));
      c.expect(alexander_genus_bound(dg) == HalfInteger::from_int(n + 1),
               tag + "Alexander bound certifies g(gamma_n) = " + std::to_string(n + 1));
    } else {
      c.note(tag + "breadth Delta(beta_n) = " + std::to_string(db.breadth()) +
             " (reported, not asserted)");
    }
  }
}

void check_surgery(Checker& c, const VerifyOptions& o) {
  for (int n = 0; n <= 3; ++n) {
    const SurgeryReport r = band_surgery_sequence(n, o.budget);
    c.expect(r.equal_to_gamma && r.insertions == 2 * n + 2,
             "n=" + std::to_string(n) + ": " + std::to_string(r.insertions) +
                 " positive bands turn beta_n into gamma_n (handle reduction)");
  }
}

void check_worked_example(Checker& c, const VerifyOptions& o) {
  const QPBandWord beta = m8_20_bandword();
  const SublinkEmbedding e = embed_sublink(beta, m8_20_sites());
  UnknotOptions uo;
  uo.jones = o.jones;
  uo.max_strands = o.max_strands;
  const UnknotCertificate cert = certify_embedding(beta, e, uo);
  const BraidWord ours_prime = to_braid_word(e.beta_prime);
  const BraidWord printed_prime = printed_m8_20_beta_prime();
  const BraidWord printed_gamma = printed_m8_20_gamma();

  c.expect(free_reduce(ours_prime) == free_reduce(printed_prime),
           "constructed beta' equals the printed beta' up to free reduction");
  c.expect(free_reduce(e.gamma_mixed) == free_reduce(printed_gamma),
           "constructed gamma equals the printed gamma up to free reduction");
  c.note("constructed beta' (" + std::to_string(ours_prime.strands()) +
         " strands): " + to_string(ours_prime));
  c.note("constructed gamma: " + to_string(e.gamma_mixed));

  const int m = cert.sites;
  c.expect(cert.beta_prime_components == 1 + m,
           "constructed beta' components " + std::to_string(cert.beta_prime_components) +
               " = 1 + m with m = " + std::to_string(m));
  c.expect(cert.beta_prime_components == 3, "constructed beta' has 3 components");
  c.expect(cert.gamma_components == 1, "constructed gamma is a knot");
  c.expect(cert.gamma_self_linking == -1,
           "constructed gamma sl = " + std::to_string(cert.gamma_self_linking));
  c.expect(cert.gamma_alexander == LaurentPoly(1),
           "constructed gamma Delta = " + str(cert.gamma_alexander));
  if (cert.gamma_jones) {
    c.expect(*cert.gamma_jones == JonesPolynomial{LaurentPoly(1)},
             "constructed gamma Jones = " + to_string(*cert.gamma_jones));
  }
  c.expect(cert.gamma_exponent_sum == cert.beta_prime_exponent_sum + 2,
           "e(gamma) = e(beta') + 2 (constructed: " + std::to_string(cert.gamma_exponent_sum) +
               " vs " + std::to_string(cert.beta_prime_exponent_sum) + ")");

  // The printed words, taken literally.
  const ClosureSummary pp = closure_summary(printed_prime);
  const ClosureSummary pg = closure_summary(printed_gamma);
  const BraidWord printed_sym = printed_m8_20_gamma_symmetric();
  c.note("printed beta': components " + std::to_string(pp.components) + ", e = " +
         std::to_string(pp.exponent_sum));
  c.note("printed gamma: components " + std::to_string(pg.components) + ", sl = " +
         std::to_string(pg.self_linking) + ", Delta = " +
         str(alexander_polynomial(printed_gamma)));
  c.note("printed gamma, symmetric conjugation: components " +
         std::to_string(closure_summary(printed_sym).components) + ", Delta = " +
         str(alexander_polynomial(printed_sym)));
}

void check_sublink(Checker& c, const VerifyOptions&) {
  const QPBandWord beta = m8_20_bandword();
  const BraidWord beta_word = to_braid_word(beta);
  const SublinkEmbedding e = embed_sublink(beta, m8_20_sites());
  const BraidWord prime = to_braid_word(e.beta_prime);

  auto new_components = [](const BraidWord& w, const std::vector<int>& strands) {
    std::set<int> ids;
    const auto cycles = permutation(w).cycles();
    for (int s : strands) {
      for (std::size_t id = 0; id < cycles.size(); ++id) {
        for (int p : cycles[id]) {
          if (p == s) ids.insert(static_cast<int>(id));
        }
      }
    }
    return ids;
  };

  const BraidWord sub = delete_strands(prime, new_components(prime, e.added_strands));
  const LaurentPoly d = alexander_polynomial(sub);
  c.expect(str(alexander_polynomial(beta_word)) == kBeta8_20,
           "beta itself has Delta = " + str(alexander_polynomial(beta_word)));
  c.expect(sub.strands() == 3 && str(d) == kBeta8_20 && sub.exponent_sum() == 2,
           "deleting the " + std::to_string(e.added_strands.size()) +
               " new component(s) of the constructed beta' gives a " +
               std::to_string(sub.strands()) + "-strand word, Delta = " + str(d) +
               ", e = " + std::to_string(sub.exponent_sum()));
  c.expect(permutation(sub).cycle_type() == permutation(beta_word).cycle_type(),
           "permutation cycle type matches beta");
  c.expect(free_reduce(sub) == free_reduce(beta_word),
           "the recovered word is beta itself up to free reduction");

  // The printed beta' has two fixed strands (3 and 4), the natural reading of
  // its two added unknots.
  const BraidWord printed = printed_m8_20_beta_prime();
  const BraidWord printed_sub = delete_strands(printed, new_components(printed, {3, 4}));
  c.note("printed beta' minus strands 3, 4: Delta = " +
         str(alexander_polynomial(printed_sub)) + ", e = " +
         std::to_string(printed_sub.exponent_sum()));
}

void check_slice_genus(Checker& c, const VerifyOptions&) {
  const SurfaceSummary s = qp_ribbon_summary(m8_20_bandword());
  c.expect(s.bands == 2 && s.strands == 3 && s.genus == HalfInteger::from_int(0),
           "m(8_20) bandword: c=2, n=3, slice genus " + (s.genus ? to_string(*s.genus) : "n/a"));
  for (int n = 0; n <= 3; ++n) {
    const SurfaceSummary b = qp_ribbon_summary(make_beta_n_qp(n));
    c.expect(b.bands == 3 && b.strands == 4 && b.genus == HalfInteger::from_int(0),
             "beta_" + std::to_string(n) + " three-band form: slice genus " +
                 (b.genus ? to_string(*b.genus) : "n/a"));
  }
}

BraidWord random_word(std::mt19937& rng, int strands, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution positive(0.5);
  std::vector<int> letters(static_cast<std::size_t>(length(rng)));
  for (int& g : letters) g = positive(rng) ? gen(rng) : -gen(rng);
  return BraidWord(strands, std::move(letters));
}

bool symmetric(const LaurentPoly& p) {
  if (p.is_zero()) return true;
  return p.min_exp() == -p.max_exp() && p.inverted_variable() == p;
}

void check_invariance(Checker& c, const VerifyOptions& o) {
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<int> strand_count(2, 5);
  int alexander_ok = 0;
  int jones_ok = 0;
  int knots = 0;
  int knots_ok = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const int n = strand_count(rng);
    const BraidWord w = random_word(rng, n, 15);
    const BraidWord u = random_word(rng, n, 6);
    const BraidWord moved = stabilize(conjugate_closure(w, u), t % 2 == 0 ? 1 : -1);
    const LaurentPoly d = alexander_polynomial(w);
    alexander_ok += d == alexander_polynomial(moved);
    if (o.jones) jones_ok += jones_polynomial(w, o.max_strands) == jones_polynomial(moved, o.max_strands);
    if (closure_summary(w).components == 1) {
      ++knots;
      const Integer at_one = d.evaluate_at_one();
      knots_ok += symmetric(d) && (at_one == 1 || at_one == -1);
    }
  }
  c.expect(alexander_ok == trials, "Alexander invariant under " + std::to_string(trials) +
                                       " conjugation+stabilization moves (" +
                                       std::to_string(alexander_ok) + " agree)");
  if (o.jones) {
    c.expect(jones_ok == trials, "Jones invariant under the same moves (" +
                                     std::to_string(jones_ok) + " agree)");
  }
  c.expect(knots > 0 && knots_ok == knots,
           "Delta symmetric with |Delta(1)| = 1 on " + std::to_string(knots) + " knot closures");

  if (!o.jones) return;
  // Exhaustive over short words, sampled up to 12 letters.
  int compared = 0;
  int agree = 0;
  for (int n = 2; n <= 3; ++n) {
    const int gens = 2 * (n - 1);
    const int max_len = n == 2 ? 8 : 5;
    for (int len = 0; len <= max_len; ++len) {
      long long total = 1;
      for (int k = 0; k < len; ++k) total *= gens;
      for (long long code = 0; code < total; ++code) {
        std::vector<int> letters;
        long long x = code;
        for (int k = 0; k < len; ++k) {
          const int v = static_cast<int>(x % gens);
          x /= gens;
          letters.push_back(v < n - 1 ? v + 1 : -(v - (n - 1) + 1));
        }
        const BraidWord w(n, letters);
        ++compared;
        agree += jones_polynomial(w, o.max_strands) == oracles::state_sum_jones(w);
      }
    }
  }
  std::uniform_int_distribution<int> small(2, 4);
  for (int t = 0; t < 400; ++t) {
    const BraidWord w = random_word(rng, small(rng), 12);
    ++compared;
    agree += jones_polynomial(w, o.max_strands) == oracles::state_sum_jones(w);
  }
  c.expect(agree == compared, "Jones equals the state-sum bracket on " +
                                  std::to_string(compared) + " words (" +
                                  std::to_string(agree) + " agree)");
}

void check_presentations(Checker& c, const VerifyOptions& o) {
  for (int n = 0; n <= 2; ++n) {
    c.expect(braid_equal(to_braid_word(make_beta_n(n)), to_braid_word(make_beta_n_qp(n)),
                         o.budget),
             "n=" + std::to_string(n) + ": embedded and three-band forms equal in B_4");
  }
  for (int n = 1; n <= 3; ++n) {
    const auto sites = beta_plumbing_sites(n);
    if (sites.size() != 4) {
      c.expect(false, "n=" + std::to_string(n) + ": beta_" + std::to_string(n - 1) +
                          " has no sigma_1^{+-1} letter to plumb across");
      continue;
    }
    EmbeddedBandWord w = make_beta_n(n - 1);
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
      w = hopf_plumb_rewrite(w, it->first, it->second);
    }
    c.expect(w == make_beta_n(n), "n=" + std::to_string(n) + ": four Hopf plumbings map beta_" +
                                      std::to_string(n - 1) + " to beta_" + std::to_string(n));
  }
}

}  // namespace

QPBandWord m8_20_bandword() {
  return QPBandWord(3, {Band{{2, 1, 1}, 2}, Band{{1}, 2}});
}

std::vector<TransformSite> m8_20_sites() { return {TransformSite{0, 1, 1, 1}}; }

namespace {

std::vector<int> printed_w() { return {-4, 3, 3, -4, -4, -3, -2, 1, 1, -2, -2, -1, 1, 2}; }
std::vector<int> printed_w_prime() {
  return {-4, 3, 4, 3, -4, -4, -3, -2, 1, 2, 1, -2, -2, -1, 1, 2};
}

BraidWord printed_product(const std::vector<int>& left, const std::vector<int>& right) {
  std::vector<int> letters = left;
  letters.push_back(2);
  const auto back = inverse_letters(right);
  letters.insert(letters.end(), back.begin(), back.end());
  const auto band = band_generator_letters(1, 5);
  letters.insert(letters.end(), band.begin(), band.end());
  return BraidWord(5, std::move(letters));
}

}  // namespace

BraidWord printed_m8_20_beta_prime() { return printed_product(printed_w(), printed_w()); }
BraidWord printed_m8_20_gamma() { return printed_product(printed_w_prime(), printed_w()); }
BraidWord printed_m8_20_gamma_symmetric() {
  return printed_product(printed_w_prime(), printed_w_prime());
}

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options) {
  using Step = void (*)(Checker&, const VerifyOptions&);
  const std::vector<std::pair<std::string, Step>> steps{
      {"band generator expansion", check_band_expansion},
      {"example genera from Alexander breadth", check_example_genera},
      {"genus of the beta_n / gamma_n families", check_family},
      {"band-surgery sequence beta_n -> gamma_n", check_surgery},
      {"worked m(8_20) example", check_worked_example},
      {"sublink recovery", check_sublink},
      {"slice-genus bookkeeping", check_slice_genus},
      {"invariance property suites", check_invariance},
      {"presentation equality and Hopf plumbing", check_presentations},
  };
  std::vector<CheckResult> results;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    CheckResult r;
    r.criterion = static_cast<int>(i) + 1;
    r.title = steps[i].first;
    const auto start = std::chrono::steady_clock::now();
    Checker checker(r);
    steps[i].second(checker, options);
    r.passed = checker.all();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_check(const CheckResult& r) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.title << " ("
      << timing << ")\n";
  for (const auto& d : r.details) out << "       " << d << '\n';
  return out.str();
}

}  // namespace braidkit
