// Command-line front end: invariant reports, the beta_n / gamma_n families,
// the sublink-embedding pipeline and the full verification checklist.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "braidkit/alexander.hpp"
#include "braidkit/bandwords.hpp"
#include "braidkit/closure.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/json_io.hpp"
#include "braidkit/report.hpp"
#include "braidkit/verification.hpp"

namespace {

using namespace braidkit;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool json = false;
  bool no_jones = false;
  std::size_t budget = kDefaultHandleBudget;
  int max_strands = kDefaultJonesMaxStrands;
};

// Thrown for input problems that should exit with the usage status.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

EmbeddedBandWord family_word(const std::string& kind, int n) {
  if (n < 0) throw UsageError("--n must be non-negative");
  if (kind == "beta") return make_beta_n(n);
  if (kind == "gamma") return make_gamma_n(n);
  throw UsageError("family must be beta or gamma");
}

struct InvariantsArgs {
  std::string word;
  std::string bandword;
  std::string family;
  int strands = 0;
  int n = 0;
};

int run_invariants(const InvariantsArgs& a, const GlobalFlags& g) {
  const int sources = !a.word.empty() + !a.bandword.empty() + !a.family.empty();
  if (sources != 1) throw UsageError("give exactly one of --word, --bandword, --family");
  std::optional<EmbeddedBandWord> bandword;
  BraidWord word;
  if (!a.family.empty()) {
    bandword = family_word(a.family, a.n);
    if (a.strands != 0 && a.strands != bandword->strands()) {
      throw UsageError("family words live on 4 strands");
    }
  } else {
    if (a.strands < 1) throw UsageError("--strands is required with --word/--bandword");
    if (!a.bandword.empty()) {
      bandword = parse_embedded_bandword(a.bandword, a.strands);
    } else {
      word = parse_word(a.word, a.strands);
    }
  }
  if (bandword) word = to_braid_word(*bandword);

  InvariantReport r = make_report(word, ReportOptions{!g.no_jones, g.max_strands});
  if (bandword) r.surface = bennequin_summary(*bandword);
  if (g.json) {
    emit(encode(r));
  } else {
    std::cout << to_text(r);
  }
  return kExitOk;
}

int run_family(const std::string& kind, int n, const GlobalFlags& g) {
  const EmbeddedBandWord w = family_word(kind, n);
  const BraidWord word = to_braid_word(w);
  const SurfaceSummary s = bennequin_summary(w);
  const LaurentPoly delta = alexander_polynomial(word);
  const HalfInteger lower = alexander_genus_bound(delta);
  const bool certified = s.genus && lower == *s.genus;
  if (g.json) {
    Json out{{"kind", kind},
             {"n", n},
             {"bandword", encode(w)},
             {"bandword_text", to_string(w)},
             {"braid", encode(word)},
             {"surface", encode(s)},
             {"alexander", encode(delta)},
             {"alexander_text", to_string(delta)},
             {"alexander_genus_bound", lower.is_integer() ? Json(lower.twice() / 2)
                                                          : Json(lower.to_double())},
             {"genus_certified", certified}};
    emit(out);
    return kExitOk;
  }
  std::cout << "family      : " << kind << "_" << n << '\n'
            << "bandword    : " << to_string(w) << '\n'
            << "braid       : " << to_string(word) << '\n'
            << to_text(s) << "alexander   : " << to_string(delta) << '\n'
            << "genus       : " << to_string(lower) << " <= g <= "
            << (s.genus ? to_string(*s.genus) : "n/a")
            << (certified ? " (certified)" : "") << '\n';
  return kExitOk;
}

int run_unknotify(const std::string& bandword_path, const std::string& sites_path,
                  const GlobalFlags& g) {
  QPBandWord beta;
  std::vector<TransformSite> sites;
  try {
    beta = decode_qp_bandword(read_json_file(bandword_path));
    sites = decode_sites(read_json_file(sites_path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SublinkEmbedding e = embed_sublink(beta, sites);
  const UnknotCertificate c =
      certify_embedding(beta, e, UnknotOptions{!g.no_jones, g.max_strands});
  if (g.json) {
    emit(encode(e, c));
  } else {
    std::cout << "beta'       : " << to_string(to_braid_word(e.beta_prime)) << '\n'
              << "gamma       : " << to_string(e.gamma_mixed) << '\n'
              << "strands     : " << e.beta_prime.strands() << " (added";
    for (int s : e.added_strands) std::cout << ' ' << s;
    std::cout << ")\n"
              << "components  : beta' " << c.beta_prime_components << ", gamma "
              << c.gamma_components << '\n'
              << "gamma sl    : " << c.gamma_self_linking << '\n'
              << "gamma Delta : " << to_string(c.gamma_alexander) << '\n';
    if (c.gamma_jones) std::cout << "gamma Jones : " << to_string(*c.gamma_jones) << '\n';
    std::cout << "certificate : " << (c.passed() ? "passed" : "FAILED") << '\n';
    for (const auto& f : c.failures) std::cout << "  " << f << '\n';
  }
  if (!c.passed()) {
    std::cerr << "certificate failure: " << c.failures.front() << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int run_verify(const GlobalFlags& g) {
  VerifyOptions o;
  o.jones = !g.no_jones;
  o.budget = g.budget;
  o.max_strands = g.max_strands;
  const auto results = run_acceptance_checks(o);
  bool all = true;
  for (const auto& r : results) all &= r.passed;
  if (g.json) {
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back(Json{{"criterion", r.criterion},
                          {"title", r.title},
                          {"passed", r.passed},
                          {"details", r.details}});
    }
    emit(Json{{"passed", all}, {"checks", list}});
  } else {
    for (const auto& r : results) std::cout << format_check(r);
  }
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidkit: braid words, bandwords, link invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--no-jones", g.no_jones, "Skip the Jones polynomial");
  app.add_option("--budget", g.budget, "Handle-reduction step budget");
  app.add_option("--max-strands", g.max_strands, "Largest strand count for Jones")
      ->check(CLI::PositiveNumber);

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "Invariant report for one word");
  invariants->add_option("--word", inv.word, "Braid word, e.g. \"1 -2 B(1,3)^2\"");
  invariants->add_option("--bandword", inv.bandword, "Embedded bandword, e.g. \"B(1,4) 2\"");
  invariants->add_option("--family", inv.family, "beta or gamma");
  invariants->add_option("--strands", inv.strands, "Strand count");
  invariants->add_option("--n", inv.n, "Family index");

  std::string kind;
  int family_n = 0;
  auto* family = app.add_subcommand("family", "Generate beta_n or gamma_n");
  family->add_option("kind", kind, "beta or gamma")->required();
  family->add_option("n", family_n, "Family index")->required();

  std::string bandword_path;
  std::string sites_path;
  auto* unknotify = app.add_subcommand("unknotify", "Embed a slice knot in an unknot");
  unknotify->add_option("bandword", bandword_path, "Quasipositive bandword JSON")->required();
  unknotify->add_option("sites", sites_path, "Sites JSON")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the full verification checklist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (invariants->parsed()) return run_invariants(inv, g);
    if (family->parsed()) return run_family(kind, family_n, g);
    if (unknotify->parsed()) return run_unknotify(bandword_path, sites_path, g);
    if (verify->parsed()) return run_verify(g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PatternMismatch& e) {
    std::cerr << "pattern mismatch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
