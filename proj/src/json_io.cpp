#include "braidkit/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace braidkit {

namespace {

Json encode_integer(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

// Wraps nlohmann's type errors so callers see one exception type.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json encode_half(HalfInteger h) {
  if (h.is_integer()) return h.twice() / 2;
  return h.to_double();
}

HalfInteger decode_half(const Json& j) {
  if (j.is_number_integer()) return HalfInteger::from_int(j.get<int>());
  const double twice = 2 * j.get<double>();
  const int rounded = static_cast<int>(twice);
  if (rounded != twice) throw std::invalid_argument("value is not a half-integer");
  return HalfInteger::from_twice(rounded);
}

}  // namespace

Json encode(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(encode_integer(c));
  return Json{{"min_exp", p.min_exp()}, {"coeffs", coeffs}};
}

LaurentPoly decode_laurent(const Json& j) {
  return guarded("Laurent polynomial", [&] {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(decode_integer(c));
    return LaurentPoly(j.at("min_exp").get<int>(), std::move(coeffs));
  });
}

Json encode(const JonesPolynomial& v) {
  return Json{{"variable", "t^(1/4)"}, {"poly", encode(v.quarter)}, {"text", to_string(v)}};
}

JonesPolynomial decode_jones(const Json& j) {
  return guarded("Jones polynomial", [&] { return JonesPolynomial{decode_laurent(j.at("poly"))}; });
}

Json encode(const BraidWord& w) {
  return Json{{"strands", w.strands()}, {"letters", w.letters()}, {"word", to_string(w)}};
}

BraidWord decode_braid(const Json& j) {
  return guarded("braid", [&] {
    return BraidWord(j.at("strands").get<int>(), j.at("letters").get<std::vector<int>>());
  });
}

Json encode(const EmbeddedBandWord& w) {
  Json letters = Json::array();
  for (const auto& l : w.letters()) letters.push_back(Json::array({l.i, l.j, l.sign}));
  return Json{{"strands", w.strands()}, {"letters", letters}};
}

EmbeddedBandWord decode_embedded_bandword(const Json& j) {
  return guarded("embedded bandword", [&] {
    std::vector<BandLetter> letters;
    for (const auto& l : j.at("letters")) {
      if (!l.is_array() || l.size() != 3) {
        throw std::invalid_argument("band letter must be [i, j, sign]");
      }
      letters.push_back({l[0].get<int>(), l[1].get<int>(), l[2].get<int>()});
    }
    return EmbeddedBandWord(j.at("strands").get<int>(), std::move(letters));
  });
}

Json encode(const QPBandWord& w) {
  Json bands = Json::array();
  for (const auto& b : w.bands()) {
    bands.push_back(Json{{"conjugator", b.conjugator}, {"index", b.index}});
  }
  return Json{{"strands", w.strands()}, {"bands", bands}};
}

QPBandWord decode_qp_bandword(const Json& j) {
  return guarded("quasipositive bandword", [&] {
    std::vector<Band> bands;
    for (const auto& b : j.at("bands")) {
      bands.push_back(Band{b.at("conjugator").get<std::vector<int>>(), b.at("index").get<int>()});
    }
    return QPBandWord(j.at("strands").get<int>(), std::move(bands));
  });
}

Json encode(const SurfaceSummary& s) {
  return Json{{"strands", s.strands},
              {"bands", s.bands},
              {"components", s.components},
              {"euler_characteristic", s.euler_characteristic},
              {"genus", s.genus ? encode_half(*s.genus) : Json(nullptr)}};
}

SurfaceSummary decode_surface(const Json& j) {
  return guarded("surface summary", [&] {
    SurfaceSummary s;
    s.strands = j.at("strands").get<int>();
    s.bands = j.at("bands").get<int>();
    s.components = j.at("components").get<int>();
    s.euler_characteristic = j.at("euler_characteristic").get<int>();
    if (!j.at("genus").is_null()) s.genus = decode_half(j.at("genus"));
    return s;
  });
}

Json encode(const InvariantReport& r) {
  Json out{{"word", r.word},
           {"strands", r.strands},
           {"components", r.components},
           {"exponent_sum", r.exponent_sum},
           {"self_linking", r.self_linking},
           {"alexander", encode(r.alexander)},
           {"alexander_text", to_string(r.alexander)},
           {"alexander_breadth", r.alexander_breadth},
           {"genus_bound", encode_half(r.genus_bound)}};
  out["jones"] = r.jones ? encode(*r.jones) : Json(nullptr);
  out["surface"] = r.surface ? encode(*r.surface) : Json(nullptr);
  return out;
}

InvariantReport decode_report(const Json& j) {
  return guarded("invariant report", [&] {
    InvariantReport r;
    r.word = j.at("word").get<std::string>();
    r.strands = j.at("strands").get<int>();
    r.components = j.at("components").get<int>();
    r.exponent_sum = j.at("exponent_sum").get<int>();
    r.self_linking = j.at("self_linking").get<int>();
    r.alexander = decode_laurent(j.at("alexander"));
    r.alexander_breadth = j.at("alexander_breadth").get<int>();
    r.genus_bound = decode_half(j.at("genus_bound"));
    if (!j.at("jones").is_null()) r.jones = decode_jones(j.at("jones"));
    if (!j.at("surface").is_null()) r.surface = decode_surface(j.at("surface"));
    return r;
  });
}

Json encode_sites(const std::vector<TransformSite>& sites) {
  Json list = Json::array();
  for (const auto& s : sites) {
    list.push_back(Json{{"band", s.band}, {"pos", s.pos}, {"k", s.k}, {"sign", s.sign}});
  }
  return Json{{"sites", list}};
}

std::vector<TransformSite> decode_sites(const Json& j) {
  return guarded("sites", [&] {
    std::vector<TransformSite> out;
    for (const auto& s : j.at("sites")) {
      out.push_back({s.at("band").get<int>(), s.at("pos").get<int>(), s.at("k").get<int>(),
                     s.at("sign").get<int>()});
    }
    return out;
  });
}

Json encode(const SublinkEmbedding& e, const UnknotCertificate& c) {
  Json certificate{{"passed", c.passed()},
                   {"sites", c.sites},
                   {"beta_bands", c.beta_bands},
                   {"beta_prime_bands", c.beta_prime_bands},
                   {"beta_components", c.beta_components},
                   {"beta_prime_components", c.beta_prime_components},
                   {"beta_prime_exponent_sum", c.beta_prime_exponent_sum},
                   {"sublink_recovered", c.sublink_recovered},
                   {"gamma_components", c.gamma_components},
                   {"gamma_self_linking", c.gamma_self_linking},
                   {"gamma_exponent_sum", c.gamma_exponent_sum},
                   {"gamma_alexander", encode(c.gamma_alexander)},
                   {"gamma_alexander_text", to_string(c.gamma_alexander)}};
  certificate["gamma_jones"] = c.gamma_jones ? encode(*c.gamma_jones) : Json(nullptr);
  certificate["failures"] = c.failures;
  return Json{{"sites", encode_sites(e.sites).at("sites")},
              {"added_strands", e.added_strands},
              {"beta_prime", encode(to_braid_word(e.beta_prime))},
              {"beta_prime_bands", encode(e.beta_prime)},
              {"gamma", encode(e.gamma_mixed)},
              {"gamma_bands", encode(e.gamma)},
              {"certificate", certificate}};
}

}  // namespace braidkit
