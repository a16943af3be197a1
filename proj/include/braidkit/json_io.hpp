#pragma once

#include <vector>

#include "json.hpp"

#include "braidkit/bandwords.hpp"
#include "braidkit/braid_word.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/jones.hpp"
#include "braidkit/laurent.hpp"
#include "braidkit/report.hpp"

namespace braidkit {

using Json = nlohmann::ordered_json;

// Coefficients that fit in 64 bits are JSON integers; larger ones are
// decimal strings. Decoding accepts both.
Json encode(const LaurentPoly& p);
Json encode(const JonesPolynomial& v);
Json encode(const BraidWord& w);  // {"strands", "letters", "word"}
Json encode(const EmbeddedBandWord& w);
Json encode(const QPBandWord& w);
Json encode(const SurfaceSummary& s);
Json encode(const InvariantReport& r);
Json encode_sites(const std::vector<TransformSite>& sites);
Json encode(const SublinkEmbedding& e, const UnknotCertificate& c);

// Decoders throw std::invalid_argument on malformed documents.
LaurentPoly decode_laurent(const Json& j);
JonesPolynomial decode_jones(const Json& j);
BraidWord decode_braid(const Json& j);
EmbeddedBandWord decode_embedded_bandword(const Json& j);
QPBandWord decode_qp_bandword(const Json& j);
SurfaceSummary decode_surface(const Json& j);
InvariantReport decode_report(const Json& j);
std::vector<TransformSite> decode_sites(const Json& j);

}  // namespace braidkit
