#pragma once

#include <json.hpp>

#include "gvc/certificate.hpp"
#include "gvc/identities.hpp"
#include "gvc/search.hpp"
#include "gvc/vanish.hpp"

namespace gvc {

// ordered_json keeps insertion order, so dumps are byte-deterministic for a
// fixed config. Rationals are serialized as "num/den" strings, big integers
// as decimal strings, polynomials in canonical text form.
using Json = nlohmann::ordered_json;

Json vanish_report_json(const VanishReport& report);

// Fixed field set: phi, c, phi_normalized, a1, g, d, r, m_star, samples.
// Absent values (the q0 != 0 branch, g = 0, infinite r) serialize as null.
Json certificate_json(const GvcCertificate& cert);

Json form_report_json(const FormReport& report);
Json eq1_report_json(const Eq1Report& report);
Json search_result_json(const SearchResult& result);

} // namespace gvc
