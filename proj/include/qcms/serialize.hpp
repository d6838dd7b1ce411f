#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qcms/algebra.hpp"
#include "qcms/report.hpp"

namespace qcms {

// Elements serialize as a list of terms in canonical monomial order:
//   [{"monomial":{"exp":[a,b,c],"odd":[i,...]},"coef":{"re":"p/q","im":"p/q"}}]
// Exponents follow the commuting generators; "odd" holds 1-based positions
// of anticommuting generators; rationals are exact "p/q" strings.
nlohmann::json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const nlohmann::json& j, SignaturePtr sig);

nlohmann::json gaussian_to_json(const GaussianRational& c);
GaussianRational gaussian_from_json(const nlohmann::json& j);

// "p/q,p/q" packed form used for dense coefficient vectors.
std::string gaussian_pair_string(const GaussianRational& c);
GaussianRational gaussian_from_pair_string(const std::string& s);

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace qcms
