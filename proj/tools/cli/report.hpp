#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qwalk/pst.hpp"
#include "qwalk/search.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/suites.hpp"

namespace qwalk::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Rounded to 12 significant digits so the JSON text carries exactly that many.
json number(double x);
json numbers(const std::vector<double>& xs);

/// Coefficients ascending; entries beyond 64 bits are decimal strings.
json polynomial(const IntPoly& p);

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string digest_string(std::uint64_t h);

json signature_json(const SupportSignature& s);
json certificate_json(const PstCertificate& c);
json search_json(const SearchReport& r);
json suite_json(const SuiteResult& r);

}  // namespace qwalk::cli
