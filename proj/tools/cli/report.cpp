#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qwalk::cli {

json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

json numbers(const std::vector<double>& xs) {
    json out = json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

json polynomial(const IntPoly& p) {
    json out = json::array();
    for (const mpz_class& c : p.coefficients()) {
        if (c.fits_slong_p()) out.push_back(c.get_si());
        else out.push_back(c.get_str());
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_string(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json signature_json(const SupportSignature& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        json item{{"theta", number(e.theta)}, {"in_support_a", e.in_a}, {"in_support_b", e.in_b}};
        item["sigma"] = e.sigma ? json(*e.sigma) : json(nullptr);
        entries.push_back(std::move(item));
    }
    return {{"a", s.a}, {"b", s.b}, {"entries", entries}, {"strongly_cospectral", s.strongly_cospectral}};
}

json certificate_json(const PstCertificate& c) {
    json out{{"status", c.success ? "success" : "fail"}, {"support", numbers(c.eigenvalues)}};
    if (c.failure) out["failure_reason"] = std::string(to_string(*c.failure));
    if (!c.success) return out;
    out["alpha"] = c.alpha;
    out["delta"] = c.delta;
    out["betas"] = c.betas;
    out["g"] = c.g;
    out["sigmas"] = c.sigmas;
    out["ks"] = c.ks;
    out["pst_time"] = number(c.pst_time);
    out["fidelity_at_time"] = number(c.fidelity_at_time);
    out["closed_form_time"] = number(c.closed_form_time);
    out["closed_form_matches"] = c.closed_form_matches;
    return out;
}

json search_json(const SearchReport& r) {
    json successes = json::array();
    for (const auto& s : r.pst_successes)
        successes.push_back({{"y1_index", s.y1_index},
                             {"y2_index", s.y2_index},
                             {"y1_order", s.y1_order},
                             {"y2_order", s.y2_order},
                             {"pst_time", number(s.pst_time)},
                             {"scan_fidelity", number(s.scan_fidelity)},
                             {"scan_confirmed", s.scan_confirmed},
                             {"trivial", s.trivial()}});
    json histogram = json::object();
    for (const auto& [reason, count] : r.failure_histogram) histogram[reason] = count;
    return {{"bridge_vertices", r.bridge_vertices},
            {"marked_graphs", r.marked_graphs},
            {"instances_tested", r.instances_tested},
            {"strongly_cospectral_pairs", r.strongly_cospectral_pairs},
            {"pst_successes", successes},
            {"nontrivial_successes", r.nontrivial_successes()},
            {"failure_histogram", histogram},
            {"errors", r.errors},
            {"expected_outcome", r.expected_outcome()}};
}

json suite_json(const SuiteResult& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"examples", c.examples},
                          {"passed", c.passed()}});
    return {{"suite", r.suite}, {"checks", checks}, {"passed", r.passed()}};
}

}  // namespace qwalk::cli
