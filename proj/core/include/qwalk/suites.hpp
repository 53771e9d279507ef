#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

struct SuiteOptions {
    std::uint64_t seed = 20240611;
    /// Random instances per property (exhaustive suites ignore it).
    std::size_t instances = 200;
};

struct SuiteCheck {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// First few failure descriptions.
    std::vector<std::string> examples;
    bool passed() const { return failures == 0 && instances > 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool passed() const;
};

/// interlacing, neutrino, projectors, onesum, correspondence-p2,
/// correspondence-p3, quotient, cospectrality.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});

}  // namespace qwalk
