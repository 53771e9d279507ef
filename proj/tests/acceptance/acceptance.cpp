// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/enumerate.hpp"
#include "qwalk/pst.hpp"
#include "qwalk/search.hpp"
#include "qwalk/suites.hpp"

using namespace qwalk;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

constexpr double kFidelityExact = 1e-9;
constexpr double kNoGoMargin = 1e-3;
constexpr double kScanHorizon = 200.0;
constexpr std::size_t kScanSteps = 200000;

Verdict pst_positive() {
    struct Case {
        const char* name;
        Graph g;
        Vertex a, b;
        double time;
    };
    const Case cases[] = {{"P2", path_graph(2), 0, 1, std::numbers::pi / 2},
                          {"P3", path_graph(3), 0, 2, std::numbers::pi / std::sqrt(2.0)}};
    Verdict v;
    std::ostringstream d;
    for (const auto& c : cases) {
        const PstCertificate cert = pst_certificate(c.g, c.a, c.b);
        const double f = cert.success ? evolve_fidelity(c.g, c.a, c.b, cert.pst_time) : 0.0;
        const bool ok = cert.success && std::abs(cert.pst_time - c.time) <= 1e-9 * c.time && f >= 1.0 - kFidelityExact;
        v.pass = v.pass && ok;
        d << c.name << " t=" << cert.pst_time << " F=" << f << (ok ? "" : " (bad)") << "; ";
    }
    v.detail = d.str();
    return v;
}

Verdict no_go(const std::function<Composed(std::size_t, std::size_t)>& family, const char* label) {
    Verdict v;
    std::ostringstream d;
    std::size_t bad = 0;
    double worst = 0.0;
    for (std::size_t k = 1; k <= 6; ++k)
        for (std::size_t l = 1; l <= 6; ++l) {
            const Composed z = family(k, l);
            const PstCertificate cert = pst_certificate(z.graph, z.a, z.b);
            const FidelityScan scan = fidelity_scan(z.graph, z.a, z.b, kScanHorizon, kScanSteps);
            worst = std::max(worst, scan.fidelity);
            const bool ok = !cert.success && scan.fidelity < 1.0 - kNoGoMargin;
            if (!ok) {
                ++bad;
                char buf[160];
                std::snprintf(buf, sizeof buf, " %s(%zu,%zu): %s max F=%.9f at t=%.4f;", label, k, l,
                              cert.success ? "certificate success" : std::string(to_string(*cert.failure)).c_str(),
                              scan.fidelity, scan.time);
                d << buf;
            }
        }
    v.pass = bad == 0;
    char head[120];
    std::snprintf(head, sizeof head, "36 instances, %zu over threshold, max fidelity %.9f;", bad, worst);
    v.detail = head + d.str();
    return v;
}

Verdict main_theorems() {
    const auto marked = marked_connected_graphs(4);
    Verdict v;
    std::ostringstream d;
    for (std::size_t bridge : {2, 3}) {
        SearchOptions options;
        options.bridge_vertices = bridge;
        const SearchReport r = search_no_pst(marked, options);
        const bool ok = r.expected_outcome() && r.pst_successes.size() == 1;
        v.pass = v.pass && ok;
        d << "bridge " << bridge << ": " << r.instances_tested << " instances, " << r.pst_successes.size()
          << " PST (" << r.nontrivial_successes() << " nontrivial), " << r.errors.size() << " errors; ";
    }
    v.detail = d.str();
    return v;
}

Verdict suites(const std::vector<std::string>& names, std::size_t min_instances, std::size_t instances = 200) {
    Verdict v;
    std::ostringstream d;
    SuiteOptions options;
    options.instances = instances;
    for (const auto& name : names) {
        const SuiteResult r = run_suite(name, options);
        for (const auto& c : r.checks) {
            const bool ok = c.passed() && c.instances >= min_instances;
            v.pass = v.pass && ok;
            d << c.name << " " << c.instances - c.failures << "/" << c.instances << (ok ? "" : " (bad)") << "; ";
            for (const auto& e : c.examples) d << "[" << e << "] ";
        }
    }
    v.detail = d.str();
    return v;
}

Verdict criterion(int n) {
    switch (n) {
        case 1: return pst_positive();
        case 2: return no_go([](std::size_t k, std::size_t l) { return double_star(k, l); }, "S2");
        case 3: return no_go([](std::size_t k, std::size_t l) { return extended_double_star(k, l); }, "S3");
        case 4: return main_theorems();
        case 5: return suites({"onesum", "neutrino"}, 200);
        case 6: return suites({"projectors"}, 100);
        case 7: return suites({"interlacing"}, 200);
        case 8: return suites({"correspondence-p2", "correspondence-p3"}, 1);
        case 9: return suites({"cospectrality"}, 1);
    }
    return {false, "unknown criterion"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};

    bool all = true;
    for (int n : selected) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criterion(n);
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s (%.2f s) %s\n", n, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
        std::fflush(stdout);
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
