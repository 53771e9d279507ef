#include "qwalk/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "qwalk/graph_io.hpp"
#include "qwalk/pst.hpp"

namespace qwalk {

std::size_t SearchReport::nontrivial_successes() const {
    std::size_t count = 0;
    for (const auto& s : pst_successes)
        if (!s.trivial()) ++count;
    return count;
}

bool SearchReport::expected_outcome() const {
    if (!errors.empty() || nontrivial_successes() != 0) return false;
    for (const auto& s : pst_successes)
        if (!s.scan_confirmed) return false;
    return true;
}

namespace {

struct Outcome {
    bool strongly_cospectral = false;
    std::string failure;
    std::string error;
    std::optional<SearchSuccess> success;
};

Outcome run_one(const std::vector<MarkedGraph>& marked, std::size_t i, std::size_t j, const SearchOptions& options) {
    Outcome out;
    const MarkedGraph& y1 = marked[i];
    const MarkedGraph& y2 = marked[j];
    const Composed z = compose_bridge({y1.graph, y1.root, y2.graph, y2.root, options.bridge_vertices});
    try {
        const PstCertificate cert = pst_certificate(z.graph, z.a, z.b);
        out.strongly_cospectral = cert.failure != PstFailure::not_strongly_cospectral;
        if (!cert.success) {
            out.failure = std::string(to_string(*cert.failure));
            return out;
        }
        const FidelityScan scan =
            fidelity_scan(z.graph, z.a, z.b, options.scan_span * cert.pst_time, options.scan_steps);
        out.success = SearchSuccess{i, j, y1.graph.size(), y2.graph.size(), cert.pst_time, scan.fidelity,
                                    scan.fidelity >= 1.0 - 1e-6};
    } catch (const std::exception& e) {
        out.error = "pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + e.what();
    }
    return out;
}

}  // namespace

SearchReport search_no_pst(const std::vector<MarkedGraph>& marked, const SearchOptions& options) {
    if (options.bridge_vertices < 2) throw std::invalid_argument("bridge needs at least 2 vertices");
    const std::size_t m = marked.size();
    const std::size_t total = m * m;
    std::vector<Outcome> outcomes(total);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < total; k = next++) outcomes[k] = run_one(marked, k / m, k % m, options);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, total));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchReport report;
    report.bridge_vertices = options.bridge_vertices;
    report.marked_graphs = m;
    report.instances_tested = total;
    for (const Outcome& o : outcomes) {
        if (o.strongly_cospectral) ++report.strongly_cospectral_pairs;
        if (!o.error.empty()) report.errors.push_back(o.error);
        if (!o.failure.empty()) ++report.failure_histogram[o.failure];
        if (o.success) report.pst_successes.push_back(*o.success);
    }
    return report;
}

Graph6Source marked_graphs_from_graph6(std::istream& in) {
    Graph6Source out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        Graph g(1);
        try {
            g = parse_graph(line, GraphFormat::graph6);
        } catch (const ParseError& e) {
            const std::string what = e.what();
            throw ParseError(e.code(), number, what.substr(what.find(": ") + 2));
        }
        ++out.graphs_read;
        if (!g.connected()) {
            ++out.skipped_disconnected;
            continue;
        }
        if (g.size() <= 8) {
            for (const auto& orbit : vertex_orbits(g)) out.marked.push_back({g, orbit.front()});
        } else {
            for (Vertex v = 0; v < g.size(); ++v) out.marked.push_back({g, v});
        }
    }
    return out;
}

}  // namespace qwalk
