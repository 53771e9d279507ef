#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "qwalk/enumerate.hpp"

namespace qwalk {

struct SearchOptions {
    /// 2 joins a and b by an edge, 3 through one middle vertex.
    std::size_t bridge_vertices = 2;
    std::size_t jobs = 1;
    /// Each success is rescanned over [0, scan_span * pst_time].
    double scan_span = 2.0;
    std::size_t scan_steps = 4000;
};

struct SearchSuccess {
    std::size_t y1_index;
    std::size_t y2_index;
    std::size_t y1_order;
    std::size_t y2_order;
    double pst_time;
    double scan_fidelity;
    bool scan_confirmed;
    bool trivial() const { return y1_order == 1 && y2_order == 1; }
};

struct SearchReport {
    std::size_t bridge_vertices = 2;
    std::size_t marked_graphs = 0;
    std::size_t instances_tested = 0;
    std::size_t strongly_cospectral_pairs = 0;
    std::vector<SearchSuccess> pst_successes;
    std::map<std::string, std::size_t> failure_histogram;
    /// Instances where the certificate machinery raised (cross-check failures).
    std::vector<std::string> errors;

    std::size_t nontrivial_successes() const;
    /// No PST except between two single vertices, every success confirmed, no errors.
    bool expected_outcome() const;
};

/// Every ordered pair of marked graphs, composed across the bridge.
SearchReport search_no_pst(const std::vector<MarkedGraph>& marked, const SearchOptions& options = {});

struct Graph6Source {
    std::vector<MarkedGraph> marked;
    std::size_t graphs_read = 0;
    std::size_t skipped_disconnected = 0;
};

/// One marked graph per vertex orbit (per vertex above 8 vertices) of every
/// connected graph in a graph6 stream. Throws ParseError with the line number.
Graph6Source marked_graphs_from_graph6(std::istream& in);

}  // namespace qwalk
