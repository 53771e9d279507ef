#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

/// A graph with a distinguished vertex.
struct MarkedGraph {
    Graph graph;
    Vertex root;
};

/// Largest order handled by the brute-force generator.
inline constexpr std::size_t kMaxEnumeratedOrder = 6;

/// Upper-triangle adjacency bitmask minimised over all relabellings (simple graphs, n <= 8).
std::uint64_t canonical_mask(const Graph& g);

/// All pairwise non-isomorphic connected simple graphs on exactly n vertices,
/// ordered by (edge count, canonical mask).
std::vector<Graph> connected_graphs(std::size_t n);

/// Orbits of the automorphism group on vertices, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g);

/// One (graph, root) per rooted isomorphism class, over all connected graphs of
/// order 1..max_n. Order is deterministic: by order, then graph, then orbit.
std::vector<MarkedGraph> marked_connected_graphs(std::size_t max_n);

}  // namespace qwalk
