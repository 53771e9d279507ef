#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::size_t;

/// Symmetric weighted adjacency structure on dense 0-based vertices.
///
/// Off-diagonal entries are edge weights (0 means no edge), diagonal entries
/// are loop weights. A graph "with a loop at a" is an ordinary Graph whose
/// diagonal entry at a is nonzero, so A and A +/- |a><a| share one type.
class Graph {
public:
    /// Edgeless graph on n >= 1 vertices.
    explicit Graph(std::size_t n);

    /// Builds from a row-major n*n weight matrix; rejects asymmetric input.
    static Graph from_weights(std::size_t n, std::vector<double> weights);

    std::size_t size() const noexcept { return n_; }

    double weight(Vertex u, Vertex v) const;
    double loop(Vertex v) const { return weight(v, v); }
    bool adjacent(Vertex u, Vertex v) const { return u != v && weight(u, v) != 0.0; }

    void set_edge(Vertex u, Vertex v, double w = 1.0);
    void set_loop(Vertex v, double w);

    /// True when every stored weight is exactly an integer.
    bool integer_weights() const noexcept;
    bool has_loops() const noexcept;
    /// Unit edge weights and no loops.
    bool is_simple() const noexcept;

    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t edge_count() const noexcept;
    bool connected() const;

    std::span<const double> weights() const noexcept { return w_; }

    /// Induced subgraph on `keep` (relabelled in the given order). `keep` must be non-empty.
    Graph induced(std::span<const Vertex> keep) const;
    Graph with_loop(Vertex v, double w) const;

    bool operator==(const Graph&) const = default;

private:
    void check(Vertex v) const;

    std::size_t n_;
    std::vector<double> w_;
};

// --- named families ---------------------------------------------------------

Graph path_graph(std::size_t n);
/// K_{1,k} with the center at index 0; star_graph(0) is K1.
Graph star_graph(std::size_t k);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// Circulant k-regular graph on n vertices. Throws when n*k is odd or k >= n.
Graph regular_graph(std::size_t n, std::size_t k);
/// New apex vertex 0 joined to every vertex of `base` (shifted by one).
Graph cone(const Graph& base);
/// Copies `y` and attaches a new vertex (index y.size()) to `at` with edge weight `w`.
Graph attach_pendant(const Graph& y, Vertex at, double w);

// --- bridge composition -----------------------------------------------------

struct CompositionSpec {
    Graph y1;
    Vertex a;
    Graph y2;
    Vertex b;
    /// Vertices on the bridge path including a and b: 2 gives P2, 3 gives P3.
    std::size_t bridge_vertices = 2;
};

struct Composed {
    Graph graph;
    Vertex a;
    Vertex b;
};

/// Disjoint union of Y1, Y2 (offset by |Y1|) and the internal bridge vertices
/// (offset by |Y1|+|Y2|), joined a - internal... - b.
Composed compose_bridge(const CompositionSpec& spec);

struct Glued {
    Graph graph;
    Vertex vertex;
};

/// 1-sum: identifies a in Y1 with b in Y2. Y1 keeps its labels, the other
/// vertices of Y2 follow in order; loop weights at the glued vertex add up.
Glued one_sum(const Graph& y1, Vertex a, const Graph& y2, Vertex b);

/// S_{k,oo,l}: centers a=0, b=1, then the k leaves of a, then the l leaves of b.
Composed double_star(std::size_t k, std::size_t l);
/// S_{k,ooo,l}: centers a=0, b=2 joined through vertex 1, then the leaves.
Composed extended_double_star(std::size_t k, std::size_t l);

// --- paths and structure ----------------------------------------------------

/// Visits every simple a-b path as a vertex sequence starting at a.
void for_each_ab_path(const Graph& g, Vertex a, Vertex b,
                      const std::function<void(std::span<const Vertex>)>& visit);

/// Vertex sets (sorted) of all simple a-b paths, in lexicographic order.
/// One entry per path: two paths on the same vertex set give two equal entries.
std::vector<std::vector<Vertex>> enumerate_ab_paths(const Graph& g, Vertex a, Vertex b);

std::vector<Vertex> articulation_points(const Graph& g);

/// Brute-force isomorphism search (intended for n <= 8). `pinned` pairs
/// (u in g, v in h) are forced to map onto each other. Returns the map g -> h.
std::optional<std::vector<Vertex>> find_isomorphism(
    const Graph& g, const Graph& h, std::span<const std::pair<Vertex, Vertex>> pinned = {});

// --- random generators ------------------------------------------------------

using Rng = std::mt19937_64;

/// G(n, p) with unit weights.
Graph random_graph(std::size_t n, double p, Rng& rng);
/// Random spanning tree plus G(n, p) extras, so the result is connected.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);
Graph random_tree(std::size_t n, Rng& rng);
/// Connected graph with integer edge weights in [1, max_weight] and loops in
/// [-max_loop, max_loop] (each vertex gets a loop with probability loop_p).
Graph random_integer_weighted(std::size_t n, double p, int max_weight, int max_loop,
                              double loop_p, Rng& rng);

}  // namespace qwalk
