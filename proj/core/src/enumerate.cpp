#include "qwalk/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

std::size_t pair_index(std::size_t i, std::size_t j) {
    // Column-major upper triangle, the graph6 bit order: (0,1), (0,2), (1,2), ...
    return j * (j - 1) / 2 + i;
}

std::uint64_t mask_under(const std::vector<std::vector<char>>& adj, const std::vector<Vertex>& perm) {
    const std::size_t n = perm.size();
    std::uint64_t m = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (adj[i][j]) {
                std::size_t a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                m |= std::uint64_t{1} << pair_index(a, b);
            }
    return m;
}

std::vector<std::vector<char>> adjacency_bits(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj[i][j] = g.adjacent(i, j) ? 1 : 0;
    return adj;
}

}  // namespace

std::uint64_t canonical_mask(const Graph& g) {
    const std::size_t n = g.size();
    if (n > 8) throw std::invalid_argument("canonical_mask is brute force; n must be <= 8");
    auto adj = adjacency_bits(g);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, mask_under(adj, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n == 0 || n > kMaxEnumeratedOrder)
        throw std::invalid_argument("connected_graphs supports 1 <= n <= " + std::to_string(kMaxEnumeratedOrder));
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> index;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) index.emplace_back(i, j);

    std::set<std::pair<std::size_t, std::uint64_t>> classes;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs); ++subset) {
        Graph g(n);
        for (std::size_t k = 0; k < pairs; ++k)
            if ((subset >> k) & 1u) g.set_edge(index[k].first, index[k].second);
        if (!g.connected()) continue;
        // Only canonical representatives survive: cheap rejection of most subsets.
        std::uint64_t c = canonical_mask(g);
        if (c != subset) continue;
        classes.emplace(g.edge_count(), c);
    }

    std::vector<Graph> out;
    for (auto [edges, mask] : classes) {
        Graph g(n);
        for (std::size_t k = 0; k < pairs; ++k)
            if ((mask >> k) & 1u) g.set_edge(index[k].first, index[k].second);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::vector<Vertex>> vertex_orbits(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> rep(n);
    std::iota(rep.begin(), rep.end(), Vertex{0});
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return rep[v] == v ? v : rep[v] = find(rep[v]); };

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool automorphism = true;
        for (std::size_t i = 0; automorphism && i < n; ++i)
            for (std::size_t j = i; automorphism && j < n; ++j)
                if (g.weight(i, j) != g.weight(perm[i], perm[j])) automorphism = false;
        if (!automorphism) continue;
        for (Vertex v = 0; v < n; ++v) {
            Vertex x = find(v), y = find(perm[v]);
            if (x != y) rep[std::max(x, y)] = std::min(x, y);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<Vertex>> orbits;
    std::vector<int> slot(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        Vertex r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[slot[r]].push_back(v);
    }
    return orbits;
}

std::vector<MarkedGraph> marked_connected_graphs(std::size_t max_n) {
    std::vector<MarkedGraph> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const Graph& g : connected_graphs(n))
            for (const auto& orbit : vertex_orbits(g)) out.push_back({g, orbit.front()});
    return out;
}

}  // namespace qwalk
