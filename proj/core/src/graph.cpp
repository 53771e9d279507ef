#include "qwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

Graph::Graph(std::size_t n) : n_(n), w_(n * n, 0.0) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
}

Graph Graph::from_weights(std::size_t n, std::vector<double> weights) {
    if (weights.size() != n * n) throw std::invalid_argument("weight matrix has wrong size");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (weights[i * n + j] != weights[j * n + i])
                throw std::invalid_argument("weight matrix is not symmetric at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
    g.w_ = std::move(weights);
    return g;
}

void Graph::check(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

double Graph::weight(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return w_[u * n_ + v];
}

void Graph::set_edge(Vertex u, Vertex v, double w) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("use set_loop for diagonal weights");
    w_[u * n_ + v] = w;
    w_[v * n_ + u] = w;
}

void Graph::set_loop(Vertex v, double w) {
    check(v);
    w_[v * n_ + v] = w;
}

bool Graph::integer_weights() const noexcept {
    return std::all_of(w_.begin(), w_.end(), [](double x) { return std::isfinite(x) && std::trunc(x) == x; });
}

bool Graph::has_loops() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        if (w_[i * n_ + i] != 0.0) return true;
    return false;
}

bool Graph::is_simple() const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            double x = w_[i * n_ + j];
            if (i == j ? x != 0.0 : (x != 0.0 && x != 1.0)) return false;
        }
    return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (u != v && w_[v * n_ + u] != 0.0) out.push_back(u);
    return out;
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

std::size_t Graph::edge_count() const noexcept {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (w_[i * n_ + j] != 0.0) ++m;
    return m;
}

bool Graph::connected() const {
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u = 0; u < n_; ++u)
            if (u != v && !seen[u] && w_[v * n_ + u] != 0.0) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n_;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check(keep[i]);
        for (std::size_t j = 0; j < keep.size(); ++j) h.w_[i * keep.size() + j] = w_[keep[i] * n_ + keep[j]];
    }
    return h;
}

Graph Graph::with_loop(Vertex v, double w) const {
    Graph h = *this;
    h.set_loop(v, w);
    return h;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

Graph star_graph(std::size_t k) {
    Graph g(k + 1);
    for (Vertex i = 1; i <= k; ++i) g.set_edge(0, i);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.set_edge(n - 1, 0);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.set_edge(i, j);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph regular_graph(std::size_t n, std::size_t k) {
    if (k >= n || (n * k) % 2 != 0)
        throw std::invalid_argument("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                                    " vertices");
    Graph g(n);
    // Circulant on offsets 1..k/2, plus the antipodal matching when k is odd (n is then even).
    for (Vertex i = 0; i < n; ++i) {
        for (std::size_t s = 1; s <= k / 2; ++s) g.set_edge(i, (i + s) % n);
        if (k % 2 == 1) g.set_edge(i, (i + n / 2) % n);
    }
    return g;
}

Graph cone(const Graph& base) {
    std::size_t n = base.size();
    Graph g(n + 1);
    for (Vertex i = 0; i < n; ++i) {
        g.set_edge(0, i + 1);
        if (base.loop(i) != 0.0) g.set_loop(i + 1, base.loop(i));
        for (Vertex j = i + 1; j < n; ++j)
            if (base.weight(i, j) != 0.0) g.set_edge(i + 1, j + 1, base.weight(i, j));
    }
    return g;
}

Graph attach_pendant(const Graph& y, Vertex at, double w) {
    std::size_t n = y.size();
    if (at >= n) throw std::out_of_range("pendant attachment vertex out of range");
    std::vector<double> weights((n + 1) * (n + 1), 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) weights[i * (n + 1) + j] = y.weight(i, j);
    weights[at * (n + 1) + n] = w;
    weights[n * (n + 1) + at] = w;
    return Graph::from_weights(n + 1, std::move(weights));
}

Composed compose_bridge(const CompositionSpec& spec) {
    const std::size_t n1 = spec.y1.size();
    const std::size_t n2 = spec.y2.size();
    if (spec.a >= n1) throw std::out_of_range("composition vertex a out of range for Y1");
    if (spec.b >= n2) throw std::out_of_range("composition vertex b out of range for Y2");
    if (spec.bridge_vertices < 2) throw std::invalid_argument("bridge path needs at least 2 vertices");

    const std::size_t internal = spec.bridge_vertices - 2;
    const std::size_t n = n1 + n2 + internal;
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) w[i * n + j] = spec.y1.weight(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) w[(i + n1) * n + (j + n1)] = spec.y2.weight(i, j);

    Composed out{Graph(1), spec.a, n1 + spec.b};
    Vertex prev = out.a;
    for (std::size_t k = 0; k < internal; ++k) {
        Vertex c = n1 + n2 + k;
        w[prev * n + c] = w[c * n + prev] = 1.0;
        prev = c;
    }
    w[prev * n + out.b] = w[out.b * n + prev] = 1.0;
    out.graph = Graph::from_weights(n, std::move(w));
    return out;
}

Glued one_sum(const Graph& y1, Vertex a, const Graph& y2, Vertex b) {
    const std::size_t n1 = y1.size();
    const std::size_t n2 = y2.size();
    if (a >= n1 || b >= n2) throw std::out_of_range("1-sum vertex out of range");
    std::vector<Vertex> map(n2);
    Vertex next = n1;
    for (Vertex v = 0; v < n2; ++v) map[v] = v == b ? a : next++;
    const std::size_t n = n1 + n2 - 1;
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) w[i * n + j] = y1.weight(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) w[map[i] * n + map[j]] += y2.weight(i, j);
    return {Graph::from_weights(n, std::move(w)), a};
}

Composed double_star(std::size_t k, std::size_t l) {
    Graph g(2 + k + l);
    g.set_edge(0, 1);
    for (std::size_t i = 0; i < k; ++i) g.set_edge(0, 2 + i);
    for (std::size_t i = 0; i < l; ++i) g.set_edge(1, 2 + k + i);
    return {std::move(g), 0, 1};
}

Composed extended_double_star(std::size_t k, std::size_t l) {
    Graph g(3 + k + l);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    for (std::size_t i = 0; i < k; ++i) g.set_edge(0, 3 + i);
    for (std::size_t i = 0; i < l; ++i) g.set_edge(2, 3 + k + i);
    return {std::move(g), 0, 2};
}

void for_each_ab_path(const Graph& g, Vertex a, Vertex b,
                      const std::function<void(std::span<const Vertex>)>& visit) {
    const std::size_t n = g.size();
    if (a >= n || b >= n) throw std::out_of_range("path endpoint out of range");
    if (a == b) throw std::invalid_argument("path endpoints must differ");

    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path{a};
    on_path[a] = 1;
    // Iterative DFS: next[i] is the index of the next neighbor to try from path[i].
    std::vector<std::size_t> next{0};
    while (!path.empty()) {
        Vertex v = path.back();
        std::size_t& i = next.back();
        if (i == adj[v].size()) {
            on_path[v] = 0;
            path.pop_back();
            next.pop_back();
            continue;
        }
        Vertex u = adj[v][i++];
        if (on_path[u]) continue;
        if (u == b) {
            path.push_back(b);
            visit(path);
            path.pop_back();
            continue;
        }
        on_path[u] = 1;
        path.push_back(u);
        next.push_back(0);
    }
}

std::vector<std::vector<Vertex>> enumerate_ab_paths(const Graph& g, Vertex a, Vertex b) {
    std::vector<std::vector<Vertex>> out;
    for_each_ab_path(g, a, b, [&](std::span<const Vertex> p) {
        std::vector<Vertex> s(p.begin(), p.end());
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> articulation_points(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int timer = 0;
    std::function<void(Vertex, int)> dfs = [&](Vertex v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (Vertex u : g.neighbors(v)) {
            if (disc[u] == -1) {
                ++children;
                dfs(u, static_cast<int>(v));
                low[v] = std::min(low[v], low[u]);
                if (parent != -1 && low[u] >= disc[v]) cut[v] = 1;
            } else if (static_cast<int>(u) != parent) {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent == -1 && children > 1) cut[v] = 1;
    };
    for (Vertex v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h,
                                                    std::span<const std::pair<Vertex, Vertex>> pinned) {
    const std::size_t n = g.size();
    if (h.size() != n || g.edge_count() != h.edge_count()) return std::nullopt;

    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        bool ok = std::all_of(pinned.begin(), pinned.end(),
                              [&](const auto& p) { return perm[p.first] == p.second; });
        for (Vertex i = 0; ok && i < n; ++i)
            for (Vertex j = i; ok && j < n; ++j)
                if (g.weight(i, j) != h.weight(perm[i], perm[j])) ok = false;
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) g.set_edge(i, j);
    return g;
}

Graph random_tree(std::size_t n, Rng& rng) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        g.set_edge(v, parent(rng));
    }
    return g;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    Graph g = random_tree(n, rng);
    std::bernoulli_distribution coin(p);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j) && coin(rng)) g.set_edge(i, j);
    // Shuffle labels so the tree edges are not biased towards low indices.
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.induced(perm);
}

Graph random_integer_weighted(std::size_t n, double p, int max_weight, int max_loop, double loop_p, Rng& rng) {
    Graph g = random_connected_graph(n, p, rng);
    std::uniform_int_distribution<int> wdist(1, std::max(1, max_weight));
    std::uniform_int_distribution<int> ldist(-max_loop, max_loop);
    std::bernoulli_distribution loop_coin(loop_p);
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) g.set_edge(i, j, wdist(rng));
        if (max_loop > 0 && loop_coin(rng)) g.set_loop(i, ldist(rng));
    }
    return g;
}

}  // namespace qwalk
