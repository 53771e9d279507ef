#include "qwalk/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qwalk/charpoly.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/graph_io.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/verify.hpp"

namespace qwalk {

bool SuiteResult::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"interlacing",       "neutrino",          "projectors",
                                                "onesum",            "correspondence-p2", "correspondence-p3",
                                                "quotient",          "cospectrality"};
    return names;
}

namespace {

constexpr std::size_t kMaxExamples = 5;
constexpr std::size_t kCorpusOrder = 5;

class Recorder {
public:
    explicit Recorder(std::string name) { check_.name = std::move(name); }

    // Runs one instance; exceptions count as failures.
    void run(const std::function<bool(std::string&)>& body) {
        ++check_.instances;
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail += std::string(" threw: ") + e.what();
        }
        if (ok) return;
        ++check_.failures;
        if (check_.examples.size() < kMaxExamples) check_.examples.push_back(detail);
    }

    SuiteCheck done() { return std::move(check_); }

private:
    SuiteCheck check_;
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

// Mostly unweighted connected graphs; a quarter carry integer weights and loops.
Graph random_instance(Rng& rng, std::size_t min_n, std::size_t max_n, double max_p = 0.8) {
    const std::size_t n = uniform(rng, min_n, max_n);
    const double p = uniform_real(rng, 0.15, max_p);
    if (uniform(rng, 0, 3) == 0) return random_integer_weighted(n, p, 3, 2, 0.3, rng);
    return random_connected_graph(n, p, rng);
}

std::string describe(const Graph& g) { return "[" + serialize_graph(g, GraphFormat::edgelist) + "]"; }

Matrix random_symmetric(Rng& rng, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform_real(rng, -2.0, 2.0);
    return m;
}

Matrix random_isometry(Rng& rng, std::size_t n, std::size_t m) {
    Matrix s(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<double> v(n);
        for (double& x : v) x = uniform_real(rng, -1.0, 1.0);
        for (std::size_t pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < j; ++k) {
                const auto col = s.column(k);
                const double c = dot(v, col);
                for (std::size_t i = 0; i < n; ++i) v[i] -= c * col[i];
            }
        const double len = norm(v);
        for (std::size_t i = 0; i < n; ++i) s(i, j) = v[i] / len;
    }
    return s;
}

Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.size());
    for (Vertex i = 0; i < g.size(); ++i) {
        if (g.loop(i) != 0.0) h.set_loop(perm[i], g.loop(i));
        for (Vertex j = i + 1; j < g.size(); ++j)
            if (g.weight(i, j) != 0.0) h.set_edge(perm[i], perm[j], g.weight(i, j));
    }
    return h;
}

bool eigenvalues_within(const Matrix& small, const Graph& g, double tol) {
    const auto big = eigenvalues_desc(Matrix::adjacency(g));
    for (double x : eigenvalues_desc(small))
        if (std::none_of(big.begin(), big.end(), [&](double y) { return std::abs(x - y) <= tol; })) return false;
    return true;
}

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= kCorpusOrder; ++n) {
        auto graphs = connected_graphs(n);
        out.insert(out.end(), graphs.begin(), graphs.end());
    }
    return out;
}

// --- interlacing ------------------------------------------------------------------

SuiteResult interlacing(const SuiteOptions& o) {
    SuiteResult result{"interlacing", {}};
    Rng rng(o.seed);

    Recorder cauchy("cauchy-vertex-deletion");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph g = random_instance(rng, 2, 10);
        const Vertex v = uniform(rng, 0, g.size() - 1);
        cauchy.run([&](std::string& d) {
            d = describe(g) + " minus vertex " + std::to_string(v);
            return check_cauchy(Matrix::adjacency(g), deletion_isometry(g.size(), v));
        });
    }
    result.checks.push_back(cauchy.done());

    Recorder compression("cauchy-isometry");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const std::size_t n = uniform(rng, 1, 8), m = uniform(rng, 1, n);
        const Matrix a = random_symmetric(rng, n);
        const Matrix s = random_isometry(rng, n, m);
        compression.run([&](std::string& d) {
            d = "random symmetric " + std::to_string(n) + "x" + std::to_string(n) + " compressed to " + std::to_string(m);
            return check_cauchy(a, s);
        });
    }
    result.checks.push_back(compression.done());

    Recorder weyl("weyl"), kyfan("kyfan");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const std::size_t n = uniform(rng, 1, 8);
        Matrix a, b;
        if (i % 2 == 0) {
            a = random_symmetric(rng, n);
            b = random_symmetric(rng, n);
        } else {
            const Graph g = random_instance(rng, n, n);
            a = Matrix::adjacency(g);
            b = Matrix::unit_projector(n, uniform(rng, 0, n - 1)) * (uniform(rng, 0, 1) ? 1.0 : -1.0);
        }
        weyl.run([&](std::string& d) {
            d = "pair of order " + std::to_string(n);
            return check_weyl(a, b);
        });
        kyfan.run([&](std::string& d) {
            d = "pair of order " + std::to_string(n);
            return check_kyfan(a, b);
        });
    }
    result.checks.push_back(weyl.done());
    result.checks.push_back(kyfan.done());

    Recorder module("walk-module-loop-monotonicity");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph g = random_instance(rng, 1, 8);
        const Vertex v = uniform(rng, 0, g.size() - 1);
        module.run([&](std::string& d) {
            d = describe(g) + " at " + std::to_string(v);
            return check_loop_monotonicity(walk_module_matrix(g, v));
        });
    }
    result.checks.push_back(module.done());
    return result;
}

// --- neutrino -----------------------------------------------------------------------

SuiteResult neutrino(const SuiteOptions& o) {
    SuiteResult result{"neutrino", {}};
    Rng rng(o.seed + 1);
    Recorder identity("path-sum-squared");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph g = random_instance(rng, 2, 8);
        const Vertex a = uniform(rng, 0, g.size() - 1);
        Vertex b = uniform(rng, 0, g.size() - 2);
        if (b >= a) ++b;
        identity.run([&](std::string& d) {
            d = describe(g) + " pair " + std::to_string(a) + "," + std::to_string(b);
            const IntPoly s = path_sum_poly(g, a, b);
            return s * s == charpoly_deleted(g, {a}) * charpoly_deleted(g, {b}) - charpoly(g) * charpoly_deleted(g, {a, b});
        });
    }
    result.checks.push_back(identity.done());
    return result;
}

// --- projectors ----------------------------------------------------------------------

SuiteResult projectors(const SuiteOptions& o) {
    SuiteResult result{"projectors", {}};
    Rng rng(o.seed + 2);
    Recorder entries("neutrino-vs-decompose");
    const std::size_t graphs = std::max<std::size_t>(1, o.instances / 2);
    for (std::size_t i = 0; i < graphs; ++i) {
        const Graph g = random_instance(rng, 1, 10, 0.5);
        entries.run([&](std::string& d) {
            d = describe(g);
            const SpectralDecomposition dec = decompose(g);
            NeutrinoEvaluator ev(g);
            const std::size_t n = g.size();
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (int k = 0; k < 3; ++k) {
                pairs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
                const Vertex v = uniform(rng, 0, n - 1);
                pairs.emplace_back(v, v);
            }
            double worst = 0.0;
            for (auto [a, b] : pairs)
                for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
                    worst = std::max(worst, std::abs(ev.entry(a, b, dec.eigenvalues[r]) - dec.entry(r, a, b)));
            d += " max deviation " + std::to_string(worst);
            return worst <= 1e-7;
        });
    }
    result.checks.push_back(entries.done());
    return result;
}

// --- one-sum and bridges ------------------------------------------------------------------

SuiteResult onesum(const SuiteOptions& o) {
    SuiteResult result{"onesum", {}};
    Rng rng(o.seed + 3);

    Recorder lemma("one-sum-charpoly"), additivity("return-walk-additivity");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph y1 = random_instance(rng, 1, 7), y2 = random_instance(rng, 1, 7);
        const Vertex a = uniform(rng, 0, y1.size() - 1), b = uniform(rng, 0, y2.size() - 1);
        const Glued z = one_sum(y1, a, y2, b);
        const std::string d0 = describe(y1) + "@" + std::to_string(a) + " + " + describe(y2) + "@" + std::to_string(b);
        lemma.run([&](std::string& d) {
            d = d0;
            const auto [p1, d1] = rooted_charpolys(y1, a);
            const auto [p2, d2] = rooted_charpolys(y2, b);
            return one_sum_charpoly(p1, d1, p2, d2) == charpoly(z.graph);
        });
        additivity.run([&](std::string& d) {
            d = d0;
            return return_walk_gf(z.graph, z.vertex) == return_walk_gf(y1, a) + return_walk_gf(y2, b);
        });
    }
    result.checks.push_back(lemma.done());
    result.checks.push_back(additivity.done());

    Recorder formulas("bridge-formulas");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph y1 = random_instance(rng, 1, 6), y2 = random_instance(rng, 1, 6);
        const Vertex a = uniform(rng, 0, y1.size() - 1), b = uniform(rng, 0, y2.size() - 1);
        formulas.run([&](std::string& d) {
            d = describe(y1) + "@" + std::to_string(a) + " ~ " + describe(y2) + "@" + std::to_string(b);
            const auto [p1, d1] = rooted_charpolys(y1, a);
            const auto [p2, d2] = rooted_charpolys(y2, b);
            return bridge_charpoly_p2(p1, d1, p2, d2) == charpoly(compose_bridge({y1, a, y2, b, 2}).graph) &&
                   bridge_charpoly_p3(p1, d1, p2, d2) == charpoly(compose_bridge({y1, a, y2, b, 3}).graph);
        });
    }
    result.checks.push_back(formulas.done());

    // Walk-equivalent pairs: a relabelled copy, or a cospectral partner in the same graph.
    Recorder factor("bridge-factorization");
    for (std::size_t i = 0; i < o.instances; ++i) {
        const Graph y1 = random_instance(rng, 1, 7);
        const Vertex a = uniform(rng, 0, y1.size() - 1);
        Graph y2 = y1;
        Vertex b = a;
        if (i % 2 == 0) {
            std::vector<Vertex> perm(y1.size());
            std::iota(perm.begin(), perm.end(), Vertex{0});
            std::shuffle(perm.begin(), perm.end(), rng);
            y2 = permuted(y1, perm);
            b = perm[a];
        } else {
            const IntPoly da = charpoly_deleted(y1, {a});
            std::vector<Vertex> partners;
            for (Vertex v = 0; v < y1.size(); ++v)
                if (charpoly_deleted(y1, {v}) == da) partners.push_back(v);
            b = partners[uniform(rng, 0, partners.size() - 1)];
        }
        factor.run([&](std::string& d) {
            d = describe(y1) + "@" + std::to_string(a) + " ~ " + describe(y2) + "@" + std::to_string(b);
            const auto [p1, d1] = rooted_charpolys(y1, a);
            const auto [p2, d2] = rooted_charpolys(y2, b);
            if (!walk_equivalent(d1, p1, d2, p2)) return false;
            const IntPoly z2 = charpoly(compose_bridge({y1, a, y2, b, 2}).graph);
            const IntPoly z3 = charpoly(compose_bridge({y1, a, y2, b, 3}).graph);
            return z2 == (p1 + d1) * (p2 - d2) && z2 == (p1 - d1) * (p2 + d2) &&
                   z3 == p1 * pendant_sqrt2_charpoly(p2, d2) && z3 == p2 * pendant_sqrt2_charpoly(p1, d1);
        });
    }
    result.checks.push_back(factor.done());
    return result;
}

// --- support correspondence ------------------------------------------------------------

SuiteResult correspondence(const std::string& name, bool p3) {
    SuiteResult result{name, {}};
    Recorder rec(p3 ? "support-correspondence-p3" : "support-correspondence-p2");
    for (const Graph& y : corpus()) {
        std::vector<IntPoly> deleted;
        for (Vertex v = 0; v < y.size(); ++v) deleted.push_back(charpoly_deleted(y, {v}));
        for (Vertex a = 0; a < y.size(); ++a)
            for (Vertex b = 0; b < y.size(); ++b) {
                if (deleted[a] != deleted[b]) continue;
                rec.run([&](std::string& d) {
                    const CorrespondenceReport r =
                        p3 ? verify_support_correspondence_p3(y, a, y, b) : verify_support_correspondence_p2(y, a, y, b);
                    d = describe(y) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
                    for (const auto& p : r.problems) d += "; " + p;
                    return r.passed;
                });
            }
    }
    result.checks.push_back(rec.done());
    return result;
}

// --- quotients ------------------------------------------------------------------------

SuiteResult quotient(const SuiteOptions&) {
    SuiteResult result{"quotient", {}};
    constexpr double tol = 1e-8;

    Recorder embedded("quotient-eigenvalues-embedded");
    auto check_embedding = [&](const Graph& g, const std::vector<std::vector<Vertex>>& cells, const std::string& what) {
        embedded.run([&](std::string& d) {
            d = what;
            return eigenvalues_within(equitable_quotient(g, cells).quotient, g, tol);
        });
    };
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Vertex> leaves(n);
        std::iota(leaves.begin(), leaves.end(), Vertex{1});
        check_embedding(star_graph(n), {{0}, leaves}, "star K1," + std::to_string(n));

        const Composed ds = double_star(n, n);
        std::vector<Vertex> la(n), lb(n);
        std::iota(la.begin(), la.end(), Vertex{2});
        std::iota(lb.begin(), lb.end(), Vertex{2 + n});
        check_embedding(ds.graph, {la, {ds.a}, {ds.b}, lb}, "double star " + std::to_string(n));

        const Composed eds = extended_double_star(n, n);
        std::iota(la.begin(), la.end(), Vertex{3});
        std::iota(lb.begin(), lb.end(), Vertex{3 + n});
        check_embedding(eds.graph, {la, {eds.a}, {1}, {eds.b}, lb}, "extended double star " + std::to_string(n));

        // Pendant sqrt(2) on the apex of a cone over n isolated vertices or a cycle.
        for (std::size_t k : {std::size_t{0}, std::size_t{2}}) {
            if (k == 2 && n < 3) continue;
            const Graph base = k == 0 ? empty_graph(n) : cycle_graph(n);
            const Graph z1 = attach_pendant(cone(base), 0, std::numbers::sqrt2);
            std::vector<Vertex> rest(n);
            std::iota(rest.begin(), rest.end(), Vertex{1});
            check_embedding(z1, {{n + 1}, {0}, rest},
                            "sqrt2 pendant on cone, k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    }
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        check_embedding(complete_graph(n), {all}, "complete " + std::to_string(n));
        if (n >= 3) check_embedding(cycle_graph(n), {all}, "cycle " + std::to_string(n));
    }
    result.checks.push_back(embedded.done());

    Recorder rejected("non-equitable-rejected");
    rejected.run([&](std::string& d) {
        d = "P3 with cells {0,1},{2}";
        try {
            equitable_quotient(path_graph(3), {{0, 1}, {2}});
        } catch (const NotEquitableError&) {
            return true;
        }
        return false;
    });
    result.checks.push_back(rejected.done());

    Recorder relations("double-star-quotient-relations");
    const std::vector<std::pair<std::size_t, std::size_t>> cases{
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {1, 2}, {1, 4}, {1, 6}, {3, 4}, {3, 6}};
    for (auto [k, n] : cases)
        relations.run([&](std::string& d) {
            d = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            return verify_double_star_quotient_relations(k, n).passed();
        });
    result.checks.push_back(relations.done());
    return result;
}

// --- cospectrality --------------------------------------------------------------------

SuiteResult cospectrality(const SuiteOptions&) {
    SuiteResult result{"cospectrality", {}};
    Recorder agree("exact-vs-numeric-corpus");
    Recorder implications("strong-implies-cospectral-implies-degree");
    for (const Graph& g : corpus())
        for (Vertex a = 0; a < g.size(); ++a)
            for (Vertex b = a + 1; b < g.size(); ++b) {
                const std::string d0 = describe(g) + " pair " + std::to_string(a) + "," + std::to_string(b);
                bool strong = false;
                agree.run([&](std::string& d) {
                    d = d0;
                    strong = strongly_cospectral(g, a, b).value;
                    return true;
                });
                implications.run([&](std::string& d) {
                    d = d0;
                    const bool co = cospectral(g, a, b);
                    if (strong && !co) return false;
                    return !co || g.degree(a) == g.degree(b);
                });
            }
    result.checks.push_back(agree.done());
    result.checks.push_back(implications.done());

    Recorder canonical("canonical-cases");
    struct Case {
        const char* name;
        Graph g;
        Vertex a, b;
        bool expected;
    };
    const std::vector<Case> cases{{"P3 ends", path_graph(3), 0, 2, true},
                                  {"P3 end-center", path_graph(3), 0, 1, false},
                                  {"P4 middle", path_graph(4), 1, 2, true},
                                  {"P4 ends", path_graph(4), 0, 3, true},
                                  {"C4 adjacent", cycle_graph(4), 0, 1, false},
                                  {"C4 antipodal", cycle_graph(4), 0, 2, true}};
    for (const auto& c : cases)
        canonical.run([&](std::string& d) {
            d = c.name;
            return strongly_cospectral(c.g, c.a, c.b).value == c.expected &&
                   strongly_cospectral_exact(c.g, c.a, c.b) == c.expected;
        });
    result.checks.push_back(canonical.done());
    return result;
}

}  // namespace

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
    if (name == "interlacing") return interlacing(options);
    if (name == "neutrino") return neutrino(options);
    if (name == "projectors") return projectors(options);
    if (name == "onesum") return onesum(options);
    if (name == "correspondence-p2") return correspondence("correspondence-p2", false);
    if (name == "correspondence-p3") return correspondence("correspondence-p3", true);
    if (name == "quotient") return quotient(options);
    if (name == "cospectrality") return cospectrality(options);
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace qwalk
