#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qwalk/charpoly.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kValueMatch = 1e-7;

void require_square_pair(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("matrices must be square and of equal size");
}

std::string list(const std::vector<double>& xs) {
    std::ostringstream out;
    out.precision(12);
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    out << '}';
    return out.str();
}

bool contains(const std::vector<double>& xs, double x) {
    return std::any_of(xs.begin(), xs.end(), [&](double y) { return std::abs(x - y) <= kValueMatch; });
}

std::vector<double> outside_support(const SpectralDecomposition& dec, Vertex v) {
    std::vector<double> out;
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
        if (dec.support_norm(r, v) <= kSupportThreshold) out.push_back(dec.eigenvalues[r]);
    return out;
}

struct Checker {
    CorrespondenceReport& report;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        report.passed = false;
        report.problems.push_back(what);
    }
    void same(const std::vector<double>& x, const std::vector<double>& y, const std::string& what) {
        expect(same_values(x, y, kValueMatch), what + ": " + list(x) + " vs " + list(y));
    }
};

}  // namespace

bool same_values(std::vector<double> x, std::vector<double> y, double tol) {
    if (x.size() != y.size()) return false;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i] - y[i]) > tol) return false;
    return true;
}

// --- interlacing ------------------------------------------------------------------

bool check_cauchy(const Matrix& a, const Matrix& s, double slack) {
    if (a.rows() != a.cols() || s.rows() != a.rows()) throw std::invalid_argument("dimension mismatch");
    const Matrix st = s.transpose();
    if (max_abs_diff(st * s, Matrix::identity(s.cols())) > 1e-9) throw std::invalid_argument("S is not an isometry");
    const std::vector<double> la = eigenvalues_desc(a);
    const std::vector<double> lb = eigenvalues_desc(st * a * s);
    const std::size_t n = la.size(), m = lb.size();
    for (std::size_t k = 0; k < m; ++k) {
        if (la[k] < lb[k] - slack) return false;
        // k-th smallest of B against k-th smallest of A
        if (lb[m - 1 - k] < la[n - 1 - k] - slack) return false;
    }
    return true;
}

Matrix deletion_isometry(std::size_t n, Vertex v) {
    if (n < 2 || v >= n) throw std::invalid_argument("deletion needs n >= 2 and a valid vertex");
    Matrix s(n, n - 1);
    for (std::size_t i = 0, j = 0; i < n; ++i)
        if (i != v) s(i, j++) = 1.0;
    return s;
}

bool check_weyl(const Matrix& a, const Matrix& b, double slack) {
    require_square_pair(a, b);
    const std::size_t n = a.rows();
    const auto la = eigenvalues_desc(a);
    const auto lb = eigenvalues_desc(b);
    const auto lc = eigenvalues_desc(a + b);
    // 1-based in the statement; here i, k are 0-based so k-i+1 -> k-i and k-i+n -> k-i+n-1.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (i <= k && lc[k] > la[i] + lb[k - i] + slack) return false;
            if (i >= k && lc[k] < la[i] + lb[k + n - 1 - i] - slack) return false;
        }
    return true;
}

bool check_kyfan(const Matrix& a, const Matrix& b, double slack) {
    require_square_pair(a, b);
    const auto la = eigenvalues_desc(a);
    const auto lb = eigenvalues_desc(b);
    const auto lc = eigenvalues_desc(a + b);
    double sa = 0.0, sb = 0.0, sc = 0.0;
    for (std::size_t k = 0; k < la.size(); ++k) {
        sa += la[k];
        sb += lb[k];
        sc += lc[k];
        if (sc > sa + sb + slack) return false;
    }
    return true;
}

bool check_loop_monotonicity(const Matrix& m, double slack) {
    const Matrix e = Matrix::unit_projector(m.rows(), 0);
    const auto up = eigenvalues_desc(m + e);
    const auto down = eigenvalues_desc(m - e);
    for (std::size_t j = 0; j < up.size(); ++j)
        if (up[j] < down[j] - slack) return false;
    return true;
}

// --- quotients ----------------------------------------------------------------------

QuotientPartition equitable_quotient(const Graph& g, const std::vector<std::vector<Vertex>>& cells) {
    const std::size_t n = g.size();
    std::vector<std::size_t> cell_of(n, cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].empty()) throw std::invalid_argument("empty cell");
        for (Vertex v : cells[c]) {
            if (v >= n) throw std::invalid_argument("cell vertex out of range");
            if (cell_of[v] != cells.size()) throw std::invalid_argument("cells overlap");
            cell_of[v] = c;
        }
    }
    if (std::count(cell_of.begin(), cell_of.end(), cells.size()) != 0)
        throw std::invalid_argument("cells do not cover the vertex set");

    const std::size_t k = cells.size();
    Matrix e(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> first;
        for (Vertex v : cells[i]) {
            std::vector<double> into(k, 0.0);
            for (Vertex u = 0; u < n; ++u) into[cell_of[u]] += g.weight(v, u);
            if (first.empty()) {
                first = into;
            } else {
                for (std::size_t j = 0; j < k; ++j)
                    if (std::abs(into[j] - first[j]) > 1e-12)
                        throw NotEquitableError("vertex " + std::to_string(v) + " of cell " + std::to_string(i) +
                                                " has weight " + std::to_string(into[j]) + " into cell " +
                                                std::to_string(j) + ", expected " + std::to_string(first[j]));
            }
            for (std::size_t j = 0; j < k; ++j) e(i, j) += into[j];
        }
    }
    QuotientPartition out{cells, Matrix(k, k)};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.quotient(i, j) = e(i, j) / std::sqrt(static_cast<double>(cells[i].size() * cells[j].size()));
    return out;
}

// --- support correspondence ---------------------------------------------------------

CorrespondenceReport verify_support_correspondence_p2(const Graph& y1, Vertex a, const Graph& y2, Vertex b) {
    const auto [p1, d1] = rooted_charpolys(y1, a);
    const auto [p2, d2] = rooted_charpolys(y2, b);
    if (!walk_equivalent(d1, p1, d2, p2)) throw std::invalid_argument("a and b are not walk equivalent");

    CorrespondenceReport report;
    Checker check{report};
    const Composed z = compose_bridge({y1, a, y2, b, 2});
    const SpectralDecomposition dz = decompose(z.graph);
    const SupportSignature sig = support_signature(dz, z.a, z.b);
    check.expect(sig.strongly_cospectral, "a and b are not strongly cospectral in Z");
    report.plus = sig.plus();
    report.minus = sig.minus();

    const IntPoly phi_z = charpoly(z.graph);
    check.expect(phi_z == bridge_charpoly_p2(p1, d1, p2, d2), "bridge formula differs from phi(Z)");
    check.expect(phi_z == (p1 + d1) * (p2 - d2), "phi(Z) != (phi(Y1) + phi(Y1\\a))(phi(Y2) - phi(Y2\\b))");
    check.expect(phi_z == (p1 - d1) * (p2 + d2), "phi(Z) != (phi(Y1) - phi(Y1\\a))(phi(Y2) + phi(Y2\\b))");

    std::vector<double> spare;
    for (int sign : {1, -1}) {
        const std::string tag = sign > 0 ? "+" : "-";
        const std::vector<double>& phi_set = sign > 0 ? report.plus : report.minus;
        const SpectralDecomposition l1 = decompose(y1.with_loop(a, y1.loop(a) + sign));
        const SpectralDecomposition l2 = decompose(y2.with_loop(b, y2.loop(b) + sign));
        check.same(phi_set, support(l1, a), "Phi" + tag + " vs support of a in Y1" + tag + "loop");
        check.same(phi_set, support(l2, b), "Phi" + tag + " vs support of b in Y2" + tag + "loop");
        check.same(phi_set, pole_locations(d1, loop_adjusted_charpoly(p1, d1, sign)),
                   "Phi" + tag + " vs exact poles for Y1" + tag + "loop");
        for (const auto* d : {&l1, &l2}) {
            const auto rest = outside_support(*d, d == &l1 ? a : b);
            spare.insert(spare.end(), rest.begin(), rest.end());
        }
    }

    for (std::size_t r = 0; r < dz.eigenvalues.size(); ++r) {
        const bool in_a = dz.support_norm(r, z.a) > kSupportThreshold;
        const bool in_b = dz.support_norm(r, z.b) > kSupportThreshold;
        if (in_a || in_b) continue;
        const double theta = dz.eigenvalues[r];
        report.leftover.push_back(theta);
        check.expect(contains(spare, theta), "leftover eigenvalue " + std::to_string(theta) +
                                                 " is not a non-support eigenvalue of a looped graph");
    }
    return report;
}

CorrespondenceReport verify_support_correspondence_p3(const Graph& y1, Vertex a, const Graph& y2, Vertex b) {
    const auto [p1, d1] = rooted_charpolys(y1, a);
    const auto [p2, d2] = rooted_charpolys(y2, b);
    if (!walk_equivalent(d1, p1, d2, p2)) throw std::invalid_argument("a and b are not walk equivalent");

    CorrespondenceReport report;
    Checker check{report};
    const Composed z = compose_bridge({y1, a, y2, b, 3});
    const SpectralDecomposition dz = decompose(z.graph);
    const SupportSignature sig = support_signature(dz, z.a, z.b);
    check.expect(sig.strongly_cospectral, "a and b are not strongly cospectral in Z");
    report.plus = sig.plus();
    report.minus = sig.minus();

    const IntPoly phi_z = charpoly(z.graph);
    const IntPoly pend1 = pendant_sqrt2_charpoly(p1, d1);
    const IntPoly pend2 = pendant_sqrt2_charpoly(p2, d2);
    check.expect(phi_z == bridge_charpoly_p3(p1, d1, p2, d2), "bridge formula differs from phi(Z)");
    check.expect(phi_z == p1 * pend2, "phi(Z) != phi(Y1)(t phi(Y2) - 2 phi(Y2\\b))");
    check.expect(phi_z == p2 * pend1, "phi(Z) != phi(Y2)(t phi(Y1) - 2 phi(Y1\\a))");

    const Graph z1 = attach_pendant(y1, a, std::numbers::sqrt2);
    const Graph z2 = attach_pendant(y2, b, std::numbers::sqrt2);
    const SpectralDecomposition dz1 = decompose(z1);
    const SpectralDecomposition dz2 = decompose(z2);
    const SpectralDecomposition dy1 = decompose(y1);
    const SpectralDecomposition dy2 = decompose(y2);

    check.same(report.plus, support(dz1, a), "Phi+ vs support of a in Z1");
    check.same(report.plus, support(dz2, b), "Phi+ vs support of b in Z2");
    check.same(report.plus, pole_locations(d1 * IntPoly::t(), pend1), "Phi+ vs exact poles of Z1");
    check.expect(!contains(report.plus, 0.0), "0 lies in Phi+");
    check.same(report.minus, support(dy1, a), "Phi- vs support of a in Y1");
    check.same(report.minus, support(dy2, b), "Phi- vs support of b in Y2");
    check.same(report.minus, pole_locations(d1, p1), "Phi- vs exact poles of Y1");

    std::vector<double> spare = outside_support(dy1, a);
    const auto rest = outside_support(dy2, b);
    spare.insert(spare.end(), rest.begin(), rest.end());
    const bool zero_allowed = contains(dz1.eigenvalues, 0.0) || contains(dz2.eigenvalues, 0.0);

    for (std::size_t r = 0; r < dz.eigenvalues.size(); ++r) {
        const bool in_a = dz.support_norm(r, z.a) > kSupportThreshold;
        const bool in_b = dz.support_norm(r, z.b) > kSupportThreshold;
        if (in_a || in_b) continue;
        const double theta = dz.eigenvalues[r];
        report.leftover.push_back(theta);
        const bool ok = contains(spare, theta) || (std::abs(theta) <= kValueMatch && zero_allowed);
        check.expect(ok, "leftover eigenvalue " + std::to_string(theta) + " is unaccounted for");
    }
    return report;
}

// --- double star quotients -------------------------------------------------------------

DoubleStarQuotientReport verify_double_star_quotient_relations(std::size_t k, std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    const Graph base = k == 0 ? empty_graph(n) : regular_graph(n, k);
    const Graph cone_graph = cone(base);
    std::vector<Vertex> rest(n);
    std::iota(rest.begin(), rest.end(), Vertex{1});

    DoubleStarQuotientReport report;
    report.k = k;
    report.n = n;
    report.eigenvalues_embedded = true;
    const double kd = static_cast<double>(k), nd = static_cast<double>(n);
    constexpr double tol = 1e-9;

    for (int sign : {1, -1}) {
        const Graph looped = cone_graph.with_loop(0, sign);
        const QuotientPartition q = equitable_quotient(looped, {{0}, rest});
        const std::vector<double> eig = eigenvalues_desc(q.quotient);
        const double sum = eig[0] + eig[1], prod = eig[0] * eig[1];
        const SpectralDecomposition dec = decompose(looped);
        const auto supp = support(dec, 0);
        for (double x : eig) report.eigenvalues_embedded = report.eigenvalues_embedded && contains(supp, x);
        if (sign > 0) {
            report.plus_eigenvalues = eig;
            report.plus_relations = std::abs(sum - (kd + 1)) <= tol && std::abs(prod - (kd - nd)) <= tol;
        } else {
            report.minus_eigenvalues = eig;
            report.minus_relations = std::abs(sum - (kd - 1)) <= tol && std::abs(prod - (-kd - nd)) <= tol;
        }
    }
    report.shift_consistent = std::abs(report.minus_eigenvalues[0] - (report.plus_eigenvalues[0] - 1)) <= tol &&
                              std::abs(report.minus_eigenvalues[1] - (report.plus_eigenvalues[1] - 1)) <= tol;
    return report;
}

}  // namespace qwalk
