#include "qwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qwalk/charpoly.hpp"

namespace qwalk {

double SpectralDecomposition::support_norm(std::size_t r, Vertex a) const {
    return std::sqrt(std::max(0.0, projectors[r](a, a)));
}

double default_grouping_tolerance(const Matrix& a) { return 1e-9 * std::max(1.0, a.norm_inf()); }

SpectralDecomposition decompose(const Matrix& a, std::optional<double> tol) {
    const double gap = tol.value_or(default_grouping_tolerance(a));
    if (!(gap > 0.0)) throw std::invalid_argument("grouping tolerance must be positive");
    SymmetricEigen eig = jacobi_eigen(a);
    const std::size_t n = a.rows();

    SpectralDecomposition dec;
    dec.grouping_tolerance = gap;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && eig.values[end - 1] - eig.values[end] < gap) ++end;
        double sum = 0.0;
        Matrix e(n, n);
        for (std::size_t k = start; k < end; ++k) {
            sum += eig.values[k];
            for (std::size_t i = 0; i < n; ++i) {
                const double vi = eig.vectors(i, k);
                for (std::size_t j = 0; j < n; ++j) e(i, j) += vi * eig.vectors(j, k);
            }
        }
        dec.eigenvalues.push_back(sum / static_cast<double>(end - start));
        dec.multiplicities.push_back(end - start);
        dec.projectors.push_back(std::move(e));
        start = end;
    }
    return dec;
}

SpectralDecomposition decompose(const Graph& g, std::optional<double> tol) {
    return decompose(Matrix::adjacency(g), tol);
}

std::vector<std::size_t> support_indices(const SpectralDecomposition& dec, Vertex a) {
    if (a >= dec.order()) throw std::out_of_range("vertex out of range");
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r)
        if (dec.support_norm(r, a) > kSupportThreshold) out.push_back(r);
    return out;
}

std::vector<double> support(const SpectralDecomposition& dec, Vertex a) {
    std::vector<double> out;
    for (std::size_t r : support_indices(dec, a)) out.push_back(dec.eigenvalues[r]);
    return out;
}

bool cospectral(const Graph& g, Vertex a, Vertex b) {
    if (a >= g.size() || b >= g.size()) throw std::out_of_range("vertex out of range");
    if (a == b) return true;
    if (g.integer_weights()) return charpoly_deleted(g, {a}) == charpoly_deleted(g, {b});

    const Matrix m = Matrix::adjacency(g);
    std::vector<double> va(g.size(), 0.0), vb(g.size(), 0.0);
    va[a] = 1.0;
    vb[b] = 1.0;
    for (std::size_t k = 1; k < g.size(); ++k) {
        va = m.apply(va);
        vb = m.apply(vb);
        const double scale = std::max({1.0, std::abs(va[a]), std::abs(vb[b])});
        if (std::abs(va[a] - vb[b]) > 1e-9 * scale) return false;
    }
    return true;
}

namespace {

std::vector<double> pick(const SupportSignature& s, int sign) {
    std::vector<double> out;
    for (const auto& e : s.entries)
        if (e.sigma && *e.sigma == sign) out.push_back(e.theta);
    return out;
}

}  // namespace

std::vector<double> SupportSignature::plus() const { return pick(*this, 1); }
std::vector<double> SupportSignature::minus() const { return pick(*this, -1); }

std::vector<double> SupportSignature::support_a() const {
    std::vector<double> out;
    for (const auto& e : entries)
        if (e.in_a) out.push_back(e.theta);
    return out;
}

SupportSignature support_signature(const SpectralDecomposition& dec, Vertex a, Vertex b) {
    if (a >= dec.order() || b >= dec.order()) throw std::out_of_range("vertex out of range");
    SupportSignature sig{a, b, {}, true};
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r) {
        SupportEntry e{dec.eigenvalues[r], dec.support_norm(r, a) > kSupportThreshold,
                       dec.support_norm(r, b) > kSupportThreshold, std::nullopt};
        if (!e.in_a && !e.in_b) continue;
        if (e.in_a && e.in_b) {
            const int s = dec.entry(r, a, b) >= 0.0 ? 1 : -1;
            const auto pa = dec.project(r, a);
            const auto pb = dec.project(r, b);
            double diff = 0.0;
            for (std::size_t i = 0; i < pa.size(); ++i) diff += (pa[i] - s * pb[i]) * (pa[i] - s * pb[i]);
            if (std::sqrt(diff) <= kSupportThreshold) e.sigma = s;
        }
        if (!e.sigma) sig.strongly_cospectral = false;
        sig.entries.push_back(e);
    }
    return sig;
}

bool strongly_cospectral_exact(const Graph& g, Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("strong cospectrality needs a != b");
    const IntPoly da = charpoly_deleted(g, {a});
    if (da != charpoly_deleted(g, {b})) return false;
    return poles_simple(charpoly_deleted(g, {a, b}), charpoly(g));
}

StrongCospectrality strongly_cospectral(const Graph& g, const SpectralDecomposition& dec, Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("strong cospectrality needs a != b");
    StrongCospectrality out{false, false, support_signature(dec, a, b)};
    out.value = out.signature.strongly_cospectral;
    if (g.integer_weights()) {
        out.exact_checked = true;
        const bool exact = strongly_cospectral_exact(g, a, b);
        if (exact != out.value)
            throw CrossCheckError("exact and numeric strong cospectrality disagree for vertices " +
                                  std::to_string(a) + ", " + std::to_string(b));
    }
    return out;
}

StrongCospectrality strongly_cospectral(const Graph& g, Vertex a, Vertex b) {
    return strongly_cospectral(g, decompose(g), a, b);
}

// --- neutrino -----------------------------------------------------------------

namespace {

constexpr double kRootMatch = 1e-6;

std::optional<double> nearest(const std::vector<double>& roots, double x, double tol) {
    std::optional<double> best;
    for (double r : roots)
        if (std::abs(r - x) <= tol && (!best || std::abs(r - x) < std::abs(*best - x))) best = r;
    return best;
}

}  // namespace

NeutrinoEvaluator::NeutrinoEvaluator(const Graph& g) : g_(g), phi_(charpoly(g)), roots_(real_roots(phi_)) {}

const NeutrinoEvaluator::Reduced& NeutrinoEvaluator::reduced(Vertex a, Vertex b) {
    auto key = std::minmax(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    IntPoly num = a == b ? charpoly_deleted(g_, {a}) : path_sum_poly(g_, a, b);
    Reduced red;
    if (num.is_zero()) {
        red.den = IntPoly::one();
    } else {
        const IntPoly common = poly_gcd(num, phi_);
        red.num = poly_divexact(num, common);
        red.den = poly_divexact(phi_, common);
        red.den_prime = red.den.derivative();
        if (red.den.degree() > 0) red.poles = real_roots(red.den);
    }
    return cache_.emplace(key, std::move(red)).first->second;
}

double NeutrinoEvaluator::entry(Vertex a, Vertex b, double theta) {
    if (a >= g_.size() || b >= g_.size()) throw std::out_of_range("vertex out of range");
    if (!nearest(roots_, theta, kRootMatch)) throw std::invalid_argument("theta is not an eigenvalue of the graph");
    const Reduced& red = reduced(a, b);
    const auto pole = nearest(red.poles, theta, kRootMatch);
    if (!pole) return 0.0;
    const long double r = *pole;
    return static_cast<double>(red.num.evaluate(r) / red.den_prime.evaluate(r));
}

double projector_entry_via_neutrino(const Graph& g, Vertex a, Vertex b, double theta) {
    return NeutrinoEvaluator(g).entry(a, b, theta);
}

double neutrino_limit_numeric(const Graph& g, Vertex a, Vertex b, double theta) {
    const IntPoly phi = charpoly(g);
    const IntPoly num = a == b ? charpoly_deleted(g, {a}) : path_sum_poly(g, a, b);
    constexpr long double h = 1e-6L;
    auto f = [&](long double t) { return (t - theta) * num.evaluate(t) / phi.evaluate(t); };
    return static_cast<double>((f(theta + h) + f(theta - h)) / 2.0L);
}

// --- walk module ----------------------------------------------------------------

Matrix walk_module_matrix(const Matrix& m, Vertex v) {
    const std::size_t n = m.rows();
    if (v >= n) throw std::out_of_range("vertex out of range");
    const double breakdown = 1e-8 * std::max(1.0, m.norm_inf());

    std::vector<std::vector<double>> basis;
    std::vector<double> alpha, beta;
    std::vector<double> q(n, 0.0);
    q[v] = 1.0;
    basis.push_back(q);
    while (true) {
        std::vector<double> w = m.apply(basis.back());
        alpha.push_back(dot(w, basis.back()));
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis) {
                const double c = dot(w, u);
                for (std::size_t i = 0; i < n; ++i) w[i] -= c * u[i];
            }
        const double b = norm(w);
        if (b < breakdown || basis.size() == n) break;
        for (double& x : w) x /= b;
        beta.push_back(b);
        basis.push_back(std::move(w));
    }
    const std::size_t k = alpha.size();
    Matrix t(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    return t;
}

Matrix walk_module_matrix(const Graph& g, Vertex a) { return walk_module_matrix(Matrix::adjacency(g), a); }

}  // namespace qwalk
