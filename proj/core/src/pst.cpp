#include "qwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qwalk/charpoly.hpp"

namespace qwalk {

std::string_view to_string(PstFailure f) {
    switch (f) {
        case PstFailure::not_strongly_cospectral: return "not_strongly_cospectral";
        case PstFailure::no_common_alpha: return "no_common_alpha";
        case PstFailure::delta_not_consistent: return "delta_not_consistent";
        case PstFailure::parity_violation: return "parity_violation";
        case PstFailure::no_admissible_g: return "no_admissible_g";
    }
    return "unknown";
}

namespace {

std::optional<long> near_integer(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) > kIntegralityTolerance) return std::nullopt;
    return static_cast<long>(r);
}

bool divides(const IntPoly& f, const IntPoly& p) {
    try {
        poly_divexact(p, f);
        return true;
    } catch (const InexactDivision&) {
        return false;
    }
}

long squarefree_kernel(long d) {
    long out = 1;
    for (long p = 2; p * p <= d; ++p) {
        int e = 0;
        while (d % p == 0) {
            d /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return out * d;
}

long isqrt_exact(long x) {
    long r = std::lround(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : -1;
}

long mod2(long x) { return ((x % 2) + 2) % 2; }

struct Timing {
    std::optional<PstFailure> failure;
    long g = 0;
    std::vector<long> ks;
    double time = 0.0;
};

// With d_r = beta_0 - beta_r and G their gcd, t = 2 pi m / (G sqrt(delta)) gives
// t (theta_0 - theta_r) = m (d_r / G) pi. Some d_r / G is odd, so m = 1 works iff
// d_r / G = (1 - sigma_r)/2 mod 2 for all r, and m = 2 iff every sigma is +1.
Timing solve_timing(const QuadraticStructure& q, const std::vector<int>& sigmas) {
    Timing out;
    long big_g = 0;
    for (long beta : q.betas) big_g = std::gcd(big_g, q.betas.front() - beta);
    if (big_g == 0) {
        out.failure = PstFailure::no_admissible_g;
        return out;
    }
    auto admissible = [&](long m) {
        for (std::size_t r = 0; r < q.betas.size(); ++r)
            if (mod2(m * (q.betas.front() - q.betas[r]) / big_g) != (1 - sigmas[r]) / 2) return false;
        return true;
    };
    const long m = admissible(1) ? 1 : admissible(2) ? 2 : 0;
    if (m == 0) {
        out.failure = PstFailure::no_admissible_g;
        return out;
    }
    out.g = big_g;
    for (long beta : q.betas) out.ks.push_back(m * (q.betas.front() - beta) / big_g);
    out.time = 2.0 * std::numbers::pi * static_cast<double>(m) /
               (static_cast<double>(big_g) * std::sqrt(static_cast<double>(q.delta)));
    return out;
}

std::vector<int> normalized(std::vector<int> sigmas) {
    if (!sigmas.empty() && sigmas.front() < 0)
        for (int& s : sigmas) s = -s;
    return sigmas;
}

}  // namespace

QuadraticStructure quadratic_structure(const std::vector<double>& thetas, const IntPoly* exact) {
    QuadraticStructure q;
    const std::size_t m = thetas.size();
    std::vector<std::optional<long>> integral(m);
    std::vector<std::optional<std::size_t>> partner(m);
    std::vector<long> sums(m), disc(m);

    for (std::size_t r = 0; r < m; ++r) {
        auto k = near_integer(thetas[r]);
        if (k && (!exact || divides(IntPoly{-*k, 1}, *exact))) integral[r] = k;
    }
    for (std::size_t r = 0; r < m; ++r) {
        if (integral[r] || partner[r]) continue;
        for (std::size_t s = r + 1; s < m; ++s) {
            if (integral[s] || partner[s]) continue;
            auto sum = near_integer(thetas[r] + thetas[s]);
            auto prod = near_integer(thetas[r] * thetas[s]);
            if (!sum || !prod) continue;
            if (exact && !divides(IntPoly{*prod, -*sum, 1}, *exact)) continue;
            const long d = *sum * *sum - 4 * *prod;
            if (d <= 0 || isqrt_exact(d) >= 0) continue;
            partner[r] = s;
            partner[s] = r;
            sums[r] = sums[s] = *sum;
            disc[r] = disc[s] = d;
            break;
        }
        if (!partner[r]) {
            q.failure = PstFailure::delta_not_consistent;
            return q;
        }
    }

    const bool any_pair = std::any_of(partner.begin(), partner.end(), [](const auto& p) { return p.has_value(); });
    if (!any_pair) {
        q.alpha = 0;
        q.delta = 1;
        for (const auto& k : integral) q.betas.push_back(2 * *k);
        return q;
    }

    // Irrational eigenvalues present: every pair shares alpha, integer ones sit at alpha/2.
    std::optional<long> alpha;
    for (std::size_t r = 0; r < m; ++r) {
        if (!partner[r]) continue;
        if (alpha && *alpha != sums[r]) {
            q.failure = PstFailure::no_common_alpha;
            return q;
        }
        alpha = sums[r];
    }
    for (std::size_t r = 0; r < m; ++r)
        if (integral[r] && 2 * *integral[r] != *alpha) {
            q.failure = PstFailure::no_common_alpha;
            return q;
        }
    q.alpha = *alpha;

    std::optional<long> delta;
    for (std::size_t r = 0; r < m; ++r) {
        if (!partner[r]) continue;
        const long kernel = squarefree_kernel(disc[r]);
        if (delta && *delta != kernel) {
            q.failure = PstFailure::delta_not_consistent;
            return q;
        }
        delta = kernel;
    }
    q.delta = *delta;

    for (std::size_t r = 0; r < m; ++r) {
        if (integral[r]) {
            q.betas.push_back(0);
            continue;
        }
        const long magnitude = isqrt_exact(disc[r] / q.delta);
        const bool upper = thetas[r] > thetas[*partner[r]];
        q.betas.push_back(upper ? magnitude : -magnitude);
    }
    for (long beta : q.betas)
        if (mod2(beta) != mod2(q.alpha)) {
            q.failure = PstFailure::parity_violation;
            return q;
        }
    return q;
}

std::optional<double> min_pst_time(const std::vector<double>& thetas, const std::vector<int>& sigmas) {
    if (thetas.size() != sigmas.size()) throw std::invalid_argument("thetas and sigmas differ in length");
    for (int s : sigmas)
        if (s != 1 && s != -1) throw std::invalid_argument("sigma must be +1 or -1");
    if (thetas.size() < 2) return std::nullopt;
    const QuadraticStructure q = quadratic_structure(thetas);
    if (q.failure) return std::nullopt;
    const Timing t = solve_timing(q, normalized(sigmas));
    if (t.failure) return std::nullopt;
    return t.time;
}

double evolve_fidelity(const SpectralDecomposition& dec, Vertex a, Vertex b, double t) {
    double re = 0.0, im = 0.0;
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r) {
        const double e = dec.entry(r, b, a);
        re += std::cos(t * dec.eigenvalues[r]) * e;
        im += std::sin(t * dec.eigenvalues[r]) * e;
    }
    return std::hypot(re, im);
}

double evolve_fidelity(const Graph& g, Vertex a, Vertex b, double t) { return evolve_fidelity(decompose(g), a, b, t); }

PstCertificate pst_certificate(const Graph& g, Vertex a, Vertex b, std::optional<double> grouping_tolerance) {
    if (a >= g.size() || b >= g.size()) throw std::out_of_range("vertex out of range");
    if (a == b) throw std::invalid_argument("perfect state transfer needs a != b");
    PstCertificate cert;
    const SpectralDecomposition dec = decompose(g, grouping_tolerance);
    const StrongCospectrality sc = strongly_cospectral(g, dec, a, b);
    cert.eigenvalues = sc.signature.support_a();
    if (!sc.value) {
        cert.failure = PstFailure::not_strongly_cospectral;
        return cert;
    }
    for (const auto& e : sc.signature.entries) cert.sigmas.push_back(*e.sigma);
    cert.sigmas = normalized(cert.sigmas);

    std::optional<IntPoly> support_poly;
    if (g.integer_weights()) {
        const RationalFunction w = walk_gf(g, a);
        support_poly = w.denominator();
    }
    const QuadraticStructure q = quadratic_structure(cert.eigenvalues, support_poly ? &*support_poly : nullptr);
    if (q.failure) {
        cert.failure = q.failure;
        return cert;
    }
    cert.alpha = q.alpha;
    cert.delta = q.delta;
    cert.betas = q.betas;

    const Timing timing = solve_timing(q, cert.sigmas);
    if (timing.failure) {
        cert.failure = timing.failure;
        return cert;
    }
    cert.success = true;
    cert.g = timing.g;
    cert.ks = timing.ks;
    cert.pst_time = timing.time;
    cert.fidelity_at_time = evolve_fidelity(dec, a, b, cert.pst_time);
    cert.closed_form_time = std::numbers::pi / (static_cast<double>(cert.g) * std::sqrt(static_cast<double>(cert.delta)));
    cert.closed_form_matches = std::abs(cert.closed_form_time - cert.pst_time) <= 1e-12 * cert.pst_time;
    if (cert.fidelity_at_time < 1.0 - 1e-9)
        throw CrossCheckError("certificate time does not reach fidelity 1 - 1e-9");
    return cert;
}

FidelityScan fidelity_scan(const Graph& g, Vertex a, Vertex b, double t_max, std::size_t steps) {
    if (a >= g.size() || b >= g.size()) throw std::out_of_range("vertex out of range");
    if (a == b) throw std::invalid_argument("fidelity scan needs a != b");
    if (steps == 0 || !(t_max > 0.0)) throw std::invalid_argument("fidelity scan needs steps >= 1 and t_max > 0");
    const SpectralDecomposition dec = decompose(g);
    std::vector<double> thetas, weights;
    for (std::size_t r = 0; r < dec.eigenvalues.size(); ++r) {
        const double e = dec.entry(r, b, a);
        if (e == 0.0) continue;
        thetas.push_back(dec.eigenvalues[r]);
        weights.push_back(e);
    }
    auto fidelity = [&](double t) {
        double re = 0.0, im = 0.0;
        for (std::size_t r = 0; r < thetas.size(); ++r) {
            re += std::cos(t * thetas[r]) * weights[r];
            im += std::sin(t * thetas[r]) * weights[r];
        }
        return std::hypot(re, im);
    };

    const double h = t_max / static_cast<double>(steps);
    FidelityScan best{0.0, fidelity(0.0)};
    for (std::size_t i = 1; i <= steps; ++i) {
        const double t = h * static_cast<double>(i);
        const double f = fidelity(t);
        if (f > best.fidelity) best = {t, f};
    }

    double lo = std::max(0.0, best.time - h), hi = std::min(t_max, best.time + h);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = fidelity(x1), f2 = fidelity(x2);
    for (int it = 0; it < 100 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fidelity(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fidelity(x1);
        }
    }
    const double t = (lo + hi) / 2.0;
    const double f = fidelity(t);
    if (f > best.fidelity) best = {t, f};
    return best;
}

}  // namespace qwalk
