#include "qwalk/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace qwalk {

namespace {

mpz_class to_mpz(double w) {
    if (!std::isfinite(w) || std::trunc(w) != w) throw std::invalid_argument("exact characteristic polynomial needs integer weights");
    mpz_class z;
    mpz_set_d(z.get_mpz_t(), w);
    return z;
}

void require_integer(const Graph& g) {
    if (!g.integer_weights()) throw std::invalid_argument("exact characteristic polynomial needs integer weights");
}

}  // namespace

mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t n) {
    if (m.size() != n * n) throw std::invalid_argument("matrix size mismatch");
    if (n == 0) return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p * n + k] == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
            sign = -sign;
        }
        const mpz_class& pivot = m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
                mpz_divexact(m[i * n + j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    mpz_class det = m[n * n - 1];
    return sign < 0 ? mpz_class(-det) : det;
}

IntPoly charpoly(const Graph& g) {
    require_integer(g);
    const std::size_t n = g.size();
    std::vector<mpz_class> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = to_mpz(g.weight(i, j));

    // Samples det(kI - A) at k = 0..n, then Newton divided differences.
    std::vector<mpq_class> dd(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<mpz_class> m(n * n);
        for (std::size_t i = 0; i < n * n; ++i) m[i] = -a[i];
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] += static_cast<unsigned long>(k);
        dd[k] = bareiss_determinant(std::move(m), n);
    }
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = n; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(j);

    // Expand sum dd[i] * t(t-1)...(t-i+1) into the monomial basis.
    std::vector<mpq_class> coeffs{dd[n]};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<mpq_class> next(coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] -= coeffs[d] * static_cast<long>(i);
        }
        next[0] += dd[i];
        coeffs = std::move(next);
    }
    std::vector<mpz_class> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i].canonicalize();
        if (coeffs[i].get_den() != 1) throw std::logic_error("interpolated characteristic polynomial is not integral");
        out[i] = coeffs[i].get_num();
    }
    return IntPoly(std::move(out));
}

IntPoly charpoly_deleted(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> drop(g.size(), 0);
    for (Vertex v : removed) {
        if (v >= g.size()) throw std::out_of_range("deleted vertex out of range");
        drop[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.size(); ++v)
        if (!drop[v]) keep.push_back(v);
    if (keep.empty()) {
        require_integer(g);
        return IntPoly::one();
    }
    return charpoly(g.induced(keep));
}

IntPoly charpoly_deleted(const Graph& g, std::initializer_list<Vertex> removed) {
    return charpoly_deleted(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

RootedCharpolys rooted_charpolys(const Graph& y, Vertex v) { return {charpoly(y), charpoly_deleted(y, {v})}; }

IntPoly one_sum_charpoly(const IntPoly& phi_y1, const IntPoly& phi_y1_del, const IntPoly& phi_y2,
                         const IntPoly& phi_y2_del) {
    return phi_y1 * phi_y2_del + phi_y1_del * phi_y2 - IntPoly::t() * phi_y1_del * phi_y2_del;
}

IntPoly bridge_charpoly_p2(const IntPoly& phi_y1, const IntPoly& phi_y1_del_a, const IntPoly& phi_y2,
                           const IntPoly& phi_y2_del_b) {
    return phi_y1 * phi_y2 - phi_y1_del_a * phi_y2_del_b;
}

IntPoly bridge_charpoly_p3(const IntPoly& phi_y1, const IntPoly& phi_y1_del_a, const IntPoly& phi_y2,
                           const IntPoly& phi_y2_del_b) {
    return IntPoly::t() * phi_y1 * phi_y2 - phi_y2 * phi_y1_del_a - phi_y1 * phi_y2_del_b;
}

IntPoly loop_adjusted_charpoly(const IntPoly& phi_y, const IntPoly& phi_y_del_a, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("loop sign must be +1 or -1");
    return sign > 0 ? phi_y - phi_y_del_a : phi_y + phi_y_del_a;
}

IntPoly pendant_sqrt2_charpoly(const IntPoly& phi_y, const IntPoly& phi_y_del_a) {
    return IntPoly::t() * phi_y - phi_y_del_a * mpz_class(2);
}

IntPoly path_sum_poly(const Graph& g, Vertex a, Vertex b) {
    require_integer(g);
    if (g.size() > 64) throw std::invalid_argument("path_sum_poly supports at most 64 vertices");
    std::unordered_map<std::uint64_t, IntPoly> memo;
    IntPoly sum;
    for_each_ab_path(g, a, b, [&](std::span<const Vertex> path) {
        std::uint64_t mask = 0;
        mpz_class w = 1;
        for (std::size_t i = 0; i < path.size(); ++i) {
            mask |= std::uint64_t{1} << path[i];
            if (i > 0) w *= to_mpz(g.weight(path[i - 1], path[i]));
        }
        auto it = memo.find(mask);
        if (it == memo.end()) it = memo.emplace(mask, charpoly_deleted(g, path)).first;
        sum += it->second * w;
    });
    return sum;
}

RationalFunction walk_gf(const Graph& g, Vertex a) { return {charpoly_deleted(g, {a}), charpoly(g)}; }

RationalFunction closed_walk_series(const Graph& g, Vertex a) {
    const std::size_t n = g.size();
    return {charpoly_deleted(g, {a}).reversed(n - 1), charpoly(g).reversed(n)};
}

RationalFunction return_walk_gf(const Graph& g, Vertex a) {
    const std::size_t n = g.size();
    IntPoly rev_whole = charpoly(g).reversed(n);
    IntPoly rev_del = charpoly_deleted(g, {a}).reversed(n - 1);
    return RationalFunction(rev_del - rev_whole, rev_del);
}

std::vector<mpq_class> power_series(const RationalFunction& f, std::size_t terms) {
    const IntPoly& num = f.numerator();
    const IntPoly& den = f.denominator();
    mpq_class d0(den.coeff(0));
    if (d0 == 0) throw std::domain_error("rational function has a pole at 0");
    std::vector<mpq_class> s(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        mpq_class acc(num.coeff(k));
        for (std::size_t j = 1; j <= k && static_cast<long>(j) <= den.degree(); ++j) acc -= mpq_class(den.coeff(j)) * s[k - j];
        s[k] = acc / d0;
    }
    return s;
}

bool poles_simple(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) return true;
    IntPoly reduced = poly_divexact(den, poly_gcd(num, den));
    return poly_gcd(reduced, reduced.derivative()).degree() <= 0;
}

bool walk_equivalent(const IntPoly& phi_y1_del_a, const IntPoly& phi_y1, const IntPoly& phi_y2_del_b,
                     const IntPoly& phi_y2) {
    return phi_y1_del_a * phi_y2 == phi_y2_del_b * phi_y1;
}

std::vector<double> pole_locations(const IntPoly& num, const IntPoly& den) {
    if (num.is_zero()) return {};
    IntPoly reduced = poly_divexact(den, poly_gcd(num, den));
    if (reduced.degree() < 1) return {};
    return real_roots(reduced);
}

}  // namespace qwalk
