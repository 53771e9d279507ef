#include "qwalk/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qwalk {

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    c_.reserve(coefficients.size());
    for (long c : coefficients) c_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::t() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1, 0);
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& s) {
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

long double IntPoly::evaluate(long double x) const {
    long double acc = 0.0L;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<long double>(it->get_d());
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    IntPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::reversed(std::size_t degree) const {
    if (static_cast<long>(degree) < this->degree()) throw std::invalid_argument("reversal degree below polynomial degree");
    std::vector<mpz_class> r(degree + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[degree - i] = c_[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
    os << ']';
    return os.str();
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly poly_sub(const IntPoly& a, const IntPoly& b) { return a - b; }
IntPoly poly_mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InexactDivision("divisor degree exceeds dividend degree");

    std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    std::vector<mpz_class> q(rem.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()))
            throw InexactDivision("quotient coefficient is not an integer");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * bc[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw InexactDivision("nonzero remainder");
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r(a.coefficients().begin(), a.coefficients().end());
    const auto bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const mpz_class& lb = bc[db];
    // One scaling by lc(b) per eliminated degree: da - db + 1 in total.
    for (std::size_t top = r.size() - 1;; --top) {
        mpz_class lead = r[top];
        for (std::size_t i = 0; i <= top; ++i) r[i] *= lb;
        for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= lead * bc[j];
        if (top == db) break;
    }
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    return poly_divexact(p, poly_gcd(p, p.derivative()));
}

mpz_class poly_eval_at_integer(const IntPoly& p, const mpz_class& x) { return p(x); }

namespace {

int exact_sign(const IntPoly& p, double x) {
    mpq_class q(x);
    mpq_class acc = 0;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + mpq_class(*it);
    return sgn(acc);
}

double bisect(const IntPoly& p, double lo, double hi, int sign_lo, double tol) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
        int s = exact_sign(p, mid);
        if (s == 0) return mid;
        if (s == sign_lo) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> roots_of_squarefree(const IntPoly& p, double tol) {
    if (p.degree() < 1) return {};
    const auto c = p.coefficients();
    if (p.degree() == 1) return {mpq_class(mpq_class(-c[0]) / mpq_class(c[1])).get_d()};

    // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_n|.
    mpq_class bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        mpq_class r = abs(mpq_class(c[i]) / mpq_class(c.back()));
        if (r > bound) bound = r;
    }
    double b = bound.get_d() + 1.5;

    std::vector<double> breaks{-b};
    for (double x : real_roots(p.derivative(), tol)) breaks.push_back(x);
    breaks.push_back(b);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double lo = breaks[i], hi = breaks[i + 1];
        int slo = exact_sign(p, lo), shi = exact_sign(p, hi);
        if (slo == 0) {
            if (roots.empty() || roots.back() != lo) roots.push_back(lo);
            continue;
        }
        if (shi == 0) {
            roots.push_back(hi);
            continue;
        }
        if (slo != shi) roots.push_back(bisect(p, lo, hi, slo, tol));
    }
    return roots;
}

}  // namespace

std::vector<double> real_roots(const IntPoly& p, double tol) {
    if (p.is_zero()) throw std::domain_error("the zero polynomial has no isolated roots");
    return roots_of_squarefree(squarefree_part(p).primitive_part(), tol);
}

}  // namespace qwalk
