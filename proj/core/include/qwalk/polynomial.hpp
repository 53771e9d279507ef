#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

/// Thrown by divexact when the divisor does not divide exactly over the integers.
class InexactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Univariate polynomial with arbitrary-precision integer coefficients in
/// ascending degree. Normalised: no trailing zeros, the zero polynomial has
/// no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(const mpz_class& c);
    static IntPoly one() { return constant(1); }
    /// The indeterminate t.
    static IntPoly t();
    /// c * t^k
    static IntPoly monomial(const mpz_class& c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& leading() const;
    /// Coefficient of t^k (zero beyond the degree).
    mpz_class coeff(std::size_t k) const;
    std::span<const mpz_class> coefficients() const noexcept { return c_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
    friend IntPoly operator*(const mpz_class& s, IntPoly a) { return a *= s; }
    IntPoly operator-() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    mpz_class operator()(const mpz_class& x) const;
    long double evaluate(long double x) const;

    IntPoly derivative() const;
    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    mpz_class content() const;
    /// Divides by the content and makes the leading coefficient positive.
    IntPoly primitive_part() const;
    /// Polynomial whose coefficient list is reversed after padding to `degree` + 1 terms:
    /// t^degree * p(1/t). `degree` must be at least this->degree().
    IntPoly reversed(std::size_t degree) const;

    /// "[c0, c1, ..., cn]", "[]" for zero.
    std::string to_string() const;

private:
    void normalize();

    std::vector<mpz_class> c_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// a / b exactly over Z. Throws InexactDivision on a nonzero remainder or
/// when an intermediate quotient coefficient is not an integer.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (1 when coprime, 0 when both are zero),
/// computed with a primitive pseudo-remainder sequence.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p').
IntPoly squarefree_part(const IntPoly& p);

mpz_class poly_eval_at_integer(const IntPoly& p, const mpz_class& x);

/// Distinct real roots in ascending order, each located to within `tol`.
/// Works on any nonzero polynomial: roots of the derivative split the line
/// into monotone pieces, each bisected on a sign change.
std::vector<double> real_roots(const IntPoly& p, double tol = 1e-13);

}  // namespace qwalk
