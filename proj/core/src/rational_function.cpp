#include "qwalk/rational_function.hpp"

namespace qwalk {

RationalFunction::RationalFunction(IntPoly numerator, IntPoly denominator) {
    if (denominator.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (numerator.is_zero()) {
        num_ = {};
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = poly_gcd(numerator, denominator);
    numerator = poly_divexact(numerator, g);
    denominator = poly_divexact(denominator, g);

    mpz_class c;
    mpz_class cn = numerator.content();
    mpz_class cd = denominator.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (denominator.leading() < 0) c = -c;
    auto scale = [&](const IntPoly& p) {
        std::vector<mpz_class> v(p.coefficients().begin(), p.coefficients().end());
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return IntPoly(std::move(v));
    };
    num_ = scale(numerator);
    den_ = scale(denominator);
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    return {x.num_ * y.num_, x.den_ * y.den_};
}

std::string RationalFunction::to_string() const { return num_.to_string() + " / " + den_.to_string(); }

}  // namespace qwalk
