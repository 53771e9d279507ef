#pragma once

#include <string>

#include "qwalk/polynomial.hpp"

namespace qwalk {

/// Quotient of integer polynomials kept in a unique reduced form: the
/// numerator and denominator are coprime, their contents are coprime, and
/// the denominator has a positive leading coefficient (monic whenever the
/// fraction admits a monic integer denominator, e.g. ratios of charpolys).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPoly::one()) {}
    RationalFunction(IntPoly numerator, IntPoly denominator);
    explicit RationalFunction(IntPoly p) : num_(std::move(p)), den_(IntPoly::one()) {}

    const IntPoly& numerator() const noexcept { return num_; }
    const IntPoly& denominator() const noexcept { return den_; }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
    bool operator==(const RationalFunction&) const = default;

    std::string to_string() const;

private:
    IntPoly num_;
    IntPoly den_;
};

}  // namespace qwalk
