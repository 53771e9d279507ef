#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Dense row-major real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : r_(rows), c_(cols), d_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix adjacency(const Graph& g);
    /// Rank-one |v><v| for the standard basis vector v.
    static Matrix unit_projector(std::size_t n, std::size_t v);

    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }

    double& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    std::span<const double> data() const noexcept { return d_; }

    Matrix transpose() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(double s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    std::vector<double> apply(std::span<const double> v) const;
    std::vector<double> column(std::size_t j) const;

    bool is_symmetric(double tol = 0.0) const;
    double max_abs() const noexcept;
    /// Largest absolute row sum.
    double norm_inf() const noexcept;

private:
    std::size_t r_ = 0;
    std::size_t c_ = 0;
    std::vector<double> d_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SymmetricEigen {
    /// Descending.
    std::vector<double> values;
    /// Orthonormal eigenvectors as columns, matching `values`.
    Matrix vectors;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi rotations until the off-diagonal mass is at rounding level.
/// Asymmetry up to 1e-12 * max|a_ij| is averaged away; more is rejected.
/// Throws ConvergenceError after `max_sweeps` sweeps.
SymmetricEigen jacobi_eigen(const Matrix& a, int max_sweeps = kJacobiMaxSweeps);

/// Descending eigenvalues only.
std::vector<double> eigenvalues_desc(const Matrix& a);

double dot(std::span<const double> x, std::span<const double> y);
double norm(std::span<const double> x);

}  // namespace qwalk
