#include "qwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwalk {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjacency(const Graph& g) {
    Matrix m(g.size(), g.size());
    std::copy(g.weights().begin(), g.weights().end(), m.d_.begin());
    return m;
}

Matrix Matrix::unit_projector(std::size_t n, std::size_t v) {
    Matrix m(n, n);
    m(v, v) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (o.r_ != r_ || o.c_ != c_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (o.r_ != r_ || o.c_ != c_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : d_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            double x = a(i, k);
            if (x == 0.0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

std::vector<double> Matrix::apply(std::span<const double> v) const {
    if (v.size() != c_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<double> out(r_, 0.0);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> out(r_);
    for (std::size_t i = 0; i < r_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool Matrix::is_symmetric(double tol) const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = i + 1; j < c_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double x : d_) m = std::max(m, std::abs(x));
    return m;
}

double Matrix::norm_inf() const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < r_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < c_; ++j) s += std::abs((*this)(i, j));
        m = std::max(m, s);
    }
    return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

SymmetricEigen jacobi_eigen(const Matrix& input, int max_sweeps) {
    if (input.rows() != input.cols() || !input.is_symmetric(1e-12 * std::max(1.0, input.max_abs())))
        throw std::invalid_argument("jacobi_eigen needs a symmetric matrix");
    const std::size_t n = input.rows();
    // Averaging removes rounding-level asymmetry (e.g. from S^T A S).
    Matrix a = (input + input.transpose()) * 0.5;
    Matrix v = Matrix::identity(n);

    double frob2 = 0.0;
    for (double x : a.data()) frob2 += x * x;
    const double target = 1e-32 * frob2;

    auto off2 = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return s;
    };

    bool converged = false;
    for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
        if (off2() <= target) {
            converged = true;
            break;
        }
        if (sweep == max_sweeps) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }
    if (!converged) throw ConvergenceError("Jacobi eigensolver did not converge within the sweep cap");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    SymmetricEigen out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> eigenvalues_desc(const Matrix& a) { return jacobi_eigen(a).values; }

double dot(std::span<const double> x, std::span<const double> y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace qwalk
