#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

inline constexpr double kInterlacingSlack = 1e-9;

/// lambda_k(A) >= lambda_k(S^T A S) and the ascending counterpart, for every k.
/// Throws std::invalid_argument if S^T S != I (to 1e-9).
bool check_cauchy(const Matrix& a, const Matrix& s, double slack = kInterlacingSlack);
/// n x (n-1) isometry whose compression is deletion of vertex v.
Matrix deletion_isometry(std::size_t n, Vertex v);

/// Both families of Weyl inequalities over all admissible (i, k).
bool check_weyl(const Matrix& a, const Matrix& b, double slack = kInterlacingSlack);
/// Partial sums of the k largest eigenvalues are subadditive, for every k.
bool check_kyfan(const Matrix& a, const Matrix& b, double slack = kInterlacingSlack);
/// lambda_j(M + E) >= lambda_j(M - E) for E = |0><0|, every j.
bool check_loop_monotonicity(const Matrix& m, double slack = kInterlacingSlack);

class NotEquitableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct QuotientPartition {
    std::vector<std::vector<Vertex>> cells;
    /// B_ij = e_ij / sqrt(|C_i| |C_j|), e_ij the total weight between the cells.
    Matrix quotient;
};

/// Throws NotEquitableError naming the first vertex whose weight into a cell differs
/// from the rest of its own cell; std::invalid_argument if `cells` is not a partition.
QuotientPartition equitable_quotient(const Graph& g, const std::vector<std::vector<Vertex>>& cells);

struct CorrespondenceReport {
    bool passed = true;
    std::vector<double> plus;
    std::vector<double> minus;
    std::vector<double> leftover;
    std::vector<std::string> problems;
};

/// Y1 - a = b - Y2. Requires walk equivalence (std::invalid_argument otherwise).
CorrespondenceReport verify_support_correspondence_p2(const Graph& y1, Vertex a, const Graph& y2, Vertex b);
/// Y1 - a - c - b - Y2, with the sqrt(2)-pendant graphs on the plus side.
CorrespondenceReport verify_support_correspondence_p3(const Graph& y1, Vertex a, const Graph& y2, Vertex b);

struct DoubleStarQuotientReport {
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<double> plus_eigenvalues;
    std::vector<double> minus_eigenvalues;
    bool plus_relations = false;
    bool minus_relations = false;
    /// Quotient eigenvalues are eigenvalues of the looped cone, in the support of its apex.
    bool eigenvalues_embedded = false;
    /// The minus eigenvalues are the plus eigenvalues shifted by -1.
    bool shift_consistent = false;
    bool passed() const { return plus_relations && minus_relations && eigenvalues_embedded && shift_consistent == (k == 0); }
};

/// Cone over the circulant k-regular graph on n vertices with a +-1 loop on the apex.
DoubleStarQuotientReport verify_double_star_quotient_relations(std::size_t k, std::size_t n);

/// Equal as sets after sorting, entrywise within tol.
bool same_values(std::vector<double> x, std::vector<double> y, double tol);

}  // namespace qwalk
