#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"
#include "qwalk/polynomial.hpp"

namespace qwalk {

/// ||E_r a|| above this counts as "in the support of a".
inline constexpr double kSupportThreshold = 1e-7;

struct SpectralDecomposition {
    /// Distinct eigenvalues, descending.
    std::vector<double> eigenvalues;
    std::vector<std::size_t> multiplicities;
    std::vector<Matrix> projectors;
    double grouping_tolerance = 0.0;

    std::size_t order() const { return projectors.empty() ? 0 : projectors.front().rows(); }
    double entry(std::size_t r, Vertex a, Vertex b) const { return projectors[r](a, b); }
    /// E_r |a>.
    std::vector<double> project(std::size_t r, Vertex a) const { return projectors[r].column(a); }
    /// ||E_r |a>|| = sqrt(E_r(a, a)).
    double support_norm(std::size_t r, Vertex a) const;
};

double default_grouping_tolerance(const Matrix& a);

/// Eigenvalues closer than `tol` (single linkage on the sorted list) are merged.
SpectralDecomposition decompose(const Matrix& a, std::optional<double> tol = std::nullopt);
SpectralDecomposition decompose(const Graph& g, std::optional<double> tol = std::nullopt);

/// Eigenvalue support of a, descending.
std::vector<double> support(const SpectralDecomposition& dec, Vertex a);
/// Indices r into dec.eigenvalues of the support of a.
std::vector<std::size_t> support_indices(const SpectralDecomposition& dec, Vertex a);

/// phi(G \ a) == phi(G \ b) for integer graphs; otherwise compares
/// (A^k)_aa and (A^k)_bb for k < n with a relative tolerance of 1e-9.
bool cospectral(const Graph& g, Vertex a, Vertex b);

struct SupportEntry {
    double theta;
    bool in_a;
    bool in_b;
    /// Set when both supports hold and E_r a = sigma E_r b.
    std::optional<int> sigma;
};

struct SupportSignature {
    Vertex a = 0;
    Vertex b = 0;
    std::vector<SupportEntry> entries;
    bool strongly_cospectral = false;

    /// Support eigenvalues with sigma = +1 (resp. -1), descending.
    std::vector<double> plus() const;
    std::vector<double> minus() const;
    std::vector<double> support_a() const;
};

/// Numeric signature from the projectors. Only eigenvalues in the support of a
/// or of b appear.
SupportSignature support_signature(const SpectralDecomposition& dec, Vertex a, Vertex b);

/// Raised when the exact and numeric strong-cospectrality decisions differ.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cospectral and phi(G \ ab) / phi(G) has only simple poles. Integer graphs only.
bool strongly_cospectral_exact(const Graph& g, Vertex a, Vertex b);

struct StrongCospectrality {
    bool value;
    /// False when the graph has non-integer weights and only the numeric test ran.
    bool exact_checked;
    SupportSignature signature;
};

/// Runs both decisions and throws CrossCheckError if they disagree.
StrongCospectrality strongly_cospectral(const Graph& g, Vertex a, Vertex b);
StrongCospectrality strongly_cospectral(const Graph& g, const SpectralDecomposition& dec, Vertex a, Vertex b);

/// E_r(a, b) from characteristic polynomials: the residue at theta of
/// phi(G \ a) / phi(G) (a == b) or path_sum_poly(a, b) / phi(G) (a != b).
/// Reductions are exact; theta is polished to the isolated root of the
/// reduced denominator before the final floating evaluation.
class NeutrinoEvaluator {
public:
    explicit NeutrinoEvaluator(const Graph& g);

    /// Throws std::invalid_argument if theta is not within 1e-6 of a root of phi(G).
    double entry(Vertex a, Vertex b, double theta);

private:
    struct Reduced {
        IntPoly num;
        IntPoly den;
        IntPoly den_prime;
        std::vector<double> poles;
    };
    const Reduced& reduced(Vertex a, Vertex b);

    Graph g_;
    IntPoly phi_;
    std::vector<double> roots_;
    std::map<std::pair<Vertex, Vertex>, Reduced> cache_;
};

double projector_entry_via_neutrino(const Graph& g, Vertex a, Vertex b, double theta);

/// Fallback when theta is only known numerically: averages (t - theta) f(t) at
/// theta +- 1e-6, with f as in NeutrinoEvaluator. Integer graphs only.
double neutrino_limit_numeric(const Graph& g, Vertex a, Vertex b, double theta);

/// Lanczos compression of A onto the walk module of a, starting from |a>,
/// with full reorthogonalisation. The dimension is where the recurrence breaks
/// down (beta < 1e-8 * max(1, ||A||)).
Matrix walk_module_matrix(const Graph& g, Vertex a);
Matrix walk_module_matrix(const Matrix& a, Vertex v);

}  // namespace qwalk
