#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

enum class PstFailure {
    not_strongly_cospectral,
    no_common_alpha,
    delta_not_consistent,
    parity_violation,
    no_admissible_g,
};

std::string_view to_string(PstFailure f);

/// Tolerance for every integrality / pairing test on numeric eigenvalues.
inline constexpr double kIntegralityTolerance = 1e-6;

/// theta_r = (alpha + beta_r sqrt(delta)) / 2 for a list of eigenvalues.
struct QuadraticStructure {
    std::optional<PstFailure> failure;
    long alpha = 0;
    long delta = 1;
    std::vector<long> betas;
};

/// Recovers alpha, delta and the betas from numeric eigenvalues. Integer
/// eigenvalues and conjugate pairs (integer sum and product) are detected
/// within kIntegralityTolerance. When `exact` is given, every detected
/// linear or quadratic factor must divide it, which rules out coincidences.
QuadraticStructure quadratic_structure(const std::vector<double>& thetas, const IntPoly* exact = nullptr);

/// Smallest t > 0 with t (theta_0 - theta_r) = k_r pi and k_r = (1 - sigma_r)/2 mod 2
/// for every r, or nullopt. sigma is renormalised so that sigma_0 = +1.
/// Throws std::invalid_argument on length mismatch.
std::optional<double> min_pst_time(const std::vector<double>& thetas, const std::vector<int>& sigmas);

struct PstCertificate {
    bool success = false;
    std::optional<PstFailure> failure;
    long alpha = 0;
    long delta = 1;
    std::vector<long> betas;
    long g = 0;
    std::vector<int> sigmas;
    std::vector<long> ks;
    /// Support of a, descending.
    std::vector<double> eigenvalues;
    double pst_time = 0.0;
    double fidelity_at_time = 0.0;
    /// pi / (g sqrt(delta)), reported for comparison only.
    double closed_form_time = 0.0;
    bool closed_form_matches = false;
};

double evolve_fidelity(const SpectralDecomposition& dec, Vertex a, Vertex b, double t);
double evolve_fidelity(const Graph& g, Vertex a, Vertex b, double t);

/// Throws CrossCheckError if a success does not reach fidelity 1 - 1e-9.
/// `grouping_tolerance` is forwarded to decompose.
PstCertificate pst_certificate(const Graph& g, Vertex a, Vertex b,
                               std::optional<double> grouping_tolerance = std::nullopt);

struct FidelityScan {
    double time = 0.0;
    double fidelity = 0.0;
};

/// Maximum of the fidelity on the grid t_i = i t_max / steps, refined by a
/// golden-section search over the neighbouring grid cells.
FidelityScan fidelity_scan(const Graph& g, Vertex a, Vertex b, double t_max, std::size_t steps);

}  // namespace qwalk
