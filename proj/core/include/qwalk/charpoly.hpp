#pragma once

#include <span>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/polynomial.hpp"
#include "qwalk/rational_function.hpp"

namespace qwalk {

/// Determinant of a square integer matrix (row-major) by fraction-free
/// Bareiss elimination with row pivoting. The empty matrix has determinant 1.
mpz_class bareiss_determinant(std::vector<mpz_class> m, std::size_t n);

/// phi(G; t) = det(tI - A), exact. Requires integer weights (loops allowed);
/// throws std::invalid_argument otherwise.
///
/// Evaluates det(kI - A) at k = 0..n with Bareiss and interpolates through
/// those n + 1 points with exact rational Newton differences.
IntPoly charpoly(const Graph& g);

/// Characteristic polynomial of the subgraph induced on V \ removed.
/// Returns 1 when every vertex is removed (phi of the empty graph).
IntPoly charpoly_deleted(const Graph& g, std::span<const Vertex> removed);
IntPoly charpoly_deleted(const Graph& g, std::initializer_list<Vertex> removed);

/// phi(Y) and phi(Y \ v): the pair every cut-vertex formula consumes.
struct RootedCharpolys {
    IntPoly whole;
    IntPoly deleted;
};
RootedCharpolys rooted_charpolys(const Graph& y, Vertex v);

/// Characteristic polynomial of the 1-sum of Y1 and Y2 at the identified vertex.
IntPoly one_sum_charpoly(const IntPoly& phi_y1, const IntPoly& phi_y1_del, const IntPoly& phi_y2,
                         const IntPoly& phi_y2_del);

/// phi(Z) for Y1 - a ... b - Y2 joined by a single edge.
IntPoly bridge_charpoly_p2(const IntPoly& phi_y1, const IntPoly& phi_y1_del_a, const IntPoly& phi_y2,
                           const IntPoly& phi_y2_del_b);
/// phi(Z) for a and b joined through one middle vertex.
IntPoly bridge_charpoly_p3(const IntPoly& phi_y1, const IntPoly& phi_y1_del_a, const IntPoly& phi_y2,
                           const IntPoly& phi_y2_del_b);

/// Characteristic polynomial of A(Y) + sign * |a><a|, sign in {+1, -1}.
IntPoly loop_adjusted_charpoly(const IntPoly& phi_y, const IntPoly& phi_y_del_a, int sign);

/// t*phi(Y) - 2*phi(Y \ a): characteristic polynomial of Y with a pendant
/// vertex hung from a on an edge of weight sqrt(2).
IntPoly pendant_sqrt2_charpoly(const IntPoly& phi_y, const IntPoly& phi_y_del_a);

/// Sum over simple a-b paths P of w(P) * phi(G \ P), where w(P) is the
/// product of edge weights along P (1 for unweighted graphs). Equals the
/// (a, b) entry of adj(tI - A).
IntPoly path_sum_poly(const Graph& g, Vertex a, Vertex b);

/// phi(G \ a) / phi(G): the closed-walk generating function at a after the
/// substitution x -> 1/t (scaled by 1/t).
RationalFunction walk_gf(const Graph& g, Vertex a);

/// Closed-walk generating function W_a(x) = sum_k (A^k)_aa x^k, as the
/// reduced ratio of reciprocal polynomials rev(phi(G \ a)) / rev(phi(G)).
RationalFunction closed_walk_series(const Graph& g, Vertex a);

/// First-return generating function C_a(x) = 1 - 1/W_a(x)
///   = 1 - rev(phi(G)) / rev(phi(G \ a)), in the walk-counting variable x.
/// Additive over 1-sums at the shared vertex.
RationalFunction return_walk_gf(const Graph& g, Vertex a);

/// First `terms` power-series coefficients of f around 0 (requires f(0) finite).
std::vector<mpq_class> power_series(const RationalFunction& f, std::size_t terms);

/// True when the reduced denominator of num/den is squarefree.
bool poles_simple(const IntPoly& num, const IntPoly& den);

/// phi(Y1 \ a) * phi(Y2) == phi(Y2 \ b) * phi(Y1).
bool walk_equivalent(const IntPoly& phi_y1_del_a, const IntPoly& phi_y1, const IntPoly& phi_y2_del_b,
                     const IntPoly& phi_y2);

/// Real roots of the reduced denominator of num/den (the poles), ascending.
std::vector<double> pole_locations(const IntPoly& num, const IntPoly& den);

}  // namespace qwalk
