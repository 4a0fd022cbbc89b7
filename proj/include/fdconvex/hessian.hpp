#pragma once

#include "fdconvex/coefficients.hpp"
#include "fdconvex/combinatorics.hpp"
#include "fdconvex/matrix.hpp"
#include "fdconvex/multigraph.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fdconvex {

/// Point of the standard simplex over the edges of K_n, coordinates in
/// lexicographic edge order.
class SimplexPoint {
public:
  /// Throws std::invalid_argument on a negative coordinate, a wrong length
  /// or a coordinate sum other than 1.
  SimplexPoint(int n, std::vector<Rational> coordinates);

  static SimplexPoint uniform(int n);
  static SimplexPoint vertex(int n, const Edge& e);
  /// Strictly positive point with small-denominator rational coordinates.
  static SimplexPoint random_interior(int n, std::uint64_t seed);

  int n() const { return n_; }
  const std::vector<Rational>& coordinates() const { return coords_; }
  std::vector<double> to_double() const;

private:
  int n_;
  std::vector<Rational> coords_;
};

/// Tuple-sum evaluation of f_d on K_n, exact. Throws std::invalid_argument
/// when C(n,2)^d exceeds 10^7.
Rational fd_eval(int n, int d, const SimplexPoint& x);
/// Same tuple sum in double precision at an arbitrary point of R^m.
double fd_eval(int n, int d, std::span<const double> x);

/// Entry (ei, ej) of γ!·Q_γ when `scaled`, of Q_γ otherwise, with γ viewed
/// inside K_n. Throws std::out_of_range when an edge leaves [n].
Rational qgamma_entry(const ExponentVector& gamma, int n, const Edge& ei, const Edge& ej, bool scaled,
                      CoeffCache& cache);
Rational qgamma_entry(const Multigraph& g, int n, const Edge& ei, const Edge& ej, bool scaled,
                      CoeffCache& cache);

/// Full C(n,2)-order matrix, rows in lexicographic edge order. n ≤ 12.
RationalSymMatrix qgamma_matrix(const ExponentVector& gamma, int n, bool scaled, CoeffCache& cache);
RationalSymMatrix qgamma_matrix(const Multigraph& g, int n, bool scaled, CoeffCache& cache);

/// (M_γ, R_γ) with M_γ = (ĉ_{γ+v_i+v_j}) and R_γ = (b̂_{γ+v_i} + b̂_{γ+v_j}) / γ!.
std::pair<RationalSymMatrix, RationalSymMatrix> mgamma_rgamma(const ExponentVector& gamma, int n,
                                                              CoeffCache& cache);

/// Σ_{|γ| = d-2} x^γ Q_γ, exact.
RationalSymMatrix hessian_from_coefficients(int n, int d, const SimplexPoint& x, CoeffCache& cache);

/// Largest |central second difference of f_d - Σ_γ x^γ Q_γ| over all entries,
/// with step h. Requires x strictly positive and fd_eval feasible at (n, d).
double hessian_fd_check(int n, int d, const SimplexPoint& x, double h, CoeffCache& cache);

}  // namespace fdconvex
