#pragma once

#include "fdconvex/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fdconvex {

enum class PsdVerdict { PSD, NOT_PSD };

const char* to_string(PsdVerdict v);

/// Exact LDLᵀ outcome for a symmetric rational matrix M.
///
/// `permutation[s]` is the row of M eliminated at step s, so with P the
/// matching permutation matrix P M Pᵀ = L D Lᵀ on the completed steps.
/// On NOT_PSD the witness is expressed in the original coordinates of M and
/// witness_value = witnessᵀ M witness < 0 has been re-evaluated exactly.
struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::PSD;
  std::vector<Rational> pivots;
  std::vector<std::size_t> permutation;
  /// Unit lower-triangular factor, row-major, order × order. Complete only
  /// on PSD.
  std::vector<Rational> lower;
  std::vector<Rational> witness;
  Rational witness_value;
  /// Set when the natural-order factorization hit a zero pivot with a
  /// nonzero remainder and the pivoted one produced this certificate.
  bool pivoted_fallback = false;

  std::optional<Rational> min_pivot() const;
};

/// LDLᵀ without row exchanges.
PsdCertificate ldlt_natural(const RationalSymMatrix& m);
/// LDLᵀ pivoting on the largest remaining diagonal entry.
PsdCertificate ldlt_pivoted(const RationalSymMatrix& m);

/// L·D·Lᵀ undone through the permutation, for checking a PSD certificate.
RationalSymMatrix reconstruct(const PsdCertificate& cert);

struct EigenReport {
  std::vector<double> eigenvalues;  // ascending
  double min_eigenvalue = 0;
  double offdiag_residual = 0;
  int sweeps = 0;
  bool converged = true;
};

/// Cyclic Jacobi on the double image of m. Order at most 500; stops when
/// the off-diagonal Frobenius norm is at most 1e-13 × max |m_ij|, or after
/// 100 sweeps with converged = false.
EigenReport jacobi_eigen(const RationalSymMatrix& m);
EigenReport jacobi_eigen(std::vector<double> a, std::size_t order);

}  // namespace fdconvex
