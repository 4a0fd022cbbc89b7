#pragma once

#include "fdconvex/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fdconvex {

/// Dense square matrix of rationals with M(i, j) == M(j, i) maintained by
/// every mutator.
class RationalSymMatrix {
public:
  RationalSymMatrix() = default;
  explicit RationalSymMatrix(std::size_t order);
  /// Throws std::invalid_argument if `rows` is ragged or not symmetric.
  static RationalSymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalSymMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  /// Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& value);

  RationalSymMatrix scaled(const Rational& factor) const;
  RationalSymMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  /// Row-major double image.
  std::vector<double> to_double() const;
  Rational max_abs() const;
  /// vᵀ M v.
  Rational quadratic_form(std::span<const Rational> v) const;

  friend bool operator==(const RationalSymMatrix&, const RationalSymMatrix&) = default;

private:
  std::size_t order_ = 0;
  std::vector<Rational> data_;
};

/// Entrywise (Hadamard) product. Throws on an order mismatch.
RationalSymMatrix hadamard(const RationalSymMatrix& a, const RationalSymMatrix& b);
RationalSymMatrix operator+(const RationalSymMatrix& a, const RationalSymMatrix& b);

}  // namespace fdconvex
