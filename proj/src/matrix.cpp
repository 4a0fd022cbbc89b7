#include "fdconvex/matrix.hpp"

#include <stdexcept>

namespace fdconvex {

RationalSymMatrix::RationalSymMatrix(std::size_t order) : order_(order), data_(order * order) {}

RationalSymMatrix RationalSymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
  RationalSymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j < i && rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
      m.data_[i * m.order_ + j] = rows[i][j];
    }
  }
  return m;
}

RationalSymMatrix RationalSymMatrix::identity(std::size_t order)
{
  RationalSymMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1);
  return m;
}

void RationalSymMatrix::set(std::size_t i, std::size_t j, const Rational& value)
{
  if (i >= order_ || j >= order_) throw std::out_of_range("matrix index out of range");
  data_[i * order_ + j] = value;
  data_[j * order_ + i] = value;
}

RationalSymMatrix RationalSymMatrix::scaled(const Rational& factor) const
{
  RationalSymMatrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

RationalSymMatrix RationalSymMatrix::principal_submatrix(std::span<const std::size_t> indices) const
{
  RationalSymMatrix out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i; j < indices.size(); ++j) out.set(i, j, (*this)(indices[i], indices[j]));
  return out;
}

std::vector<double> RationalSymMatrix::to_double() const
{
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i].get_d();
  return out;
}

Rational RationalSymMatrix::max_abs() const
{
  Rational best = 0;
  for (const auto& v : data_)
    if (abs(v) > best) best = abs(v);
  return best;
}

Rational RationalSymMatrix::quadratic_form(std::span<const Rational> v) const
{
  if (v.size() != order_) throw std::invalid_argument("vector length does not match matrix order");
  Rational total = 0;
  for (std::size_t i = 0; i < order_; ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < order_; ++j)
      if (v[j] != 0) row += data_[i * order_ + j] * v[j];
    total += v[i] * row;
  }
  return total;
}

RationalSymMatrix hadamard(const RationalSymMatrix& a, const RationalSymMatrix& b)
{
  if (a.order() != b.order()) throw std::invalid_argument("hadamard: order mismatch");
  RationalSymMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i; j < a.order(); ++j) out.set(i, j, a(i, j) * b(i, j));
  return out;
}

RationalSymMatrix operator+(const RationalSymMatrix& a, const RationalSymMatrix& b)
{
  if (a.order() != b.order()) throw std::invalid_argument("matrix sum: order mismatch");
  RationalSymMatrix out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i; j < a.order(); ++j) out.set(i, j, a(i, j) + b(i, j));
  return out;
}

}  // namespace fdconvex
