#include "fdconvex/hessian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fdconvex {

SimplexPoint::SimplexPoint(int n, std::vector<Rational> coordinates) : n_(n), coords_(std::move(coordinates))
{
  if (coords_.size() != choose2(static_cast<std::size_t>(n))) {
    throw std::invalid_argument("simplex point needs C(n,2) coordinates");
  }
  Rational sum = 0;
  for (const auto& c : coords_) {
    if (c < 0) throw std::invalid_argument("simplex coordinates must be nonnegative");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("simplex coordinates must sum to 1");
}

SimplexPoint SimplexPoint::uniform(int n)
{
  const std::size_t m = choose2(static_cast<std::size_t>(n));
  return SimplexPoint(n, std::vector<Rational>(m, frac(1, static_cast<long>(m))));
}

SimplexPoint SimplexPoint::vertex(int n, const Edge& e)
{
  std::vector<Rational> coords(choose2(static_cast<std::size_t>(n)), Rational(0));
  coords[lex_index(e, n)] = 1;
  return SimplexPoint(n, std::move(coords));
}

SimplexPoint SimplexPoint::random_interior(int n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 20);
  const std::size_t m = choose2(static_cast<std::size_t>(n));
  std::vector<int> w(m);
  long total = 0;
  for (auto& v : w) {
    v = weight(rng);
    total += v;
  }
  std::vector<Rational> coords;
  coords.reserve(m);
  for (int v : w) coords.push_back(frac(v, total));
  return SimplexPoint(n, std::move(coords));
}

std::vector<double> SimplexPoint::to_double() const
{
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.get_d());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kTupleLimit = 1e7;

void check_tuple_budget(int n, int d)
{
  if (n < 2 || d < 1) throw std::invalid_argument("fd_eval needs n >= 2 and d >= 1");
  if (n > 63) throw std::invalid_argument("fd_eval instance too large");
  if (std::pow(static_cast<double>(choose2(static_cast<std::size_t>(n))), d) > kTupleLimit) {
    throw std::invalid_argument("fd_eval instance too large for the tuple sum");
  }
}

template <class T>
class TupleSum {
public:
  TupleSum(int n, int d, std::span<const T> x) : d_(d), x_(x)
  {
    for (const Edge& e : all_edges(n)) masks_.push_back((std::uint64_t{1} << (e.a() - 1)) | (std::uint64_t{1} << (e.b() - 1)));
  }

  T run()
  {
    T total = 0;
    descend(0, 0, T(1), total);
    return total;
  }

private:
  void descend(int depth, std::uint64_t covered, const T& prefix, T& total) const
  {
    for (std::size_t idx = 0; idx < masks_.size(); ++idx) {
      const std::uint64_t next = covered | masks_[idx];
      T term = prefix * x_[idx];
      term /= static_cast<long>(std::popcount(next));
      if (depth + 1 == d_) {
        total += term;
      } else {
        descend(depth + 1, next, term, total);
      }
    }
  }

  int d_;
  std::span<const T> x_;
  std::vector<std::uint64_t> masks_;
};

void check_edge(const Edge& e, int n)
{
  if (e.b() > n) throw std::out_of_range("edge " + to_string(e) + " outside [" + std::to_string(n) + "]");
}

void check_gamma(const ExponentVector& gamma, int n)
{
  if (gamma.max_vertex() > n) throw std::out_of_range("exponent vector support exceeds [n]");
}

// All multisets of `size` edge indices from [0, m), as nondecreasing sequences.
void for_each_multiset(std::size_t m, int size, std::vector<std::size_t>& current, std::size_t start,
                       const auto& visit)
{
  if (static_cast<int>(current.size()) == size) {
    visit(current);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    current.push_back(i);
    for_each_multiset(m, size, current, i, visit);
    current.pop_back();
  }
}

}  // namespace

Rational fd_eval(int n, int d, const SimplexPoint& x)
{
  check_tuple_budget(n, d);
  if (x.n() != n) throw std::invalid_argument("simplex point lives on a different K_n");
  return TupleSum<Rational>(n, d, x.coordinates()).run();
}

double fd_eval(int n, int d, std::span<const double> x)
{
  check_tuple_budget(n, d);
  if (x.size() != choose2(static_cast<std::size_t>(n))) throw std::invalid_argument("point needs C(n,2) coordinates");
  return TupleSum<double>(n, d, x).run();
}

Rational qgamma_entry(const ExponentVector& gamma, int n, const Edge& ei, const Edge& ej, bool scaled,
                      CoeffCache& cache)
{
  check_edge(ei, n);
  check_edge(ej, n);
  check_gamma(gamma, n);
  ExponentVector alpha = gamma;
  alpha.add(ei);
  alpha.add(ej);
  Rational value = b_hat(alpha, cache);
  if (!scaled) value /= Rational(exponent_factorial(gamma));
  return value;
}

Rational qgamma_entry(const Multigraph& g, int n, const Edge& ei, const Edge& ej, bool scaled,
                      CoeffCache& cache)
{
  if (n < g.k()) throw std::invalid_argument("n must be at least k");
  return qgamma_entry(g.exponent(), n, ei, ej, scaled, cache);
}

namespace {
constexpr int kDenseLimit = 12;
}

RationalSymMatrix qgamma_matrix(const ExponentVector& gamma, int n, bool scaled, CoeffCache& cache)
{
  if (n > kDenseLimit) throw std::invalid_argument("qgamma_matrix limited to n <= 12");
  check_gamma(gamma, n);
  const auto edges = all_edges(n);
  RationalSymMatrix out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i; j < edges.size(); ++j) out.set(i, j, qgamma_entry(gamma, n, edges[i], edges[j], scaled, cache));
  return out;
}

RationalSymMatrix qgamma_matrix(const Multigraph& g, int n, bool scaled, CoeffCache& cache)
{
  if (n < g.k()) throw std::invalid_argument("n must be at least k");
  return qgamma_matrix(g.exponent(), n, scaled, cache);
}

std::pair<RationalSymMatrix, RationalSymMatrix> mgamma_rgamma(const ExponentVector& gamma, int n,
                                                              CoeffCache& cache)
{
  if (n > kDenseLimit) throw std::invalid_argument("mgamma_rgamma limited to n <= 12");
  check_gamma(gamma, n);
  const auto edges = all_edges(n);
  const Rational inv_fact = Rational(1) / Rational(exponent_factorial(gamma));
  std::vector<Rational> single(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) single[i] = b_hat(gamma.plus(edges[i]), cache);

  RationalSymMatrix m(edges.size()), r(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i; j < edges.size(); ++j) {
      ExponentVector alpha = gamma;
      alpha.add(edges[i]);
      alpha.add(edges[j]);
      m.set(i, j, c_hat(alpha));
      r.set(i, j, (single[i] + single[j]) * inv_fact);
    }
  }
  return {std::move(m), std::move(r)};
}

RationalSymMatrix hessian_from_coefficients(int n, int d, const SimplexPoint& x, CoeffCache& cache)
{
  if (d < 2) throw std::invalid_argument("the Hessian needs d >= 2");
  if (x.n() != n) throw std::invalid_argument("simplex point lives on a different K_n");
  const auto edges = all_edges(n);
  RationalSymMatrix total(edges.size());
  std::vector<std::size_t> current;
  for_each_multiset(edges.size(), d - 2, current, 0, [&](const std::vector<std::size_t>& picks) {
    ExponentVector gamma;
    Rational monomial = 1;
    for (std::size_t idx : picks) {
      gamma.add(edges[idx]);
      monomial *= x.coordinates()[idx];
    }
    if (monomial == 0) return;
    const Rational inv_fact = Rational(1) / Rational(exponent_factorial(gamma));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i; j < edges.size(); ++j) {
        ExponentVector alpha = gamma;
        alpha.add(edges[i]);
        alpha.add(edges[j]);
        total.set(i, j, total(i, j) + monomial * b_hat(alpha, cache) * inv_fact);
      }
    }
  });
  return total;
}

double hessian_fd_check(int n, int d, const SimplexPoint& x, double h, CoeffCache& cache)
{
  check_tuple_budget(n, d);
  for (const auto& c : x.coordinates())
    if (c <= 0) throw std::invalid_argument("hessian_fd_check needs a strictly positive point");
  if (!(h > 0)) throw std::invalid_argument("step must be positive");

  const RationalSymMatrix analytic = hessian_from_coefficients(n, d, x, cache);
  const std::vector<double> base = x.to_double();
  const std::size_t m = base.size();

  auto f_at = [&](std::size_t i, double si, std::size_t j, double sj) {
    std::vector<double> p = base;
    p[i] += si;
    p[j] += sj;
    return fd_eval(n, d, p);
  };

  double worst = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double second = (f_at(i, h, j, h) - f_at(i, h, j, -h) - f_at(i, -h, j, h) + f_at(i, -h, j, -h)) / (4 * h * h);
      worst = std::max(worst, std::abs(second - analytic(i, j).get_d()));
    }
  }
  return worst;
}

}  // namespace fdconvex
