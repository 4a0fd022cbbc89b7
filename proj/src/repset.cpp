#include "fdconvex/repset.hpp"

#include <numeric>
#include <stdexcept>

namespace fdconvex {

void SparseVector::add(const Edge& e, const Rational& value)
{
  auto [it, inserted] = entries_.try_emplace(e, value);
  if (!inserted) it->second += value;
  if (it->second == 0) entries_.erase(it);
}

Rational SparseVector::at(const Edge& e) const
{
  auto it = entries_.find(e);
  return it == entries_.end() ? Rational(0) : it->second;
}

const std::vector<SparseVector>& RepresentativeSet::family(int i) const
{
  switch (i) {
    case 1: return u1;
    case 2: return u2;
    case 3: return u3;
    default: throw std::out_of_range("representative families are numbered 1..3");
  }
}

namespace {

void require_tail(int k, int n)
{
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (n < k + 4) throw std::invalid_argument("need n >= k + 4");
}

}  // namespace

RepresentativeSet representative_vectors(int k, int n)
{
  require_tail(k, n);
  RepresentativeSet set;
  set.k = k;
  set.n = n;

  for (const Edge& e : all_edges(k)) {
    SparseVector u;
    u.add(e, 1);
    set.u1.push_back(std::move(u));
  }
  for (int j = 1; j <= k; ++j) {
    SparseVector u;
    for (int i = k + 1; i <= n; ++i) u.add(Edge(j, i), 1);
    set.u1.push_back(std::move(u));
  }
  {
    SparseVector u;
    for (int i = k + 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) u.add(Edge(i, j), 1);
    set.u1.push_back(std::move(u));
  }

  for (int j = 1; j <= k; ++j) {
    SparseVector u;
    u.add(Edge(j, k + 1), 1);
    u.add(Edge(j, k + 2), -1);
    set.u2.push_back(std::move(u));
  }
  {
    SparseVector u;
    for (int i = k + 3; i <= n; ++i) {
      u.add(Edge(k + 1, i), 1);
      u.add(Edge(k + 2, i), -1);
    }
    set.u2.push_back(std::move(u));
  }

  SparseVector u3;
  u3.add(Edge(k + 1, k + 2), 1);
  u3.add(Edge(k + 1, k + 3), -1);
  u3.add(Edge(k + 2, k + 4), -1);
  u3.add(Edge(k + 3, k + 4), 1);
  set.u3.push_back(std::move(u3));
  return set;
}

RationalSymMatrix compress(const RationalSymMatrix& a, int n, const std::vector<SparseVector>& family)
{
  if (a.order() != choose2(static_cast<std::size_t>(n))) {
    throw std::invalid_argument("compress: matrix order is not C(n,2)");
  }
  RationalSymMatrix out(family.size());
  for (std::size_t p = 0; p < family.size(); ++p) {
    for (std::size_t q = p; q < family.size(); ++q) {
      Rational total = 0;
      for (const auto& [e, ue] : family[p].entries()) {
        const std::size_t row = lex_index(e, n);
        for (const auto& [f, uf] : family[q].entries()) total += ue * a(row, lex_index(f, n)) * uf;
      }
      out.set(p, q, total);
    }
  }
  return out;
}

std::array<RationalSymMatrix, 3> block_formulas(const EntryOracle& a, int k, int n)
{
  require_tail(k, n);
  const long tail = n - k;
  const Rational pairs = frac(tail * (tail - 1), 2);
  const Rational pairs_rest = frac((tail - 2) * (tail - 3), 2);
  const Edge t12(k + 1, k + 2), t13(k + 1, k + 3), t34(k + 3, k + 4);
  const Rational x = a(t12, t12), y = a(t12, t13), z = a(t12, t34);

  const auto inner = all_edges(k);
  const std::size_t ne = inner.size();
  const std::size_t ku = static_cast<std::size_t>(k);

  RationalSymMatrix b1(ne + ku + 1);
  for (std::size_t p = 0; p < ne; ++p) {
    for (std::size_t q = p; q < ne; ++q) b1.set(p, q, a(inner[p], inner[q]));
    for (int j = 1; j <= k; ++j) b1.set(p, ne + static_cast<std::size_t>(j - 1), tail * a(inner[p], Edge(j, k + 1)));
    b1.set(p, ne + ku, pairs * a(inner[p], t12));
  }
  for (int i = 1; i <= k; ++i) {
    const std::size_t row = ne + static_cast<std::size_t>(i - 1);
    for (int j = i; j <= k; ++j) {
      Rational v = a(Edge(i, k + 1), Edge(j, k + 1)) + (tail - 1) * a(Edge(i, k + 1), Edge(j, k + 2));
      b1.set(row, ne + static_cast<std::size_t>(j - 1), tail * v);
    }
    Rational v = 2 * a(Edge(i, k + 1), t12) + (tail - 2) * a(Edge(i, k + 1), Edge(k + 2, k + 3));
    b1.set(row, ne + ku, pairs * v);
  }
  b1.set(ne + ku, ne + ku, pairs * (x + 2 * (tail - 2) * y + pairs_rest * z));

  RationalSymMatrix b2(ku + 1);
  for (int i = 1; i <= k; ++i) {
    const std::size_t row = static_cast<std::size_t>(i - 1);
    for (int j = i; j <= k; ++j) {
      b2.set(row, static_cast<std::size_t>(j - 1),
             2 * (a(Edge(i, k + 1), Edge(j, k + 1)) - a(Edge(i, k + 1), Edge(j, k + 2))));
    }
    b2.set(row, ku, 2 * (tail - 2) * (a(Edge(i, k + 1), t12) - a(Edge(i, k + 1), Edge(k + 2, k + 3))));
  }
  b2.set(ku, ku, 2 * (tail - 2) * (x + (tail - 4) * y - (tail - 3) * z));

  RationalSymMatrix b3(1);
  b3.set(0, 0, 4 * (x - 2 * y + z));
  return {std::move(b1), std::move(b2), std::move(b3)};
}

std::int64_t orbit_count_formula(int k)
{
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::int64_t kk = k;
  const std::int64_t c = kk * (kk - 1) / 2;
  return 3 + 4 * kk + 2 * kk * kk + c * (c + 2 * kk + 2);
}

std::int64_t representative_square_sum(int k)
{
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const std::int64_t kk = k;
  const std::int64_t m1 = kk * (kk - 1) / 2 + kk + 1;
  const std::int64_t m2 = kk + 1;
  return m1 * m1 + m2 * m2 + 1;
}

std::int64_t decomposition_dimension(int k, int n)
{
  require_tail(k, n);
  const std::int64_t kk = k, tail = n - k;
  return (kk * (kk - 1) / 2 + kk + 1) + (tail - 1) * (kk + 1) + (tail * (tail - 1) / 2 - tail);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v)
{
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::int64_t orbit_count_bruteforce(int k, int n)
{
  require_tail(k, n);
  const auto edges = all_edges(n);
  const std::size_t m = edges.size();
  if (m * m > 1'000'000) throw std::invalid_argument("orbit_count_bruteforce: C(n,2)^2 exceeds 10^6");

  std::vector<int> cycle(static_cast<std::size_t>(n - k));
  std::iota(cycle.begin(), cycle.end(), k + 1);
  const Permutation generators[] = {Permutation::transposition(n, k + 1, k + 2), Permutation::cycle(n, cycle)};

  std::vector<std::size_t> parent(m * m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::int64_t components = static_cast<std::int64_t>(m * m);
  for (const Permutation& g : generators) {
    std::vector<std::size_t> image(m);
    for (std::size_t i = 0; i < m; ++i) image[i] = lex_index(apply_perm(g, edges[i]), n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t r1 = find_root(parent, i * m + j);
        std::size_t r2 = find_root(parent, image[i] * m + image[j]);
        if (r1 != r2) {
          parent[r1] = r2;
          --components;
        }
      }
    }
  }
  return components;
}

}  // namespace fdconvex
