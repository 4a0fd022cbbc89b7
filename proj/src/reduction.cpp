#include "fdconvex/reduction.hpp"

#include "fdconvex/hessian.hpp"

#include <stdexcept>

namespace fdconvex {

EntryOracle entry_oracle(const Multigraph& g, CoeffCache& cache, bool scaled)
{
  if (!g.labeled_on_prefix()) throw std::invalid_argument("entry_oracle needs a multigraph labeled on [k]");
  const int n = g.k() + 4;
  return [gamma = g.exponent(), n, scaled, &cache](const Edge& e, const Edge& f) {
    return qgamma_entry(gamma, n, e, f, scaled, cache);
  };
}

ReductionBlocks theorem_blocks_from_oracle(const EntryOracle& a, int k)
{
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  ReductionBlocks out;
  out.k = k;
  const Edge t12(k + 1, k + 2), t13(k + 1, k + 3), t23(k + 2, k + 3), t34(k + 3, k + 4);
  out.classes = {a(t12, t12), a(t12, t13), a(t12, t34)};
  const auto& [x, y, z] = out.classes;
  out.scalar = x - 2 * y + z;

  const auto inner = all_edges(k);
  const std::size_t ne = inner.size();
  const std::size_t ku = static_cast<std::size_t>(k);
  const std::size_t tail1 = ne + ku;

  out.b1 = RationalSymMatrix(ne + ku + 1);
  for (std::size_t p = 0; p < ne; ++p) {
    for (std::size_t q = p; q < ne; ++q) out.b1.set(p, q, a(inner[p], inner[q]));
    for (int j = 1; j <= k; ++j) out.b1.set(p, ne + static_cast<std::size_t>(j - 1), a(inner[p], Edge(j, k + 1)));
    out.b1.set(p, tail1, a(inner[p], t12));
  }
  for (int i = 1; i <= k; ++i) {
    const std::size_t row = ne + static_cast<std::size_t>(i - 1);
    for (int j = 1; j <= k; ++j) {
      const Rational v = a(Edge(i, k + 1), Edge(j, k + 2));
      if (j < i) {
        if (out.b1(row, ne + static_cast<std::size_t>(j - 1)) != v) {
          throw std::logic_error("entry oracle is not invariant under (k+1 k+2)");
        }
        continue;
      }
      out.b1.set(row, ne + static_cast<std::size_t>(j - 1), v);
    }
    out.b1.set(row, tail1, a(Edge(i, k + 1), t23));
  }
  out.b1.set(tail1, tail1, z);

  out.b2 = RationalSymMatrix(ku + 1);
  for (int i = 1; i <= k; ++i) {
    const std::size_t row = static_cast<std::size_t>(i - 1);
    const Edge ei(i, k + 1);
    for (int j = i; j <= k; ++j)
      out.b2.set(row, static_cast<std::size_t>(j - 1), a(ei, Edge(j, k + 1)) - a(ei, Edge(j, k + 2)));
    out.b2.set(row, ku, a(ei, t12) - a(ei, t23));
  }
  out.b2.set(ku, ku, y - z);
  return out;
}

ReductionBlocks theorem_blocks(const Multigraph& g, CoeffCache& cache, bool scaled)
{
  return theorem_blocks_from_oracle(entry_oracle(g, cache, scaled), g.k());
}

Rational blockvalue(const Multigraph& g, CoeffCache& cache)
{
  const EntryOracle a = entry_oracle(g, cache, true);
  const int k = g.k();
  const Edge t12(k + 1, k + 2);
  return a(t12, t12) - 2 * a(t12, Edge(k + 1, k + 3)) + a(t12, Edge(k + 3, k + 4));
}

RationalSymMatrix a4_pattern(const Rational& x, const Rational& y, const Rational& z)
{
  const auto edges = all_edges(4);
  RationalSymMatrix out(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const bool share = e.contains(f.a()) || e.contains(f.b());
      out.set(i, j, i == j ? x : (share ? y : z));
    }
  }
  return out;
}

std::vector<std::pair<Rational, int>> remark_k0_eigen(const Rational& x, const Rational& y, const Rational& z)
{
  return {{x - z, 3}, {x + 4 * y + z, 1}, {x - 2 * y + z, 2}};
}

}  // namespace fdconvex
