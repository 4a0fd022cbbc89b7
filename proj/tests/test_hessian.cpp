#include "fdconvex/hessian.hpp"

#include <doctest.h>

#include <vector>

using namespace fdconvex;

namespace {

std::vector<Multigraph> graphs_up_to(int max_edges)
{
  std::vector<Multigraph> out;
  for (int m = 1; m <= max_edges; ++m)
    for (auto& g : enumerate_multigraphs(m)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("simplex points")
{
  CHECK_THROWS(SimplexPoint(3, {frac(1, 2), frac(1, 2)}));
  CHECK_THROWS(SimplexPoint(3, {frac(1, 2), frac(1, 2), frac(1, 2)}));
  CHECK_THROWS(SimplexPoint(3, {frac(3, 2), frac(-1, 2), Rational(0)}));
  const SimplexPoint p = SimplexPoint::random_interior(5, 3);
  Rational sum = 0;
  for (const auto& c : p.coordinates()) {
    CHECK(c > 0);
    sum += c;
  }
  CHECK(sum == 1);
  CHECK(SimplexPoint::random_interior(5, 3).coordinates() == p.coordinates());
}

TEST_CASE("fd_eval examples")
{
  CHECK(fd_eval(2, 2, SimplexPoint(2, {Rational(1)})) == frac(1, 4));
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const Edge& e : all_edges(n)) {
        Rational expected = 1;
        for (int i = 0; i < d; ++i) expected /= 2;
        CHECK(fd_eval(n, d, SimplexPoint::vertex(n, e)) == expected);
      }
  CHECK_THROWS_AS(fd_eval(8, 5, SimplexPoint::uniform(8)), std::invalid_argument);
}

TEST_CASE("fd_eval agrees with the monomial expansion from ordering sums")
{
  for (auto [n, d, seed] : {std::tuple{3, 2, 0}, {3, 3, 1}, {4, 3, 2}, {4, 4, 3}}) {
    const SimplexPoint x = seed == 0 ? SimplexPoint::uniform(n) : SimplexPoint::random_interior(n, static_cast<std::uint64_t>(seed));
    const auto edges = all_edges(n);
    Rational total = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    // nondecreasing index sequences enumerate monomials once
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t start) {
      if (pos == pick.size()) {
        ExponentVector alpha;
        Rational mono = 1;
        for (std::size_t i : pick) {
          alpha.add(edges[i]);
          mono *= x.coordinates()[i];
        }
        total += b_alpha_bruteforce(alpha) * mono;
        return;
      }
      for (std::size_t i = start; i < edges.size(); ++i) {
        pick[pos] = i;
        walk(pos + 1, i);
      }
    };
    walk(0, 0);
    CHECK(fd_eval(n, d, x) == total);
    CHECK(fd_eval(n, d, x.to_double()) == doctest::Approx(total.get_d()).epsilon(1e-12));
  }
}

TEST_CASE("qgamma_entry examples")
{
  CoeffCache cache;
  const Multigraph g = parse_multigraph("1-2");
  CHECK(qgamma_entry(g, 6, Edge(1, 2), Edge(1, 2), true, cache) == frac(3, 4));
  CHECK(qgamma_entry(g, 6, Edge(1, 3), Edge(1, 4), true, cache) == frac(1, 4));
  CHECK(qgamma_entry(g, 6, Edge(1, 3), Edge(1, 3), true, cache) == frac(7, 18));
  CHECK_THROWS_AS(qgamma_entry(g, 4, Edge(1, 5), Edge(1, 2), true, cache), std::out_of_range);

  const Multigraph dbl = parse_multigraph("1-2:2");
  CHECK(qgamma_entry(dbl, 6, Edge(1, 2), Edge(1, 2), true, cache) == 2 * qgamma_entry(dbl, 6, Edge(1, 2), Edge(1, 2), false, cache));
}

TEST_CASE("entries for a single edge follow the closed form for one-edge gamma")
{
  // 1/|e1 ∪ i ∪ j| (1/|e1 ∪ i| + 1/|e1 ∪ j| + 1/|i ∪ j|)
  CoeffCache cache;
  const Multigraph g = parse_multigraph("1-2");
  const Edge e1(1, 2);
  auto u = [](std::initializer_list<Edge> es) { return Rational(1, union_size(std::vector<Edge>(es))); };
  for (const Edge& i : all_edges(6))
    for (const Edge& j : all_edges(6)) {
      const Rational expected = u({e1, i, j}) * (u({e1, i}) + u({e1, j}) + u({i, j}));
      CHECK(qgamma_entry(g, 6, i, j, true, cache) == expected);
    }
}

TEST_CASE("qgamma_matrix matches entries and restricts to principal submatrices")
{
  CoeffCache cache;
  for (const Multigraph& g : graphs_up_to(3)) {
    const int top = std::min(g.k() + 3, 9);
    const RationalSymMatrix big = qgamma_matrix(g, top, false, cache);
    CHECK(big(0, 0) == qgamma_entry(g, top, Edge(1, 2), Edge(1, 2), false, cache));
    for (int n = std::max(g.k(), 2); n < top; ++n) {
      std::vector<std::size_t> rows;
      for (const Edge& e : all_edges(n)) rows.push_back(lex_index(e, top));
      CHECK(big.principal_submatrix(rows) == qgamma_matrix(g, n, false, cache));
    }
  }
  CHECK_THROWS(qgamma_matrix(parse_multigraph("1-2"), 13, true, cache));
}

TEST_CASE("mgamma_rgamma examples")
{
  CoeffCache cache;
  const auto [m, r] = mgamma_rgamma(parse_exponent_vector("1-2"), 4, cache);
  CHECK(m(lex_index(Edge(1, 3), 4), lex_index(Edge(2, 4), 4)) == frac(1, 4));
  CHECK(r(0, 0) == 1);
}

TEST_CASE("Hadamard decomposition for every multigraph with <= 3 edges and n <= 7")
{
  CoeffCache cache;
  for (const Multigraph& g : graphs_up_to(3)) {
    const ExponentVector gamma = g.exponent();
    for (int n = std::max(g.k(), 2); n <= 7; ++n) {
      const auto [m, r] = mgamma_rgamma(gamma, n, cache);
      RationalSymMatrix inner = r;
      for (const auto& term : gamma.terms()) inner = inner + qgamma_matrix(gamma.minus(term.first), n, false, cache);
      CHECK(hadamard(m, inner) == qgamma_matrix(gamma, n, false, cache));
    }
  }
}

TEST_CASE("entries are invariant under the generators of S_{n-k}")
{
  CoeffCache cache;
  for (const Multigraph& g : graphs_up_to(3)) {
    const int k = g.k();
    for (int n = k + 2; n <= 8; ++n) {
      std::vector<int> tail;
      for (int v = k + 1; v <= n; ++v) tail.push_back(v);
      const Permutation gens[] = {Permutation::transposition(n, k + 1, k + 2), Permutation::cycle(n, tail)};
      const auto edges = all_edges(n);
      for (const Permutation& s : gens) {
        for (std::size_t i = 0; i < edges.size(); ++i)
          for (std::size_t j = i; j < edges.size(); ++j)
            CHECK(qgamma_entry(g, n, apply_perm(s, edges[i]), apply_perm(s, edges[j]), true, cache) ==
                  qgamma_entry(g, n, edges[i], edges[j], true, cache));
      }
    }
  }
}

TEST_CASE("degree-2 Hessian is constant and exact")
{
  CoeffCache cache;
  const SimplexPoint x = SimplexPoint::uniform(3);
  const RationalSymMatrix h = hessian_from_coefficients(3, 2, x, cache);
  const auto edges = all_edges(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ExponentVector alpha;
      alpha.add(edges[i]);
      alpha.add(edges[j]);
      CHECK(h(i, j) == b_hat(alpha, cache));
    }
  CHECK(hessian_fd_check(3, 2, x, 1e-4, cache) <= 1e-6);
}

TEST_CASE("finite differences match the coefficient Hessian")
{
  CoeffCache cache;
  constexpr double kStep = 1e-4;
  constexpr double kTolerance = 1e-6;
  CHECK(hessian_fd_check(3, 3, SimplexPoint::uniform(3), kStep, cache) <= kTolerance);
  for (auto [n, d] : {std::pair{3, 3}, {4, 3}, {4, 4}})
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(hessian_fd_check(n, d, SimplexPoint::random_interior(n, seed), kStep, cache) <= kTolerance);
}
