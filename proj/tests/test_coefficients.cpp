#include "fdconvex/coefficients.hpp"
#include "fdconvex/multigraph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

using namespace fdconvex;

TEST_CASE("c_hat")
{
  CHECK(c_hat(ExponentVector{{Edge(1, 2), 1}}) == frac(1, 2));
  CHECK(c_hat(ExponentVector{{Edge(1, 2), 1}, {Edge(1, 3), 1}}) == frac(1, 3));
  CHECK(c_hat(ExponentVector{{Edge(1, 2), 2}, {Edge(3, 4), 1}}) == frac(1, 4));
  CHECK_THROWS_AS(c_hat(ExponentVector{}), std::invalid_argument);
}

TEST_CASE("b_hat small values")
{
  CoeffCache cache;
  CHECK(b_hat(ExponentVector{{Edge(1, 2), 1}}, cache) == frac(1, 2));
  CHECK(b_hat(ExponentVector{{Edge(1, 2), 1}, {Edge(1, 3), 1}}, cache) == frac(1, 3));
  CHECK(b_hat(ExponentVector{{Edge(1, 2), 2}}, cache) == frac(1, 2));
  CHECK(b_hat(ExponentVector{{Edge(1, 2), 3}}, cache) == frac(3, 4));
  CHECK_THROWS_AS(b_hat(ExponentVector{}, cache), std::invalid_argument);
}

TEST_CASE("b_alpha_bruteforce small values")
{
  CHECK(b_alpha_bruteforce(ExponentVector{{Edge(1, 2), 1}}) == frac(1, 2));
  CHECK(b_alpha_bruteforce(ExponentVector{{Edge(1, 2), 2}}) == frac(1, 4));
  CHECK(b_alpha_bruteforce(ExponentVector{{Edge(1, 2), 1}, {Edge(1, 3), 1}}) == frac(1, 3));
  CHECK_THROWS(b_alpha_bruteforce(ExponentVector{{Edge(1, 2), 9}}));
}

namespace {

void for_each_multiset(std::size_t m, int size, std::vector<std::size_t>& cur, std::size_t start,
                       const std::function<void(const std::vector<std::size_t>&)>& visit)
{
  if (static_cast<int>(cur.size()) == size) {
    visit(cur);
    return;
  }
  for (std::size_t i = start; i < m; ++i) {
    cur.push_back(i);
    for_each_multiset(m, size, cur, i, visit);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("recurrence agrees with the ordering sum for every alpha of degree <= 5 on K_6")
{
  CoeffCache cache;
  const auto edges = all_edges(6);
  std::size_t checked = 0;
  for (int degree = 1; degree <= 5; ++degree) {
    std::vector<std::size_t> cur;
    for_each_multiset(edges.size(), degree, cur, 0, [&](const std::vector<std::size_t>& pick) {
      ExponentVector alpha;
      for (std::size_t i : pick) alpha.add(edges[i]);
      CHECK(b_hat(alpha, cache) == Rational(exponent_factorial(alpha)) * b_alpha_bruteforce(alpha));
      ++checked;
    });
  }
  CHECK(checked == 15 + 120 + 680 + 3060 + 11628);
}

TEST_CASE("recurrence agrees with the ordering sum at degree 6 on K_6")
{
  // One labeled representative per class plus random relabelings of it.
  CoeffCache cache;
  std::mt19937_64 rng(6);
  for (const Multigraph& g : enumerate_multigraphs(6)) {
    if (g.k() > 6) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> labels{1, 2, 3, 4, 5, 6};
      std::shuffle(labels.begin(), labels.end(), rng);
      ExponentVector alpha;
      for (const Edge& e : g.edges()) alpha.add(Edge(labels[e.a() - 1], labels[e.b() - 1]));
      CHECK(b_hat(alpha, cache) == Rational(exponent_factorial(alpha)) * b_alpha_bruteforce(alpha));
    }
  }
}

TEST_CASE("b_hat matches coefficients read off the expanded tuple sum")
{
  CoeffCache cache;
  for (auto [n, d] : {std::pair{4, 2}, {4, 3}, {4, 4}, {5, 3}, {5, 4}}) {
    const auto edges = all_edges(n);
    for (const auto& [key, coefficient] : oracle::expand_fd(n, d)) {
      ExponentVector alpha;
      for (std::size_t i : key) alpha.add(edges[i]);
      CHECK(b_hat(alpha, cache) == Rational(exponent_factorial(alpha)) * coefficient);
    }
  }
}

TEST_CASE("b_hat is relabeling invariant and positive")
{
  CoeffCache cache;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> vertex(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    ExponentVector alpha;
    const int degree = 1 + trial % 7;
    while (alpha.degree() < degree) {
      int a = vertex(rng), b = vertex(rng);
      if (a != b) alpha.add(Edge(a, b));
    }
    std::vector<int> labels{1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::shuffle(labels.begin(), labels.end(), rng);
    ExponentVector moved;
    for (const auto& [e, count] : alpha.terms()) moved.add(Edge(labels[e.a() - 1], labels[e.b() - 1]), count);
    CoeffCache fresh;
    const Rational v = b_hat(alpha, cache);
    CHECK(v > 0);
    CHECK(b_hat(moved, fresh) == v);
  }
}

TEST_CASE("cached values equal recomputation from scratch")
{
  CoeffCache warm;
  for (const Multigraph& g : enumerate_multigraphs(5)) (void)b_hat(g.exponent(), warm);
  CHECK(warm.size() > 0);
  for (const Multigraph& g : enumerate_multigraphs(5)) {
    CoeffCache cold;
    CHECK(b_hat(g.exponent(), warm) == b_hat(g.exponent(), cold));
  }
}

TEST_CASE("concurrent use of one cache gives the sequential values")
{
  const auto graphs = enumerate_multigraphs(6);
  std::vector<Rational> expected;
  {
    CoeffCache cache;
    for (const auto& g : graphs) expected.push_back(b_hat(g.exponent(), cache));
  }
  CoeffCache shared;
  std::vector<Rational> got(graphs.size());
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < graphs.size(); i += 4) got[i] = b_hat(graphs[i].exponent(), shared);
    });
  }
  for (auto& th : pool) th.join();
  CHECK(got == expected);
}
