#pragma once

#include "fdconvex/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fdconvex {

/// A 2-subset {a, b} of [n], stored with a < b and 1-based labels.
class Edge {
public:
  Edge() = default;
  /// Endpoints may be given in either order. Throws std::invalid_argument
  /// on a loop or a label below 1.
  Edge(int u, int v);

  int a() const { return a_; }
  int b() const { return b_; }
  bool contains(int v) const { return a_ == v || b_ == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

private:
  int a_ = 1;
  int b_ = 2;
};

/// "a-b".
std::string to_string(const Edge& e);
Edge parse_edge(std::string_view text);

/// Position of e among the 2-subsets of [n] in lexicographic order.
std::size_t lex_index(const Edge& e, int n);
/// Inverse of lex_index.
Edge edge_at(std::size_t index, int n);
/// All 2-subsets of [n] in lexicographic order.
std::vector<Edge> all_edges(int n);

inline std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// |e_1 ∪ ... ∪ e_r|. Throws on an empty list.
int union_size(std::span<const Edge> edges);

/// Bijection of [n], 1-based.
class Permutation {
public:
  /// images[i - 1] is the image of i. Throws unless a bijection of [n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// Cyclic shift c_1 -> c_2 -> ... -> c_r -> c_1, identity elsewhere.
  static Permutation cycle(int n, std::span<const int> cycle);
  static Permutation cycle(int n, std::initializer_list<int> cycle)
  {
    return Permutation::cycle(n, std::span<const int>(cycle.begin(), cycle.size()));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const;
  /// True when every label in [k] is a fixed point.
  bool fixes_prefix(int k) const;

  /// (this ∘ other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// σ·{i, j} = {σ(i), σ(j)}. Throws std::out_of_range when e leaves σ's domain.
Edge apply_perm(const Permutation& sigma, const Edge& e);

/// Finitely supported map Edge -> positive multiplicity. Independent of any
/// ambient vertex count; stored as a sorted flat list.
class ExponentVector {
public:
  using Term = std::pair<Edge, int>;

  ExponentVector() = default;
  explicit ExponentVector(std::span<const Edge> edges);
  ExponentVector(std::initializer_list<Term> terms);

  /// Adds `count` copies of e (count may be negative; reaching zero erases).
  void add(const Edge& e, int count = 1);
  ExponentVector plus(const Edge& e, int count = 1) const;
  ExponentVector minus(const Edge& e) const { return plus(e, -1); }

  int multiplicity(const Edge& e) const;
  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Every edge repeated by its multiplicity, sorted.
  std::vector<Edge> expanded() const;
  /// Largest vertex label in the support (0 when empty).
  int max_vertex() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
  std::vector<Term> terms_;
  int degree_ = 0;
};

/// "1-2,1-3" or "1-2:2" (multiplicity omitted when 1).
std::string to_string(const ExponentVector& alpha);
ExponentVector parse_exponent_vector(std::string_view text);

/// α! = product of the factorials of all multiplicities.
BigInt exponent_factorial(const ExponentVector& alpha);

BigInt factorial(int n);

}  // namespace fdconvex
