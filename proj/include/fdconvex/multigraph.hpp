#pragma once

#include "fdconvex/combinatorics.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdconvex {

/// A finite multiset of edges together with its vertex set.
///
/// Built from edges alone, the vertex set is the union of the endpoints and
/// there are no isolated vertices. Built with an explicit vertex count, the
/// vertex set is [vertex_count] and uncovered labels are isolated vertices.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(std::vector<Edge> edges);
  Multigraph(std::vector<Edge> edges, int vertex_count);

  /// Sorted, with repeats for parallel edges.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<int>& vertices() const { return vertices_; }
  /// Number of vertices.
  int k() const { return static_cast<int>(vertices_.size()); }

  bool has_isolated_vertex() const;
  /// True when the vertex set is exactly [k].
  bool labeled_on_prefix() const;
  /// γ: the edge multiplicities as an exponent vector.
  ExponentVector exponent() const { return ExponentVector(edges_); }
  /// True for d-2 pairwise disjoint edges.
  bool is_matching() const { return 2 * edge_count() == static_cast<std::size_t>(k()); }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
  std::vector<Edge> edges_;
  std::vector<int> vertices_;
};

/// "1-2,1-3,..." with repeated edges written out.
std::string to_string(const Multigraph& g);
/// Inverse of to_string; also accepts the "a-b:m" multiplicity shorthand.
Multigraph parse_multigraph(std::string_view text);

/// Distinguished representative of the isomorphism class of g, relabeled on
/// [k]. Vertices of higher degree receive smaller labels; remaining ties are
/// broken by the lexicographically least sorted edge list found by the
/// search. Throws std::invalid_argument on an isolated vertex.
Multigraph canonical_form(const Multigraph& g);

/// Canonical relabeling of the multigraph underlying α, as an exponent vector.
ExponentVector canonical_exponent(const ExponentVector& alpha);

/// Compact byte key of the isomorphism class of α (used for memo tables).
std::string canonical_key(const ExponentVector& alpha);

bool is_isomorphic(const Multigraph& g, const Multigraph& h);

/// One canonical representative per isomorphism class of multigraphs with
/// exactly `edge_count` edges and no isolated vertices, sorted by
/// (k, edge list). Throws std::invalid_argument for edge_count < 1.
std::vector<Multigraph> enumerate_multigraphs(int edge_count);

}  // namespace fdconvex
