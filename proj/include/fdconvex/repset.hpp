#pragma once

#include "fdconvex/combinatorics.hpp"
#include "fdconvex/matrix.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace fdconvex {

/// Value of an S_{n-k}-invariant matrix at (e, f); queried only on edges
/// inside [k+4].
using EntryOracle = std::function<Rational(const Edge&, const Edge&)>;

/// Sparse vector over the edges of K_n. Zero entries are never stored.
class SparseVector {
public:
  void add(const Edge& e, const Rational& value);
  const std::map<Edge, Rational>& entries() const { return entries_; }
  Rational at(const Edge& e) const;

private:
  std::map<Edge, Rational> entries_;
};

/// Representative set for the action of S_{n-k} (the permutations of [n]
/// fixing [k] pointwise) on R^E, E = edges of K_n. Sizes are
/// (C(k,2)+k+1, k+1, 1).
struct RepresentativeSet {
  int k = 0;
  int n = 0;
  std::vector<SparseVector> u1;
  std::vector<SparseVector> u2;
  std::vector<SparseVector> u3;

  const std::vector<SparseVector>& family(int i) const;
};

/// Throws std::invalid_argument unless k >= 0 and n >= k + 4.
RepresentativeSet representative_vectors(int k, int n);

/// (u_pᵀ A u_q)_{p,q} for A indexed by the edges of K_n in lexicographic order.
RationalSymMatrix compress(const RationalSymMatrix& a, int n, const std::vector<SparseVector>& family);

/// The three compressed blocks U_iᵀ A^(n) U_i written in closed form from the
/// orbit values of A^(k+4) and n. Throws std::invalid_argument for n < k + 4.
std::array<RationalSymMatrix, 3> block_formulas(const EntryOracle& entry, int k, int n);

/// Number of orbits of S_{n-k} on E × E:
/// 3 + 4k + 2k² + C(k,2)(C(k,2) + 2k + 2).
std::int64_t orbit_count_formula(int k);
/// Orbits counted by union-find over the generators (k+1 k+2) and
/// (k+1 ... n). Throws std::invalid_argument unless n >= k + 4 and
/// C(n,2)² <= 10^6.
std::int64_t orbit_count_bruteforce(int k, int n);
/// m1² + m2² + m3² for m = (C(k,2)+k+1, k+1, 1).
std::int64_t representative_square_sum(int k);
/// Σ dim V_{i,j} of the irreducible decomposition; equals C(n,2).
std::int64_t decomposition_dimension(int k, int n);

}  // namespace fdconvex
