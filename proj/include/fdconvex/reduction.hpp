#pragma once

#include "fdconvex/coefficients.hpp"
#include "fdconvex/matrix.hpp"
#include "fdconvex/multigraph.hpp"
#include "fdconvex/repset.hpp"

#include <utility>
#include <vector>

namespace fdconvex {

/// Entries of A^(k+4) on the three deep-tail orbits:
/// x at ({k+1,k+2},{k+1,k+2}), y at ({k+1,k+2},{k+1,k+3}),
/// z at ({k+1,k+2},{k+3,k+4}).
struct ClassValues {
  Rational x;
  Rational y;
  Rational z;
};

/// The n-independent objects whose positive semidefiniteness settles A^(n)
/// for every n >= k. Rows of b1: edges of [k] in lexicographic order, then
/// j in [k], then the tail row. Rows of b2: j in [k], then the tail row.
struct ReductionBlocks {
  int k = 0;
  RationalSymMatrix b1;
  RationalSymMatrix b2;
  Rational scalar;  // x - 2y + z
  ClassValues classes;
};

/// (e, f) -> entry of γ!·Q_γ (or Q_γ) inside K_{k+4}. g must be labeled on
/// [k]. The oracle throws std::out_of_range for an edge outside [k+4] and
/// keeps references to `cache`.
EntryOracle entry_oracle(const Multigraph& g, CoeffCache& cache, bool scaled = true);

/// Blocks read from any S_{n-k}-invariant entry oracle. Throws
/// std::logic_error if the middle block of b1 comes out asymmetric.
ReductionBlocks theorem_blocks_from_oracle(const EntryOracle& entry, int k);

ReductionBlocks theorem_blocks(const Multigraph& g, CoeffCache& cache, bool scaled = true);

/// x - 2y + z for g (scaled by γ!).
Rational blockvalue(const Multigraph& g, CoeffCache& cache);

/// The 6×6 matrix on the edges of K_4 with x on the diagonal, z on pairs of
/// disjoint edges and y on pairs sharing a vertex.
RationalSymMatrix a4_pattern(const Rational& x, const Rational& y, const Rational& z);

/// Eigenvalues of a4_pattern with multiplicities:
/// {(x-z, 3), (x+4y+z, 1), (x-2y+z, 2)}.
std::vector<std::pair<Rational, int>> remark_k0_eigen(const Rational& x, const Rational& y, const Rational& z);

}  // namespace fdconvex
