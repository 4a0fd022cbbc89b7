#pragma once

#include "fdconvex/combinatorics.hpp"
#include "fdconvex/rational.hpp"

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace fdconvex {

/// Memo table for b̂ keyed by the isomorphism class of the exponent vector.
///
/// Safe for concurrent use. A lookup sees either nothing or the unique
/// correct value; racing inserts of the same key store equal values.
class CoeffCache {
public:
  std::optional<Rational> find(const std::string& key) const;
  void insert(const std::string& key, const Rational& value);
  std::size_t size() const;
  void clear();

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Rational> table_;
};

/// ĉ_α = 1 / |union of the support edges of α|. Throws on α = 0.
Rational c_hat(const ExponentVector& alpha);

/// b̂_α = α!·b_α through the union-size recurrence
///   b̂_α = ĉ_α Σ_{e : α_e ≥ 1} α_e b̂_{α - v_e},   b̂_{v_e} = 1/2.
/// Throws std::invalid_argument on α = 0.
Rational b_hat(const ExponentVector& alpha, CoeffCache& cache);

/// b_α straight from its definition: the sum over all distinct orderings of
/// the edge multiset of α of Π_i 1/|e_1 ∪ ... ∪ e_i|. Oracle use only;
/// throws std::invalid_argument when the degree exceeds 8 or α = 0.
Rational b_alpha_bruteforce(const ExponentVector& alpha);

}  // namespace fdconvex
