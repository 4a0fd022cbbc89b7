#include "fdconvex/coefficients.hpp"

#include "fdconvex/multigraph.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fdconvex {

std::optional<Rational> CoeffCache::find(const std::string& key) const
{
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void CoeffCache::insert(const std::string& key, const Rational& value)
{
  std::unique_lock lock(mutex_);
  table_.try_emplace(key, value);
}

std::size_t CoeffCache::size() const
{
  std::shared_lock lock(mutex_);
  return table_.size();
}

void CoeffCache::clear()
{
  std::unique_lock lock(mutex_);
  table_.clear();
}

Rational c_hat(const ExponentVector& alpha)
{
  if (alpha.empty()) throw std::invalid_argument("c_hat of the zero exponent vector");
  std::vector<Edge> support;
  for (const auto& term : alpha.terms()) support.push_back(term.first);
  return frac(1, union_size(support));
}

namespace {

std::string encode(const ExponentVector& canonical)
{
  std::string key;
  key.reserve(3 * canonical.terms().size());
  for (const auto& [e, count] : canonical.terms()) {
    key.push_back(static_cast<char>(e.a()));
    key.push_back(static_cast<char>(e.b()));
    key.push_back(static_cast<char>(count));
  }
  return key;
}

Rational b_hat_canonical(const ExponentVector& alpha, CoeffCache& cache)
{
  const std::string key = encode(alpha);
  if (auto hit = cache.find(key)) return *hit;

  Rational value;
  if (alpha.degree() == 1) {
    value = frac(1, 2);
  } else {
    Rational sum = 0;
    for (const auto& [e, count] : alpha.terms()) {
      sum += count * b_hat_canonical(canonical_exponent(alpha.minus(e)), cache);
    }
    value = sum * c_hat(alpha);
  }
  cache.insert(key, value);
  return value;
}

}  // namespace

Rational b_hat(const ExponentVector& alpha, CoeffCache& cache)
{
  if (alpha.empty()) throw std::invalid_argument("b_hat of the zero exponent vector");
  return b_hat_canonical(canonical_exponent(alpha), cache);
}

Rational b_alpha_bruteforce(const ExponentVector& alpha)
{
  if (alpha.empty()) throw std::invalid_argument("b_alpha_bruteforce of the zero exponent vector");
  if (alpha.degree() > 8) throw std::invalid_argument("b_alpha_bruteforce limited to degree 8");

  std::vector<Edge> order = alpha.expanded();  // sorted: first permutation
  Rational total = 0;
  do {
    Rational term = 1;
    std::vector<int> covered;
    for (const Edge& e : order) {
      covered.push_back(e.a());
      covered.push_back(e.b());
      std::sort(covered.begin(), covered.end());
      covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
      term /= static_cast<long>(covered.size());
    }
    total += term;
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

}  // namespace fdconvex
