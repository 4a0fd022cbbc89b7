#include "fdconvex/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fdconvex {

namespace {

int parse_int(std::string_view text, std::string_view what)
{
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Edge::Edge(int u, int v) : a_(std::min(u, v)), b_(std::max(u, v))
{
  if (a_ < 1) throw std::invalid_argument("edge label below 1");
  if (a_ == b_) throw std::invalid_argument("edge endpoints must differ");
}

std::string to_string(const Edge& e)
{
  return std::to_string(e.a()) + "-" + std::to_string(e.b());
}

Edge parse_edge(std::string_view text)
{
  text = trim(text);
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    throw std::invalid_argument("edge must look like 'a-b': '" + std::string(text) + "'");
  }
  int u = parse_int(text.substr(0, dash), "edge");
  int v = parse_int(text.substr(dash + 1), "edge");
  if (u >= v) throw std::invalid_argument("edge must satisfy a < b: '" + std::string(text) + "'");
  return Edge(u, v);
}

std::size_t lex_index(const Edge& e, int n)
{
  if (e.b() > n) {
    throw std::out_of_range("edge " + to_string(e) + " exceeds vertex count " + std::to_string(n));
  }
  const std::size_t a = static_cast<std::size_t>(e.a());
  const std::size_t nn = static_cast<std::size_t>(n);
  return (a - 1) * (2 * nn - a) / 2 + static_cast<std::size_t>(e.b() - e.a() - 1);
}

Edge edge_at(std::size_t index, int n)
{
  if (index >= choose2(static_cast<std::size_t>(n))) {
    throw std::out_of_range("edge index out of range");
  }
  int a = 1;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    --row;
    ++a;
  }
  return Edge(a, a + 1 + static_cast<int>(index));
}

std::vector<Edge> all_edges(int n)
{
  std::vector<Edge> edges;
  edges.reserve(choose2(static_cast<std::size_t>(std::max(n, 0))));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return edges;
}

int union_size(std::span<const Edge> edges)
{
  if (edges.empty()) throw std::invalid_argument("union_size of an empty edge list");
  std::vector<int> vertices;
  vertices.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    vertices.push_back(e.a());
    vertices.push_back(e.b());
  }
  std::sort(vertices.begin(), vertices.end());
  return static_cast<int>(std::unique(vertices.begin(), vertices.end()) - vertices.begin());
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j)
{
  std::vector<int> images = identity(n).images_;
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("transposition outside [n]");
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, std::span<const int> cycle)
{
  std::vector<int> images = identity(n).images_;
  for (std::size_t t = 0; t < cycle.size(); ++t) {
    int from = cycle[t];
    int to = cycle[(t + 1) % cycle.size()];
    if (from < 1 || from > n) throw std::out_of_range("cycle outside [n]");
    images[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(std::move(images));
}

int Permutation::operator()(int v) const
{
  if (v < 1 || v > size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside permutation domain");
  }
  return images_[static_cast<std::size_t>(v - 1)];
}

bool Permutation::fixes_prefix(int k) const
{
  for (int i = 1; i <= std::min(k, size()); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const
{
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different size");
  std::vector<int> images(images_.size());
  for (int v = 1; v <= size(); ++v) images[static_cast<std::size_t>(v - 1)] = (*this)(other(v));
  return Permutation(std::move(images));
}

Edge apply_perm(const Permutation& sigma, const Edge& e)
{
  return Edge(sigma(e.a()), sigma(e.b()));
}

// ---------------------------------------------------------------------------

ExponentVector::ExponentVector(std::span<const Edge> edges)
{
  for (const Edge& e : edges) add(e);
}

ExponentVector::ExponentVector(std::initializer_list<Term> terms)
{
  for (const auto& [e, count] : terms) {
    if (count < 1) throw std::invalid_argument("exponent multiplicities must be positive");
    add(e, count);
  }
}

void ExponentVector::add(const Edge& e, int count)
{
  if (count == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Edge& key) { return t.first < key; });
  if (it != terms_.end() && it->first == e) {
    if (it->second + count < 0) throw std::invalid_argument("negative exponent multiplicity");
    it->second += count;
    if (it->second == 0) terms_.erase(it);
  } else {
    if (count < 0) throw std::invalid_argument("negative exponent multiplicity");
    terms_.insert(it, Term{e, count});
  }
  degree_ += count;
}

ExponentVector ExponentVector::plus(const Edge& e, int count) const
{
  ExponentVector out = *this;
  out.add(e, count);
  return out;
}

int ExponentVector::multiplicity(const Edge& e) const
{
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Edge& key) { return t.first < key; });
  return (it != terms_.end() && it->first == e) ? it->second : 0;
}

std::vector<Edge> ExponentVector::expanded() const
{
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& [e, count] : terms_)
    for (int c = 0; c < count; ++c) out.push_back(e);
  return out;
}

int ExponentVector::max_vertex() const
{
  int m = 0;
  for (const auto& term : terms_) m = std::max(m, term.first.b());
  return m;
}

std::string to_string(const ExponentVector& alpha)
{
  std::string out;
  for (const auto& [e, count] : alpha.terms()) {
    if (!out.empty()) out += ',';
    out += to_string(e);
    if (count != 1) out += ':' + std::to_string(count);
  }
  return out;
}

ExponentVector parse_exponent_vector(std::string_view text)
{
  ExponentVector alpha;
  text = trim(text);
  if (text.empty()) return alpha;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view term = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto colon = term.find(':');
    int count = 1;
    if (colon != std::string_view::npos) {
      count = parse_int(trim(term.substr(colon + 1)), "multiplicity");
      if (count < 1) throw std::invalid_argument("multiplicity must be positive");
      term = term.substr(0, colon);
    }
    alpha.add(parse_edge(term), count);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return alpha;
}

BigInt factorial(int n)
{
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt exponent_factorial(const ExponentVector& alpha)
{
  BigInt out = 1;
  for (const auto& term : alpha.terms()) out *= factorial(term.second);
  return out;
}

}  // namespace fdconvex
