#include "fdconvex/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace fdconvex {

Multigraph::Multigraph(std::vector<Edge> edges) : edges_(std::move(edges))
{
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    vertices_.push_back(e.a());
    vertices_.push_back(e.b());
  }
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

Multigraph::Multigraph(std::vector<Edge> edges, int vertex_count) : edges_(std::move(edges))
{
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    if (e.b() > vertex_count) throw std::invalid_argument("edge " + to_string(e) + " exceeds vertex count");
  }
  for (int v = 1; v <= vertex_count; ++v) vertices_.push_back(v);
}

bool Multigraph::has_isolated_vertex() const
{
  for (int v : vertices_) {
    bool covered = std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); });
    if (!covered) return true;
  }
  return false;
}

bool Multigraph::labeled_on_prefix() const
{
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string to_string(const Multigraph& g)
{
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ',';
    out += to_string(e);
  }
  return out;
}

Multigraph parse_multigraph(std::string_view text)
{
  return Multigraph(parse_exponent_vector(text).expanded());
}

// ---------------------------------------------------------------------------
// Canonical labeling: split into connected components, label each component by
// individualization/refinement, then order components by an invariant key.

namespace {

using Code = std::vector<std::uint16_t>;
using Cells = std::vector<std::vector<int>>;

struct ComponentResult {
  int vertex_count = 0;
  int edge_count = 0;
  Code code;               // sorted expanded edge list, a * 256 + b, 0-based
  std::vector<int> order;  // order[label] = local vertex
};

class ComponentLabeler {
public:
  ComponentLabeler(const std::vector<int>& weights, int n) : w_(weights), n_(n) {}

  ComponentResult run()
  {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    for (int v = 0; v < n_; ++v) root[0][static_cast<std::size_t>(v)] = v;
    search(std::move(root));
    ComponentResult out;
    out.vertex_count = n_;
    out.code = best_;
    out.edge_count = static_cast<int>(best_.size());
    out.order = best_order_;
    return out;
  }

private:
  int weight(int u, int v) const { return w_[static_cast<std::size_t>(u * n_ + v)]; }

  bool twins(int u, int v) const
  {
    for (int x = 0; x < n_; ++x) {
      if (x == u || x == v) continue;
      if (weight(u, x) != weight(v, x)) return false;
    }
    return true;
  }

  // Equitable refinement. Sub-cells are ordered by descending signature, so the
  // ordering depends only on the isomorphism class of (graph, partition).
  void refine(Cells& cells) const
  {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

      Cells next;
      next.reserve(cells.size() + 4);
      bool changed = false;
      const std::size_t ncells = cells.size();
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        sig.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> s(ncells, 0);
          for (int u = 0; u < n_; ++u) {
            int wt = weight(v, u);
            if (wt != 0) s[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])] += wt;
          }
          sig.emplace_back(std::move(s), v);
        }
        std::sort(sig.begin(), sig.end(), [](const auto& x, const auto& y) {
          if (x.first != y.first) return x.first > y.first;
          return x.second < y.second;
        });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= sig.size(); ++i) {
          if (i == sig.size() || sig[i].first != sig[start].first) {
            std::vector<int> part;
            for (std::size_t j = start; j < i; ++j) part.push_back(sig[j].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (sig.front().first != sig.back().first) changed = true;
      }
      cells = std::move(next);
      if (!changed) return;
    }
  }

  void leaf(const Cells& cells)
  {
    std::vector<int> label(static_cast<std::size_t>(n_));
    for (std::size_t c = 0; c < cells.size(); ++c) label[static_cast<std::size_t>(cells[c][0])] = static_cast<int>(c);
    Code code;
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        int wt = weight(u, v);
        if (wt == 0) continue;
        int a = std::min(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
        int b = std::max(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
        for (int t = 0; t < wt; ++t) code.push_back(static_cast<std::uint16_t>(a * 256 + b));
      }
    }
    std::sort(code.begin(), code.end());
    if (!have_best_ || code < best_) {
      best_ = std::move(code);
      have_best_ = true;
      best_order_.assign(static_cast<std::size_t>(n_), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) best_order_[c] = cells[c][0];
    }
  }

  void search(Cells cells)
  {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const std::vector<int> cell = cells[target];
    std::vector<int> tried;
    for (int v : cell) {
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees produce the same leaves.
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); });
      if (redundant) continue;
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < target; ++c) child.push_back(cells[c]);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cell)
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (std::size_t c = target + 1; c < cells.size(); ++c) child.push_back(cells[c]);
      search(std::move(child));
    }
  }

  const std::vector<int>& w_;
  int n_;
  Code best_;
  bool have_best_ = false;
  std::vector<int> best_order_;
};

// Canonical relabeling of a multigraph given by its expanded edge list.
// Returns the relabeled (1-based, sorted) edges.
std::vector<Edge> canonical_edges(std::span<const Edge> edges)
{
  std::vector<int> labels;
  for (const Edge& e : edges) {
    labels.push_back(e.a());
    labels.push_back(e.b());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int n = static_cast<int>(labels.size());
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  };

  std::vector<int> weights(static_cast<std::size_t>(n * n), 0);
  for (const Edge& e : edges) {
    int u = local(e.a()), v = local(e.b());
    ++weights[static_cast<std::size_t>(u * n + v)];
    ++weights[static_cast<std::size_t>(v * n + u)];
  }

  // Connected components.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> members;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.push_back({s});
    comp[static_cast<std::size_t>(s)] = id;
    for (std::size_t head = 0; head < members.back().size(); ++head) {
      int u = members.back()[head];
      for (int v = 0; v < n; ++v) {
        if (weights[static_cast<std::size_t>(u * n + v)] != 0 && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = id;
          members.back().push_back(v);
        }
      }
    }
  }

  std::vector<ComponentResult> results;
  results.reserve(members.size());
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    const int cn = static_cast<int>(m.size());
    std::vector<int> cw(static_cast<std::size_t>(cn * cn));
    for (int i = 0; i < cn; ++i)
      for (int j = 0; j < cn; ++j)
        cw[static_cast<std::size_t>(i * cn + j)] = weights[static_cast<std::size_t>(m[static_cast<std::size_t>(i)] * n + m[static_cast<std::size_t>(j)])];
    ComponentResult r = ComponentLabeler(cw, cn).run();
    for (int& v : r.order) v = m[static_cast<std::size_t>(v)];
    results.push_back(std::move(r));
  }
  std::sort(results.begin(), results.end(), [](const ComponentResult& x, const ComponentResult& y) {
    if (x.vertex_count != y.vertex_count) return x.vertex_count > y.vertex_count;
    if (x.edge_count != y.edge_count) return x.edge_count > y.edge_count;
    return x.code < y.code;
  });

  std::vector<int> new_label(static_cast<std::size_t>(n));
  int next = 1;
  for (const auto& r : results)
    for (int v : r.order) new_label[static_cast<std::size_t>(v)] = next++;

  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges)
    out.emplace_back(new_label[static_cast<std::size_t>(local(e.a()))], new_label[static_cast<std::size_t>(local(e.b()))]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Multigraph canonical_form(const Multigraph& g)
{
  if (g.has_isolated_vertex()) throw std::invalid_argument("multigraph has an isolated vertex");
  return Multigraph(canonical_edges(g.edges()));
}

ExponentVector canonical_exponent(const ExponentVector& alpha)
{
  const auto edges = alpha.expanded();
  return ExponentVector(canonical_edges(edges));
}

std::string canonical_key(const ExponentVector& alpha)
{
  const auto edges = alpha.expanded();
  const auto canon = canonical_edges(edges);
  std::string key;
  key.reserve(2 * canon.size());
  for (const Edge& e : canon) {
    key.push_back(static_cast<char>(e.a()));
    key.push_back(static_cast<char>(e.b()));
  }
  return key;
}

bool is_isomorphic(const Multigraph& g, const Multigraph& h)
{
  return canonical_form(g) == canonical_form(h);
}

std::vector<Multigraph> enumerate_multigraphs(int edge_count)
{
  if (edge_count < 1) throw std::invalid_argument("enumerate_multigraphs needs at least one edge");

  // Every multigraph with m edges arises from one with m - 1 edges by adding an
  // edge between old vertices, from an old vertex to a new one, or between two
  // new vertices. Isomorph rejection is by canonical form.
  std::set<std::vector<Edge>> level{{Edge(1, 2)}};
  for (int m = 2; m <= edge_count; ++m) {
    std::set<std::vector<Edge>> next;
    for (const auto& edges : level) {
      const int k = Multigraph(edges).k();
      for (int a = 1; a <= k + 1; ++a) {
        for (int b = a + 1; b <= k + 2; ++b) {
          if (a == k + 1 && b != k + 2) continue;
          if (a <= k && b == k + 2) continue;
          std::vector<Edge> grown = edges;
          grown.emplace_back(a, b);
          next.insert(canonical_edges(grown));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<Multigraph> out;
  out.reserve(level.size());
  for (const auto& edges : level) out.emplace_back(edges);
  std::sort(out.begin(), out.end(), [](const Multigraph& x, const Multigraph& y) {
    if (x.k() != y.k()) return x.k() < y.k();
    return x.edges() < y.edges();
  });
  return out;
}

}  // namespace fdconvex
