#include "remon/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace remon {

UndirectedGraph::UndirectedGraph(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)) {
  std::set<std::string_view> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second)
      throw std::invalid_argument("graph: duplicate vertex '" + v + "'");
  adj_.assign(vertices_.size(), std::vector<bool>(vertices_.size(), false));
}

size_t UndirectedGraph::vertex_index(std::string_view label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end())
    throw std::invalid_argument("graph: unknown vertex '" +
                                std::string(label) + "'");
  return static_cast<size_t>(it - vertices_.begin());
}

void UndirectedGraph::add_edge(std::string_view a, std::string_view b) {
  add_edge(vertex_index(a), vertex_index(b));
}

void UndirectedGraph::add_edge(size_t a, size_t b) {
  if (a >= vertices_.size() || b >= vertices_.size())
    throw std::out_of_range("graph: vertex index out of range");
  if (a == b) return;
  adj_[a][b] = adj_[b][a] = true;
}

bool UndirectedGraph::has_edge(size_t a, size_t b) const {
  return adj_.at(a).at(b);
}

bool UndirectedGraph::has_edge(std::string_view a, std::string_view b) const {
  return has_edge(vertex_index(a), vertex_index(b));
}

size_t UndirectedGraph::edge_count() const { return edges().size(); }

size_t UndirectedGraph::degree(size_t v) const {
  return static_cast<size_t>(
      std::count(adj_.at(v).begin(), adj_.at(v).end(), true));
}

size_t UndirectedGraph::max_degree() const {
  size_t d = 0;
  for (size_t v = 0; v < vertices_.size(); ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<size_t, size_t>> UndirectedGraph::edges() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t a = 0; a < vertices_.size(); ++a)
    for (size_t b = a + 1; b < vertices_.size(); ++b)
      if (adj_[a][b]) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<std::string, std::string>>
UndirectedGraph::edge_labels() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : edges()) out.emplace_back(vertices_[a], vertices_[b]);
  return out;
}

std::string UndirectedGraph::to_dot(std::string_view name) const {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (const auto& v : vertices_) os << "  \"" << v << "\";\n";
  for (auto [a, b] : edges())
    os << "  \"" << vertices_[a] << "\" -- \"" << vertices_[b] << "\";\n";
  os << "}\n";
  return os.str();
}

bool Coloring::proper(const UndirectedGraph& g) const {
  if (color.size() != g.vertex_count()) return false;
  for (auto [a, b] : g.edges())
    if (color[a] == color[b]) return false;
  for (int c : color)
    if (c < 0 || c >= count) return false;
  return true;
}

std::vector<std::vector<std::string>> Coloring::classes(
    const UndirectedGraph& g) const {
  std::vector<std::vector<std::string>> out(static_cast<size_t>(count));
  for (size_t v = 0; v < color.size(); ++v)
    out[static_cast<size_t>(color[v])].push_back(g.vertices()[v]);
  return out;
}

namespace {

// Remaps colors to first-occurrence order over the vertex list.
Coloring canonicalize(std::vector<int> color) {
  std::vector<int> remap;
  for (int& c : color) {
    auto it = std::find(remap.begin(), remap.end(), c);
    if (it == remap.end()) {
      remap.push_back(c);
      c = static_cast<int>(remap.size()) - 1;
    } else {
      c = static_cast<int>(it - remap.begin());
    }
  }
  return Coloring{std::move(color), static_cast<int>(remap.size())};
}

std::vector<int> dsatur(const UndirectedGraph& g) {
  const size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::set<int>> neighbor_colors(n);
  for (size_t step = 0; step < n; ++step) {
    size_t pick = n;
    size_t best_sat = 0, best_deg = 0;
    for (size_t v = 0; v < n; ++v) {
      if (color[v] != -1) continue;
      size_t sat = neighbor_colors[v].size(), deg = g.degree(v);
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 0;
    while (neighbor_colors[pick].count(c)) ++c;
    color[pick] = c;
    for (size_t u = 0; u < n; ++u)
      if (g.has_edge(pick, u)) neighbor_colors[u].insert(c);
  }
  return color;
}

// Greedy clique in input order seeded at each vertex; a chromatic lower bound.
size_t clique_lower_bound(const UndirectedGraph& g) {
  const size_t n = g.vertex_count();
  size_t best = n == 0 ? 0 : 1;
  for (size_t seed = 0; seed < n; ++seed) {
    std::vector<size_t> clique{seed};
    for (size_t v = 0; v < n; ++v) {
      if (v == seed) continue;
      bool joins = true;
      for (size_t u : clique)
        if (!g.has_edge(u, v)) {
          joins = false;
          break;
        }
      if (joins) clique.push_back(v);
    }
    best = std::max(best, clique.size());
  }
  return best;
}

bool k_colorable(const UndirectedGraph& g, int k, std::vector<int>& color,
                 size_t v, int used) {
  if (v == g.vertex_count()) return true;
  // Symmetry break: allow at most one brand-new color at each step.
  const int limit = std::min(k - 1, used);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (size_t u = 0; u < v; ++u)
      if (g.has_edge(u, v) && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (k_colorable(g, k, color, v + 1, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

Coloring minimal_coloring(const UndirectedGraph& g) {
  const size_t n = g.vertex_count();
  if (n == 0) return Coloring{{}, 0};

  Coloring upper = canonicalize(dsatur(g));
  const size_t lower = clique_lower_bound(g);
  for (int k = static_cast<int>(lower); k < upper.count; ++k) {
    std::vector<int> color(n, -1);
    if (k_colorable(g, k, color, 0, 0)) return canonicalize(std::move(color));
  }
  return upper;
}

}  // namespace remon
