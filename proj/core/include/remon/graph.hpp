#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "remon/scalar.hpp"

namespace remon {

/// Simple undirected graph over labelled vertices. Self-loops are ignored.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(std::vector<std::string> vertices);

  void add_edge(std::string_view a, std::string_view b);
  void add_edge(size_t a, size_t b);
  bool has_edge(size_t a, size_t b) const;
  bool has_edge(std::string_view a, std::string_view b) const;

  size_t vertex_count() const { return vertices_.size(); }
  size_t edge_count() const;
  size_t degree(size_t v) const;
  size_t max_degree() const;
  const std::vector<std::string>& vertices() const { return vertices_; }
  size_t vertex_index(std::string_view label) const;
  /// Edges as index pairs (a < b), in canonical order.
  std::vector<std::pair<size_t, size_t>> edges() const;
  /// Edges as label pairs, in canonical order.
  std::vector<std::pair<std::string, std::string>> edge_labels() const;

  std::string to_dot(std::string_view name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<bool>> adj_;
};

/// A proper coloring with contiguous colors 0..count-1, canonicalized so
/// colors appear in first-occurrence order over the vertex list.
struct Coloring {
  std::vector<int> color;  // per vertex index
  int count = 0;

  bool proper(const UndirectedGraph& g) const;
  /// Vertex labels grouped by color.
  std::vector<std::vector<std::string>> classes(const UndirectedGraph& g) const;
};

/// Exact minimum coloring: DSATUR greedy upper bound, greedy clique lower
/// bound, then a backtracking search per color count. Deterministic under
/// the input vertex order.
Coloring minimal_coloring(const UndirectedGraph& g);

}  // namespace remon
