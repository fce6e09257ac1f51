#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sisa/policy.hpp"
#include "sisa/set.hpp"

namespace sisa {

using Label = std::int32_t;
inline constexpr Label kNoLabel = -1;

struct RepresentationStats;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Vertex ranking used to orient edges (lower rank -> higher rank).
struct VertexOrder {
  std::vector<std::uint32_t> rank;  // permutation of [0, n)
  /// Max out-degree of the induced orientation; equals the degeneracy for
  /// the exact order.
  std::size_t degeneracy_bound = 0;
  /// Peeling rounds used by the approximate order (n for the exact one).
  std::size_t rounds = 0;

  /// Vertices sorted by rank.
  std::vector<Vertex> sequence() const;
};

/// Immutable simple undirected graph whose neighborhoods are engine sets.
///
/// N(v) carries set id v; the oriented N+(v) carries set id n + v.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }
  std::size_t degree(Vertex v) const { return neighborhoods_[v].size(); }

  const SetValue &neighbors(Vertex v) const { return neighborhoods_[v]; }
  bool oriented() const { return !out_neighborhoods_.empty() || n_ == 0; }
  const SetValue &out_neighbors(Vertex v) const;
  const std::optional<VertexOrder> &order() const { return order_; }

  bool adjacent(Vertex u, Vertex v) const { return neighborhoods_[u].test(v); }
  /// Undirected edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_vertex_labels() const { return !vertex_labels_.empty(); }
  bool has_edge_labels() const { return !edge_labels_.empty(); }
  Label vertex_label(Vertex v) const {
    return vertex_labels_.empty() ? kNoLabel : vertex_labels_[v];
  }
  Label edge_label(Vertex u, Vertex v) const;
  /// Label dictionary: label id -> token.
  const std::vector<std::string> &label_names() const { return label_names_; }
  std::optional<Label> find_label(std::string_view name) const;

  /// Number of neighborhood sets (N and N+) stored as DBs.
  std::size_t dense_neighborhoods() const;

 private:
  friend class GraphBuilder;
  friend Graph orient(const Graph &g, const VertexOrder &order);
  friend Graph apply_representation(const Graph &g,
                                    const RepresentationPolicy &policy,
                                    RepresentationStats *stats);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<SetValue> neighborhoods_;
  std::vector<SetValue> out_neighborhoods_;
  std::optional<VertexOrder> order_;
  std::vector<Label> vertex_labels_;  // indexed by vertex, empty if unlabeled
  // Per vertex, (neighbor, label) sorted by neighbor; empty if unlabeled.
  std::vector<std::vector<std::pair<Vertex, Label>>> edge_labels_;
  std::vector<std::string> label_names_;
};

struct LoadStats {
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
  /// Dense id -> id as written in the input.
  std::vector<std::uint64_t> original_ids;
};

/// Collects edges and labels; build() dedups, drops self-loops and interns
/// label tokens in sorted order, so the result does not depend on the order
/// of calls.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  GraphBuilder &add_edge(Vertex u, Vertex v, std::string_view label = {});
  GraphBuilder &set_vertex_label(Vertex v, std::string_view label);

  Graph build(LoadStats *stats = nullptr) const;

 private:
  struct Pending {
    Vertex u, v;
    std::string label;
  };
  std::size_t n_;
  std::vector<Pending> edges_;
  std::vector<std::optional<std::string>> vertex_labels_;
  bool labeled_edges_ = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadedGraph {
  Graph graph;
  LoadStats stats;
};

/// Whitespace-separated "u v" lines ("u v edge_label" when `labeled`);
/// '#'/'%' lines are comments. When labeled, "v <id> <label>" lines give
/// vertex labels. Input IDs are remapped to [0, n) in ascending order.
/// Throws ParseError on malformed lines, std::runtime_error on an empty graph.
LoadedGraph load_edge_list(std::istream &in, bool labeled = false,
                           std::istream *vertex_labels = nullptr);
LoadedGraph load_edge_list_file(const std::string &path, bool labeled = false,
                                const std::string &labels_path = {});

/// Iterative minimum-degree peeling, ties to the lowest vertex id.
VertexOrder degeneracy_order_exact(const Graph &g);

/// Round-based peeling: each round removes every vertex whose residual degree
/// is at most (1+eps) times the residual average. Rank sorts by (round, id).
VertexOrder degeneracy_order_approx(const Graph &g, double eps);

/// N+(v) = {u in N(v) : rank(v) < rank(u)}. Throws std::invalid_argument if
/// rank is not a permutation of the vertices.
Graph orient(const Graph &g, const VertexOrder &order);

struct RepresentationStats {
  std::size_t dense_sets = 0;
  std::size_t sparse_sets = 0;
  std::int64_t baseline_bits = 0;  // all-SA storage of the managed sets
  std::int64_t charged_bits = 0;   // bits charged to the budget
  std::int64_t actual_extra_bits = 0;  // net storage change vs all-SA
};

/// Lay out N (and N+ when present) per the policy, largest sets first.
Graph apply_representation(const Graph &g, const RepresentationPolicy &policy,
                           RepresentationStats *stats = nullptr);

/// Max out-degree of the orientation induced by `order`.
std::size_t max_out_degree(const Graph &g, const VertexOrder &order);

}  // namespace sisa
