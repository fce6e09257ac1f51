#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sisa/graph.hpp"
#include "sisa/mining.hpp"

/// Exhaustive reference implementations over an adjacency matrix. They never
/// touch the set engine and are meant for graphs with at most ~20 vertices.
namespace sisa::oracle {

using VertexSets = std::vector<std::vector<Vertex>>;

/// Largest n the exhaustive subset searches accept.
inline constexpr std::size_t kMaxVertices = 20;

std::size_t degeneracy(const Graph &g);
std::uint64_t triangles(const Graph &g);
VertexSets maximal_cliques(const Graph &g);
VertexSets k_cliques(const Graph &g, std::size_t k);
VertexSets k_clique_stars(const Graph &g, std::size_t k);

/// Ordered induced embeddings; result[i][p] = image of pattern vertex p.
VertexSets embeddings(const Graph &target, const Graph &pattern, bool labeled);

std::vector<mining::Pattern> frequent_patterns(const Graph &target, double sigma,
                                               std::size_t max_size = 4);

double similarity(const Graph &g, Vertex u, Vertex v, mining::Measure m);
std::vector<Edge> jarvis_patrick(const Graph &g, std::size_t tau);
std::uint64_t link_prediction(const Graph &g, const std::vector<Edge> &removed,
                              mining::Measure m,
                              std::optional<std::size_t> predict = {},
                              std::vector<Edge> *predicted = nullptr);
/// Parent = smallest-id neighbour one level closer to the root; -1 if
/// unreachable.
std::vector<std::int64_t> bfs_parents(const Graph &g, Vertex root);

}  // namespace sisa::oracle
