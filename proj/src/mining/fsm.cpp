#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sisa/mining.hpp"

namespace sisa::mining {

namespace {

std::string adjacency_code(std::uint32_t size, const std::vector<std::vector<bool>> &adj,
                           const std::vector<Vertex> &perm) {
  std::string code;
  for (std::uint32_t i = 0; i < size; ++i)
    for (std::uint32_t j = i + 1; j < size; ++j)
      code.push_back(adj[perm[i]][perm[j]] ? '1' : '0');
  return code;
}

}  // namespace

std::vector<Edge> canonical_form(std::uint32_t size, const std::vector<Edge> &edges) {
  std::vector<std::vector<bool>> adj(size, std::vector<bool>(size, false));
  for (const auto &e : edges) {
    if (e.u >= size || e.v >= size || e.u == e.v)
      throw std::invalid_argument("pattern edge outside pattern");
    adj[e.u][e.v] = adj[e.v][e.u] = true;
  }
  std::vector<Vertex> perm(size);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<Vertex> best_perm = perm;
  std::string best = adjacency_code(size, adj, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string code = adjacency_code(size, adj, perm);
    if (code < best) {
      best = std::move(code);
      best_perm = perm;
    }
  }
  // position i of the canonical labeling holds original vertex best_perm[i]
  std::vector<Edge> out;
  for (Vertex i = 0; i < size; ++i)
    for (Vertex j = i + 1; j < size; ++j)
      if (adj[best_perm[i]][best_perm[j]]) out.push_back({i, j});
  return out;
}

MiningResult frequent_subgraph_mining(const Graph &target, double sigma,
                                      const MiningConfig &cfg, std::size_t max_size) {
  if (!(sigma >= 0)) throw std::invalid_argument("sigma must be non-negative");
  if (max_size < 1 || max_size > 6)
    throw std::invalid_argument("pattern size cap must be in [1, 6]");
  MiningResult out;
  out.kind = ResultKind::Patterns;
  const double threshold = sigma * static_cast<double>(target.num_vertices());
  MiningConfig counting = cfg;
  counting.limit.reset();

  std::vector<Pattern> level{{1, {}, target.num_vertices()}};
  out.patterns = level;
  for (std::uint32_t size = 2; size <= max_size && !level.empty(); ++size) {
    std::set<std::vector<Edge>> candidates;
    for (const auto &p : level)
      for (std::uint32_t mask = 1; mask < (1u << (size - 1)); ++mask) {
        std::vector<Edge> edges = p.edges;
        for (Vertex j = 0; j + 1 < size; ++j)
          if (mask & (1u << j)) edges.push_back({j, size - 1});
        candidates.insert(canonical_form(size, edges));
      }
    std::vector<Pattern> next;
    for (const auto &edges : candidates) {
      const Graph pg = Graph::from_edges(size, edges);
      MiningResult si = subgraph_isomorphism(target, pg, false, counting);
      out.ledger += si.ledger;
      out.trace.insert(out.trace.end(), si.trace.begin(), si.trace.end());
      if (si.count > 0 && static_cast<double>(si.count) >= threshold)
        next.push_back({size, edges, si.count});
    }
    out.patterns.insert(out.patterns.end(), next.begin(), next.end());
    level = std::move(next);
  }
  out.count = out.patterns.size();
  return out;
}

}  // namespace sisa::mining
