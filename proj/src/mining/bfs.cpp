#include <stdexcept>

#include "workers.hpp"

namespace sisa::mining {

MiningResult bfs(const Graph &g, Vertex root, BfsDirection dir, const MiningConfig &cfg) {
  const std::size_t n = g.num_vertices();
  if (root >= n) throw std::invalid_argument("BFS root outside graph");
  MiningResult out;
  out.kind = ResultKind::ParentMap;
  out.parents.assign(n, -1);
  out.parents[root] = root;

  pim::Scu scu(cfg.scu);
  SetValue unvisited = scu.make_aux(n);
  for (Vertex v = 0; v < n; ++v)
    if (v != root) unvisited.insert(v);
  SetValue frontier = scu.make_aux(n);
  frontier.insert(root);

  while (!frontier.empty()) {
    SetValue next = scu.make_aux(n);
    if (dir == BfsDirection::TopDown) {
      for (Vertex u : frontier.to_vector()) {
        scu.intersect(g.neighbors(u), unvisited).for_each([&](Vertex w) {
          out.parents[w] = u;
          scu.insert(next, w);
          scu.erase(unvisited, w);
        });
      }
    } else {
      for (Vertex w : unvisited.to_vector()) {
        const SetValue hit = scu.intersect(g.neighbors(w), frontier);
        if (hit.empty()) continue;
        out.parents[w] = hit.to_vector().front();
        scu.insert(next, w);
      }
      unvisited = detail::to_aux(scu, scu.difference(unvisited, next));
    }
    frontier = std::move(next);
  }
  for (auto p : out.parents) out.count += p >= 0;
  out.ledger = scu.ledger();
  out.trace = scu.trace();
  return out;
}

}  // namespace sisa::mining
