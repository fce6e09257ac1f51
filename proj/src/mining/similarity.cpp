#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "workers.hpp"

namespace sisa::mining {

double vertex_similarity(const Graph &g, Vertex u, Vertex v, Measure m,
                         pim::Scu &scu) {
  if (u == v) throw std::invalid_argument("similarity needs two distinct vertices");
  const SetValue &a = g.neighbors(u);
  const SetValue &b = g.neighbors(v);
  auto ratio = [](double num, double den) { return den == 0 ? 0.0 : num / den; };
  switch (m) {
    case Measure::Jaccard: {
      const auto common = static_cast<double>(scu.intersect_card(a, b));
      return ratio(common, static_cast<double>(a.size() + b.size()) - common);
    }
    case Measure::Overlap:
      return ratio(static_cast<double>(scu.intersect_card(a, b)),
                   static_cast<double>(std::min(a.size(), b.size())));
    case Measure::AdamicAdar: {
      double s = 0;
      scu.intersect(a, b).for_each([&](Vertex w) {
        s += 1.0 / std::log(static_cast<double>(std::max<std::size_t>(g.degree(w), 2)));
      });
      return s;
    }
    case Measure::ResourceAlloc: {
      double s = 0;
      scu.intersect(a, b).for_each(
          [&](Vertex w) { s += 1.0 / static_cast<double>(g.degree(w)); });
      return s;
    }
    case Measure::CommonNeighbors:
      return static_cast<double>(scu.intersect_card(a, b));
    case Measure::TotalNeighbors:
      return static_cast<double>(scu.unite_card(a, b));
  }
  return 0.0;
}

MiningResult similarity_all_pairs(const Graph &g, Measure m, const MiningConfig &cfg) {
  const std::size_t n = g.num_vertices();
  MiningResult out;
  out.kind = ResultKind::Scores;
  using Rows = std::vector<std::pair<Vertex, std::vector<double>>>;
  auto parts = detail::for_each_vertex<Rows>(n, cfg, out, [&](pim::Scu &scu, Rows &rows, Vertex u) {
    std::vector<double> row;
    for (Vertex v = u + 1; v < n; ++v) row.push_back(vertex_similarity(g, u, v, m, scu));
    rows.emplace_back(u, std::move(row));
    return true;
  });
  std::vector<std::vector<double>> by_row(n);
  for (auto &rows : parts)
    for (auto &[u, row] : rows) by_row[u] = std::move(row);
  for (auto &row : by_row) out.scores.insert(out.scores.end(), row.begin(), row.end());
  out.count = out.scores.size();
  return out;
}

MiningResult jarvis_patrick(const Graph &g, std::size_t tau, const MiningConfig &cfg) {
  MiningResult out;
  out.kind = ResultKind::EdgeSet;
  auto parts = detail::for_each_vertex<std::vector<Edge>>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, std::vector<Edge> &c, Vertex u) {
        const SetValue &nu = g.neighbors(u);
        nu.for_each([&](Vertex v) {
          if (v > u && scu.intersect_card(nu, g.neighbors(v)) > tau) c.push_back({u, v});
        });
        return true;
      });
  for (auto &p : parts) out.edges.insert(out.edges.end(), p.begin(), p.end());
  std::sort(out.edges.begin(), out.edges.end());
  out.count = out.edges.size();
  return out;
}

namespace {

// Unbiased draw from [0, range) by rejection.
std::uint64_t bounded(std::mt19937_64 &rng, std::uint64_t range) {
  const std::uint64_t floor = (0 - range) % range;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= floor) return x % range;
  }
}

struct Candidate {
  double score;
  Vertex u, v;
};

}  // namespace

std::vector<Edge> sample_edges(const Graph &g, double fraction, std::uint64_t seed) {
  if (!(fraction > 0 && fraction < 1))
    throw std::invalid_argument("removal fraction must be in (0, 1)");
  std::vector<Edge> edges = g.edges();
  const auto take = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(edges.size())));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < take; ++i)
    std::swap(edges[i], edges[i + bounded(rng, edges.size() - i)]);
  edges.resize(take);
  std::sort(edges.begin(), edges.end());
  return edges;
}

MiningResult link_prediction_eval(const Graph &g, const std::vector<Edge> &removed,
                                  Measure m, const MiningConfig &cfg,
                                  std::optional<std::size_t> predict) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> gone;
  for (const auto &e : removed) {
    const Edge norm{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (norm.v >= n || !g.adjacent(norm.u, norm.v))
      throw std::invalid_argument("removed pair (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") is not an edge");
    gone.push_back(norm);
  }
  std::sort(gone.begin(), gone.end());
  gone.erase(std::unique(gone.begin(), gone.end()), gone.end());

  GraphBuilder b(n);
  for (const auto &e : g.edges())
    if (!std::binary_search(gone.begin(), gone.end(), e)) b.add_edge(e.u, e.v);
  const Graph sparse = apply_representation(b.build(), cfg.scu.policy);

  MiningResult out;
  using Cands = std::vector<Candidate>;
  auto parts = detail::for_each_vertex<Cands>(n, cfg, out, [&](pim::Scu &scu, Cands &c, Vertex u) {
    SetValue everyone = scu.make_aux(n);
    for (Vertex v = u + 1; v < n; ++v) everyone.insert(v);
    const SetValue open = scu.difference(everyone, sparse.neighbors(u));
    open.for_each([&](Vertex v) { c.push_back({vertex_similarity(sparse, u, v, m, scu), u, v}); });
    return true;
  });
  Cands all;
  for (auto &p : parts) all.insert(all.end(), p.begin(), p.end());
  const std::size_t keep = std::min(predict.value_or(gone.size()), all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                    [](const Candidate &a, const Candidate &b) {
                      if (a.score != b.score) return a.score > b.score;
                      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                    });
  for (std::size_t i = 0; i < keep; ++i) {
    const Edge e{all[i].u, all[i].v};
    out.edges.push_back(e);
    out.count += std::binary_search(gone.begin(), gone.end(), e);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

MiningResult link_prediction_eval(const Graph &g, double fraction, Measure m,
                                  std::uint64_t seed, const MiningConfig &cfg,
                                  std::optional<std::size_t> predict) {
  return link_prediction_eval(g, sample_edges(g, fraction, seed), m, cfg, predict);
}

}  // namespace sisa::mining
