#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sisa/mining.hpp"
#include "sisa/oracle.hpp"

// Every mining operation paired with its brute-force twin.
namespace matrix {

using sisa::Graph;
using sisa::Vertex;
using sisa::mining::MiningConfig;
using sisa::mining::MiningResult;
using sisa::mining::PrepareOptions;

struct Case {
  std::string name;
  // Receives the graph already prepared with the given options.
  std::function<MiningResult(const Graph &, const PrepareOptions &, const MiningConfig &)> run;
  std::function<MiningResult()> oracle;
};

inline MiningResult count_of(std::uint64_t c) {
  MiningResult r;
  r.count = c;
  return r;
}

inline MiningResult sets_of(sisa::oracle::VertexSets s) {
  std::sort(s.begin(), s.end());
  MiningResult r;
  r.count = s.size();
  r.sets = std::move(s);
  return r;
}

/// Empty string when the logical payloads agree.
inline std::string mismatch(const MiningResult &got, const MiningResult &want) {
  std::ostringstream os;
  if (got.count != want.count) os << " count " << got.count << " != " << want.count;
  if (got.sets != want.sets) os << " sets(" << got.sets.size() << " vs " << want.sets.size() << ")";
  if (got.edges != want.edges) os << " edges(" << got.edges.size() << " vs " << want.edges.size() << ")";
  if (got.scores != want.scores) os << " scores";
  if (got.parents != want.parents) os << " parents";
  if (got.patterns != want.patterns) os << " patterns(" << got.patterns.size() << " vs " << want.patterns.size() << ")";
  return os.str();
}

inline Graph pattern_graph(std::size_t n, std::vector<sisa::Edge> e) {
  return Graph::from_edges(n, e);
}

inline std::vector<Case> cases(const Graph &g) {
  namespace m = sisa::mining;
  namespace o = sisa::oracle;
  std::vector<Case> out;
  out.push_back({"tc", [](auto &pg, auto &, auto &c) { return m::triangle_count(pg, c); },
                 [&g] { return count_of(o::triangles(g)); }});
  out.push_back({"mc", [](auto &pg, auto &, auto &c) { return m::maximal_cliques(pg, c); },
                 [&g] { return sets_of(o::maximal_cliques(g)); }});
  out.push_back({"4cc", [](auto &pg, auto &, auto &c) { return m::four_clique_count(pg, c); },
                 [&g] { return count_of(o::k_cliques(g, 4).size()); }});
  for (std::size_t k : {3, 4, 5}) {
    const auto ks = std::to_string(k);
    out.push_back({"kcc k=" + ks,
                   [k](auto &pg, auto &, auto &c) { return m::k_clique_count(pg, k, c); },
                   [&g, k] { return count_of(o::k_cliques(g, k).size()); }});
    out.push_back({"kcl k=" + ks,
                   [k](auto &pg, auto &, auto &c) { return m::k_clique_list(pg, k, c); },
                   [&g, k] { return sets_of(o::k_cliques(g, k)); }});
  }
  for (std::size_t k : {2, 3, 4, 5})
    for (auto v : {m::StarVariant::A, m::StarVariant::B})
      out.push_back({"kcs k=" + std::to_string(k) + (v == m::StarVariant::A ? " A" : " B"),
                     [k, v](auto &pg, auto &, auto &c) { return m::k_clique_star_list(pg, k, v, c); },
                     [&g, k] { return sets_of(o::k_clique_stars(g, k)); }});

  const std::vector<std::pair<std::string, Graph>> patterns = {
      {"K1", pattern_graph(1, {})},
      {"K2", pattern_graph(2, {{0, 1}})},
      {"K3", pattern_graph(3, {{0, 1}, {1, 2}, {0, 2}})},
      {"P3", pattern_graph(3, {{0, 1}, {1, 2}})},
      {"2K1", pattern_graph(2, {})},
      {"C4", pattern_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})},
      {"paw", pattern_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
  };
  for (const auto &[pname, p] : patterns) {
    out.push_back({"si " + pname,
                   [p](auto &pg, auto &, auto &c) { return m::subgraph_isomorphism(pg, p, false, c); },
                   [&g, p] { return count_of(o::embeddings(g, p, false).size()); }});
    out.push_back({"si-list " + pname,
                   [p](auto &pg, auto &, auto &c) {
                     auto r = m::subgraph_isomorphism(pg, p, false, c, true);
                     r.count = r.sets.size();
                     return r;
                   },
                   [&g, p] { return sets_of(o::embeddings(g, p, false)); }});
  }
  // Labeled SI on relabeled copies of the target and two patterns.
  const Graph lt = corpus::relabel(g, g.num_edges() + 17, true);
  for (std::uint64_t seed : {1, 2, 3})
    for (const auto &[pname, p] : {patterns[1], patterns[2], patterns[3]}) {
      const Graph lp = corpus::relabel(p, seed, true);
      out.push_back({"si-labeled " + pname + " seed=" + std::to_string(seed),
                     [lt, lp](auto &, auto &opts, auto &c) {
                       return m::subgraph_isomorphism(m::prepare_graph(lt, opts), lp, true, c);
                     },
                     [lt, lp] { return count_of(o::embeddings(lt, lp, true).size()); }});
    }
  const Graph vt = corpus::relabel(g, g.num_edges() + 5, false);
  const Graph vp = corpus::relabel(patterns[3].second, 9, false);
  out.push_back({"si-labeled vertex-only P3",
                 [vt, vp](auto &, auto &opts, auto &c) {
                   return m::subgraph_isomorphism(m::prepare_graph(vt, opts), vp, true, c);
                 },
                 [vt, vp] { return count_of(o::embeddings(vt, vp, true).size()); }});

  for (double sigma : {0.0, 0.5, 2.0})
    out.push_back({"fsm sigma=" + std::to_string(sigma),
                   [sigma](auto &pg, auto &, auto &c) { return m::frequent_subgraph_mining(pg, sigma, c, 4); },
                   [&g, sigma] {
                     MiningResult r;
                     r.patterns = o::frequent_patterns(g, sigma, 4);
                     r.count = r.patterns.size();
                     return r;
                   }});
  for (m::Measure ms : m::kAllMeasures) {
    out.push_back({std::string("sim ") + m::to_string(ms),
                   [ms](auto &pg, auto &, auto &c) { return m::similarity_all_pairs(pg, ms, c); },
                   [&g, ms] {
                     MiningResult r;
                     for (Vertex u = 0; u < g.num_vertices(); ++u)
                       for (Vertex v = u + 1; v < g.num_vertices(); ++v)
                         r.scores.push_back(o::similarity(g, u, v, ms));
                     r.count = r.scores.size();
                     return r;
                   }});
    if (g.num_edges() > 0)
      out.push_back({std::string("lp ") + m::to_string(ms),
                     [ms](auto &pg, auto &, auto &c) { return m::link_prediction_eval(pg, 0.3, ms, 7, c); },
                     [&g, ms] {
                       MiningResult r;
                       r.count = o::link_prediction(g, m::sample_edges(g, 0.3, 7), ms, {}, &r.edges);
                       return r;
                     }});
  }
  for (std::size_t tau : {0, 1, 2})
    out.push_back({"jp tau=" + std::to_string(tau),
                   [tau](auto &pg, auto &, auto &c) { return m::jarvis_patrick(pg, tau, c); },
                   [&g, tau] {
                     MiningResult r;
                     r.edges = o::jarvis_patrick(g, tau);
                     r.count = r.edges.size();
                     return r;
                   }});
  for (Vertex root : {Vertex{0}, static_cast<Vertex>(g.num_vertices() - 1)})
    for (auto dir : {m::BfsDirection::TopDown, m::BfsDirection::BottomUp})
      out.push_back({"bfs root=" + std::to_string(root) +
                         (dir == m::BfsDirection::TopDown ? " top-down" : " bottom-up"),
                     [root, dir](auto &pg, auto &, auto &c) { return m::bfs(pg, root, dir, c); },
                     [&g, root] {
                       MiningResult r;
                       r.parents = o::bfs_parents(g, root);
                       for (auto p : r.parents) r.count += p >= 0;
                       return r;
                     }});
  return out;
}

/// Configurations swept by the equivalence checks.
struct Setting {
  std::string name;
  PrepareOptions prep;
  MiningConfig cfg;
};

inline std::vector<Setting> settings(bool with_workers) {
  using sisa::pim::VariantMode;
  std::vector<Setting> out;
  for (double t : {0.0, 0.4, 1.0})
    for (auto mode : {VariantMode::Auto, VariantMode::Merge, VariantMode::Gallop}) {
      Setting s;
      s.prep.policy.t = t;
      s.prep.policy.budget_fraction = std::numeric_limits<double>::infinity();
      s.cfg.scu.policy = s.prep.policy;
      s.cfg.scu.variant_mode = mode;
      s.name = "t=" + std::to_string(t) + " mode=" + sisa::pim::to_string(mode);
      out.push_back(s);
    }
  Setting sa_aux;
  sa_aux.name = "aux=sa";
  sa_aux.cfg.scu.aux_repr = sisa::Repr::SparseArray;
  out.push_back(sa_aux);
  Setting approx;
  approx.name = "approx order";
  approx.prep.order = sisa::mining::OrderKind::Approx;
  approx.prep.eps = 0.5;
  out.push_back(approx);
  if (with_workers) {
    Setting par;
    par.name = "workers=8";
    par.cfg.workers = 8;
    out.push_back(par);
  }
  return out;
}

}  // namespace matrix
