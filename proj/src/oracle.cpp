#include "sisa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace sisa::oracle {

namespace {

struct Matrix {
  std::size_t n = 0;
  std::vector<std::vector<bool>> a;
  std::vector<std::size_t> deg;

  explicit Matrix(const Graph &g) : n(g.num_vertices()), a(n, std::vector<bool>(n)), deg(n) {
    for (const auto &e : g.edges()) {
      a[e.u][e.v] = a[e.v][e.u] = true;
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  bool clique(const std::vector<Vertex> &s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!a[s[i]][s[j]]) return false;
    return true;
  }
  std::vector<Vertex> common(const std::vector<Vertex> &s) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n; ++w) {
      bool all = true;
      for (Vertex x : s) all = all && a[w][x];
      if (all) out.push_back(w);
    }
    return out;
  }
};

void guard(const Graph &g) {
  if (g.num_vertices() > kMaxVertices)
    throw std::invalid_argument("oracle refuses graphs with more than " +
                                std::to_string(kMaxVertices) + " vertices");
}

std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> s;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

void combinations(std::size_t n, std::size_t k, std::vector<Vertex> &cur, Vertex from,
                  VertexSets &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (Vertex v = from; v < n; ++v) {
    cur.push_back(v);
    combinations(n, k, cur, v + 1, out);
    cur.pop_back();
  }
}

}  // namespace

std::size_t degeneracy(const Graph &g) {
  guard(g);
  const Matrix m(g);
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.n); ++mask) {
    const auto s = members(mask);
    std::size_t lo = m.n;
    for (Vertex v : s) {
      std::size_t d = 0;
      for (Vertex u : s) d += m.a[v][u];
      lo = std::min(lo, d);
    }
    best = std::max(best, lo);
  }
  return best;
}

std::uint64_t triangles(const Graph &g) { return k_cliques(g, 3).size(); }

VertexSets k_cliques(const Graph &g, std::size_t k) {
  guard(g);
  const Matrix m(g);
  VertexSets all, out;
  std::vector<Vertex> cur;
  combinations(m.n, k, cur, 0, all);
  for (auto &s : all)
    if (m.clique(s)) out.push_back(std::move(s));
  return out;
}

VertexSets maximal_cliques(const Graph &g) {
  guard(g);
  const Matrix m(g);
  VertexSets out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.n); ++mask) {
    const auto s = members(mask);
    if (m.clique(s) && m.common(s).empty()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSets k_clique_stars(const Graph &g, std::size_t k) {
  const Matrix m(g);
  std::set<std::vector<Vertex>> stars;
  for (const auto &c : k_cliques(g, k)) {
    const auto x = m.common(c);
    if (x.empty()) continue;
    std::vector<Vertex> s = c;
    s.insert(s.end(), x.begin(), x.end());
    std::sort(s.begin(), s.end());
    stars.insert(s);
  }
  return {stars.begin(), stars.end()};
}

VertexSets embeddings(const Graph &target, const Graph &pattern, bool labeled) {
  guard(target);
  const Matrix t(target), p(pattern);
  auto vlabel = [&](const Graph &h, Vertex v) -> std::string {
    const Label l = h.vertex_label(v);
    return l == kNoLabel ? std::string{} : h.label_names()[static_cast<std::size_t>(l)];
  };
  auto elabel = [&](const Graph &h, Vertex u, Vertex v) -> std::string {
    const Label l = h.edge_label(u, v);
    return l == kNoLabel ? std::string{} : h.label_names()[static_cast<std::size_t>(l)];
  };
  VertexSets out;
  std::vector<Vertex> img;
  std::vector<bool> used(t.n, false);
  auto rec = [&](auto &&self) -> void {
    if (img.size() == p.n) {
      for (Vertex i = 0; i < p.n; ++i) {
        if (labeled && pattern.has_vertex_labels() &&
            vlabel(pattern, i) != vlabel(target, img[i]))
          return;
        for (Vertex j = i + 1; j < p.n; ++j) {
          if (p.a[i][j] != t.a[img[i]][img[j]]) return;
          if (labeled && pattern.has_edge_labels() && p.a[i][j] &&
              elabel(pattern, i, j) != elabel(target, img[i], img[j]))
            return;
        }
      }
      out.push_back(img);
      return;
    }
    for (Vertex v = 0; v < t.n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      img.push_back(v);
      self(self);
      img.pop_back();
      used[v] = false;
    }
  };
  if (p.n <= t.n) rec(rec);
  return out;
}

namespace {

// Minimal upper-triangle adjacency string over all relabelings.
std::vector<Edge> canonical(std::uint32_t size, const std::vector<Edge> &edges) {
  std::vector<std::vector<bool>> a(size, std::vector<bool>(size));
  for (const auto &e : edges) a[e.u][e.v] = a[e.v][e.u] = true;
  std::vector<Vertex> perm(size);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::optional<std::string> best;
  std::vector<Edge> best_edges;
  do {
    std::string code;
    std::vector<Edge> es;
    for (Vertex i = 0; i < size; ++i)
      for (Vertex j = i + 1; j < size; ++j) {
        const bool bit = a[perm[i]][perm[j]];
        code += bit ? '1' : '0';
        if (bit) es.push_back({i, j});
      }
    if (!best || code < *best) {
      best = code;
      best_edges = es;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best_edges;
}

}  // namespace

std::vector<mining::Pattern> frequent_patterns(const Graph &target, double sigma,
                                               std::size_t max_size) {
  const double threshold = sigma * static_cast<double>(target.num_vertices());
  std::vector<mining::Pattern> level{{1, {}, target.num_vertices()}};
  std::vector<mining::Pattern> out = level;
  for (std::uint32_t size = 2; size <= max_size && !level.empty(); ++size) {
    std::set<std::vector<Edge>> cands;
    for (const auto &p : level)
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
        auto es = p.edges;
        for (Vertex j : members(mask)) es.push_back({j, size - 1});
        cands.insert(canonical(size, es));
      }
    std::vector<mining::Pattern> next;
    for (const auto &es : cands) {
      const auto cnt = embeddings(target, Graph::from_edges(size, es), false).size();
      if (cnt > 0 && static_cast<double>(cnt) >= threshold) next.push_back({size, es, cnt});
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

double similarity(const Graph &g, Vertex u, Vertex v, mining::Measure measure) {
  const Matrix m(g);
  std::vector<Vertex> common;
  std::size_t either = 0;
  for (Vertex w = 0; w < m.n; ++w) {
    if (m.a[u][w] && m.a[v][w]) common.push_back(w);
    if (m.a[u][w] || m.a[v][w]) ++either;
  }
  const auto c = static_cast<double>(common.size());
  using mining::Measure;
  switch (measure) {
    case Measure::Jaccard:
      return either == 0 ? 0.0 : c / static_cast<double>(either);
    case Measure::Overlap: {
      const auto lo = std::min(m.deg[u], m.deg[v]);
      return lo == 0 ? 0.0 : c / static_cast<double>(lo);
    }
    case Measure::AdamicAdar: {
      double s = 0;
      for (Vertex w : common)
        s += 1.0 / std::log(static_cast<double>(std::max<std::size_t>(m.deg[w], 2)));
      return s;
    }
    case Measure::ResourceAlloc: {
      double s = 0;
      for (Vertex w : common) s += 1.0 / static_cast<double>(m.deg[w]);
      return s;
    }
    case Measure::CommonNeighbors:
      return c;
    case Measure::TotalNeighbors:
      return static_cast<double>(either);
  }
  return 0;
}

std::vector<Edge> jarvis_patrick(const Graph &g, std::size_t tau) {
  const Matrix m(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v) {
      if (!m.a[u][v]) continue;
      std::size_t c = 0;
      for (Vertex w = 0; w < m.n; ++w) c += m.a[u][w] && m.a[v][w];
      if (c > tau) out.push_back({u, v});
    }
  return out;
}

std::uint64_t link_prediction(const Graph &g, const std::vector<Edge> &removed,
                              mining::Measure measure, std::optional<std::size_t> predict,
                              std::vector<Edge> *predicted) {
  std::set<Edge> gone;
  for (const auto &e : removed) gone.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<Edge> kept;
  for (const auto &e : g.edges())
    if (!gone.contains(e)) kept.push_back(e);
  const Graph sparse = Graph::from_edges(g.num_vertices(), kept);
  const Matrix m(sparse);
  struct Scored {
    double s;
    Edge e;
  };
  std::vector<Scored> all;
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v)
      if (!m.a[u][v]) all.push_back({similarity(sparse, u, v, measure), {u, v}});
  std::stable_sort(all.begin(), all.end(),
                   [](const Scored &a, const Scored &b) { return a.s > b.s; });
  const std::size_t keep = std::min(predict.value_or(gone.size()), all.size());
  std::uint64_t eff = 0;
  std::vector<Edge> top;
  for (std::size_t i = 0; i < keep; ++i) {
    eff += gone.contains(all[i].e);
    top.push_back(all[i].e);
  }
  std::sort(top.begin(), top.end());
  if (predicted) *predicted = std::move(top);
  return eff;
}

std::vector<std::int64_t> bfs_parents(const Graph &g, Vertex root) {
  const Matrix m(g);
  std::vector<std::int64_t> level(m.n, -1), parent(m.n, -1);
  std::queue<Vertex> q;
  level[root] = 0;
  q.push(root);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w = 0; w < m.n; ++w)
      if (m.a[u][w] && level[w] < 0) {
        level[w] = level[u] + 1;
        q.push(w);
      }
  }
  parent[root] = root;
  for (Vertex w = 0; w < m.n; ++w) {
    if (w == root || level[w] < 0) continue;
    for (Vertex u = 0; u < m.n; ++u)
      if (m.a[u][w] && level[u] == level[w] - 1) {
        parent[w] = u;
        break;
      }
  }
  return parent;
}

}  // namespace sisa::oracle
