#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "workers.hpp"

namespace sisa::mining {

using detail::to_aux;

namespace {

void sort_unique(std::vector<std::vector<Vertex>> &sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto &p : parts)
    for (auto &x : p) out.push_back(std::move(x));
  return out;
}

// Visits every k-clique whose lowest-ranked vertex is u. `emit` gets the
// sorted clique and returns false to stop.
using CliqueSink = std::function<bool(std::vector<Vertex>)>;

bool list_from(const Graph &g, pim::Scu &scu, std::size_t k,
               std::vector<Vertex> &stack, const SetValue &cand,
               const CliqueSink &emit) {
  if (stack.size() + 1 == k) {
    for (Vertex x : cand.to_vector()) {
      std::vector<Vertex> c = stack;
      c.push_back(x);
      std::sort(c.begin(), c.end());
      if (!emit(std::move(c))) return false;
    }
    return true;
  }
  for (Vertex v : cand.to_vector()) {
    SetValue next = to_aux(scu, scu.intersect(g.out_neighbors(v), cand));
    if (next.size() + stack.size() + 1 < k) continue;
    stack.push_back(v);
    const bool go = list_from(g, scu, k, stack, next, emit);
    stack.pop_back();
    if (!go) return false;
  }
  return true;
}

bool list_cliques_at(const Graph &g, pim::Scu &scu, std::size_t k, Vertex u,
                     const CliqueSink &emit) {
  std::vector<Vertex> stack{u};
  return list_from(g, scu, k, stack, g.out_neighbors(u), emit);
}

std::uint64_t count_from(const Graph &g, pim::Scu &scu, std::size_t k,
                         std::size_t i, const SetValue &cand) {
  if (i == k) return cand.size();
  std::uint64_t total = 0;
  cand.for_each([&](Vertex v) {
    if (i + 1 == k) {
      total += scu.intersect_card(g.out_neighbors(v), cand);
      return;
    }
    SetValue next = to_aux(scu, scu.intersect(g.out_neighbors(v), cand));
    total += count_from(g, scu, k, i + 1, next);
  });
  return total;
}

void require_k(std::size_t k, std::size_t min) {
  if (k < min)
    throw std::invalid_argument("k must be at least " + std::to_string(min) +
                                ", got " + std::to_string(k));
}

// --- Bron-Kerbosch -------------------------------------------------------

struct BkState {
  std::vector<std::vector<Vertex>> found;
  bool limit_hit = false;
  bool stop = false;
};

void bron_kerbosch(const Graph &g, pim::Scu &scu, const MiningConfig &cfg,
                   std::vector<Vertex> &r, SetValue p, SetValue x, BkState &st) {
  if (p.empty()) {
    if (!x.empty()) return;
    if (!detail::within_limit(cfg, st.found.size() + 1, st.limit_hit)) {
      st.stop = true;
      return;
    }
    std::vector<Vertex> c = r;
    std::sort(c.begin(), c.end());
    st.found.push_back(std::move(c));
    return;
  }
  const SetValue px = scu.unite(p, x);
  Vertex pivot = 0;
  std::size_t best = 0;
  bool first = true;
  px.for_each([&](Vertex u) {
    const std::size_t c = scu.intersect_card(p, g.neighbors(u));
    if (first || c > best) {
      pivot = u;
      best = c;
      first = false;
    }
  });
  const SetValue cand = scu.difference(p, g.neighbors(pivot));
  for (Vertex v : cand.to_vector()) {
    const SetValue &nv = g.neighbors(v);
    r.push_back(v);
    bron_kerbosch(g, scu, cfg, r, to_aux(scu, scu.intersect(p, nv)),
                  to_aux(scu, scu.intersect(x, nv)), st);
    r.pop_back();
    if (st.stop) return;
    scu.erase(p, v);
    scu.insert(x, v);
  }
}

}  // namespace

MiningResult triangle_count(const Graph &g, const MiningConfig &cfg) {
  detail::require_oriented(g, "triangle counting");
  MiningResult out;
  auto counts = detail::for_each_vertex<std::uint64_t>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, std::uint64_t &c, Vertex v) {
        const SetValue &nv = g.out_neighbors(v);
        nv.for_each([&](Vertex w) { c += scu.intersect_card(nv, g.out_neighbors(w)); });
        return true;
      });
  for (auto c : counts) out.count += c;
  return out;
}

MiningResult maximal_cliques(const Graph &g, const MiningConfig &cfg) {
  detail::require_oriented(g, "maximal clique listing");
  MiningResult out;
  out.kind = ResultKind::VertexSets;
  auto states = detail::for_each_vertex<BkState>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, BkState &st, Vertex v) {
        SetValue p = scu.materialize(g.out_neighbors(v));
        SetValue x = to_aux(scu, scu.difference(g.neighbors(v), g.out_neighbors(v)));
        std::vector<Vertex> r{v};
        bron_kerbosch(g, scu, cfg, r, std::move(p), std::move(x), st);
        return !st.stop;
      });
  for (auto &st : states) {
    out.limit_hit |= st.limit_hit;
    for (auto &c : st.found) out.sets.push_back(std::move(c));
  }
  sort_unique(out.sets);
  out.count = out.sets.size();
  return out;
}

MiningResult k_clique_count(const Graph &g, std::size_t k, const MiningConfig &cfg) {
  require_k(k, 3);
  detail::require_oriented(g, "k-clique counting");
  MiningResult out;
  auto counts = detail::for_each_vertex<std::uint64_t>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, std::uint64_t &c, Vertex u) {
        c += count_from(g, scu, k, 2, g.out_neighbors(u));
        return true;
      });
  for (auto c : counts) out.count += c;
  return out;
}

MiningResult k_clique_list(const Graph &g, std::size_t k, const MiningConfig &cfg) {
  require_k(k, 3);
  detail::require_oriented(g, "k-clique listing");
  MiningResult out;
  out.kind = ResultKind::VertexSets;
  auto states = detail::for_each_vertex<BkState>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, BkState &st, Vertex u) {
        return list_cliques_at(g, scu, k, u, [&](std::vector<Vertex> c) {
          if (!detail::within_limit(cfg, st.found.size() + 1, st.limit_hit))
            return false;
          st.found.push_back(std::move(c));
          return true;
        });
      });
  for (auto &st : states) {
    out.limit_hit |= st.limit_hit;
    for (auto &c : st.found) out.sets.push_back(std::move(c));
  }
  sort_unique(out.sets);
  out.count = out.sets.size();
  return out;
}

MiningResult four_clique_count(const Graph &g, const MiningConfig &cfg) {
  detail::require_oriented(g, "4-clique counting");
  MiningResult out;
  auto counts = detail::for_each_vertex<std::uint64_t>(
      g.num_vertices(), cfg, out, [&](pim::Scu &scu, std::uint64_t &c, Vertex v1) {
        const SetValue &n1 = g.out_neighbors(v1);
        n1.for_each([&](Vertex v2) {
          const SetValue s1 = to_aux(scu, scu.intersect(n1, g.out_neighbors(v2)));
          s1.for_each([&](Vertex v3) { c += scu.intersect_card(s1, g.out_neighbors(v3)); });
        });
        return true;
      });
  for (auto c : counts) out.count += c;
  return out;
}

MiningResult k_clique_star_list(const Graph &g, std::size_t k, StarVariant variant,
                                const MiningConfig &cfg) {
  require_k(k, 2);
  detail::require_oriented(g, "k-clique-star listing");
  const std::size_t n = g.num_vertices();
  MiningResult out;
  out.kind = ResultKind::VertexSets;

  if (variant == StarVariant::A) {
    auto parts = detail::for_each_vertex<std::vector<std::vector<Vertex>>>(
        n, cfg, out, [&](pim::Scu &scu, auto &stars, Vertex u) {
          return list_cliques_at(g, scu, k, u, [&](std::vector<Vertex> c) {
            SetValue common = to_aux(scu, scu.intersect(g.neighbors(c[0]), g.neighbors(c[1])));
            for (std::size_t i = 2; i < c.size() && !common.empty(); ++i)
              common = to_aux(scu, scu.intersect(common, g.neighbors(c[i])));
            if (common.empty()) return true;
            stars.push_back(scu.unite(scu.make_aux_from(c, n), common).to_vector());
            return true;
          });
        });
    out.sets = concat(std::move(parts));
  } else {
    using Acc = std::map<std::vector<Vertex>, SetValue>;
    auto add = [&](pim::Scu &scu, Acc &acc, const std::vector<Vertex> &key,
                   const SetValue &members) {
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, scu.materialize(members));
      else
        it->second = to_aux(scu, scu.unite(it->second, members));
    };
    auto parts = detail::for_each_vertex<Acc>(
        n, cfg, out, [&](pim::Scu &scu, Acc &acc, Vertex u) {
          return list_cliques_at(g, scu, k + 1, u, [&](std::vector<Vertex> c) {
            const SetValue members = scu.make_aux_from(c, n);
            for (std::size_t skip = 0; skip < c.size(); ++skip) {
              std::vector<Vertex> key;
              for (std::size_t i = 0; i < c.size(); ++i)
                if (i != skip) key.push_back(c[i]);
              add(scu, acc, key, members);
            }
            return true;
          });
        });
    pim::Scu join(cfg.scu);
    Acc merged;
    for (auto &part : parts)
      for (auto &[key, s] : part) add(join, merged, key, s);
    out.ledger += join.ledger();
    for (auto &[key, s] : merged) out.sets.push_back(s.to_vector());
  }
  sort_unique(out.sets);
  out.count = out.sets.size();
  return out;
}

}  // namespace sisa::mining
