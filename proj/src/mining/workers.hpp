#pragma once

#include <exception>
#include <thread>
#include <vector>

#include "sisa/mining.hpp"
#include "sisa/set_ops.hpp"

namespace sisa::mining::detail {

/// Runs fn(scu, state, v) for every vertex v, cyclically partitioned over
/// cfg.workers threads. fn returns false to stop its worker early. Ledgers
/// and traces are folded into `out` in worker order.
template <class State, class Fn>
std::vector<State> for_each_vertex(std::size_t n, const MiningConfig &cfg,
                                   MiningResult &out, Fn &&fn) {
  const std::size_t workers = std::max<std::size_t>(1, cfg.workers);
  std::vector<State> states(workers);
  std::vector<pim::Scu> scus;
  scus.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) scus.emplace_back(cfg.scu);

  auto body = [&](std::size_t w) {
    for (std::size_t v = w; v < n; v += workers)
      if (!fn(scus[w], states[w], static_cast<Vertex>(v))) break;
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          body(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto &t : pool) t.join();
    for (auto &e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (auto &scu : scus) {
    out.ledger += scu.ledger();
    out.trace.insert(out.trace.end(), scu.trace().begin(), scu.trace().end());
  }
  return states;
}

/// Re-lay `s` in the controller's auxiliary layout, keeping its id.
inline SetValue to_aux(const pim::Scu &scu, SetValue s) {
  if (s.repr() == scu.config().aux_repr) return s;
  const SetId id = s.id();
  SetValue out = convert(s, scu.config().aux_repr);
  out.set_id(id);
  return out;
}

inline void require_oriented(const Graph &g, const char *algo) {
  if (!g.oriented())
    throw std::invalid_argument(std::string(algo) +
                                " needs an oriented graph (see prepare_graph)");
}

/// Applies the per-worker pattern cutoff; returns false once exceeded.
inline bool within_limit(const MiningConfig &cfg, std::uint64_t found,
                         bool &limit_hit) {
  if (cfg.limit && found > *cfg.limit) {
    limit_hit = true;
    return false;
  }
  return true;
}

}  // namespace sisa::mining::detail
