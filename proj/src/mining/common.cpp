#include <cstring>
#include <sstream>
#include <stdexcept>

#include "sisa/mining.hpp"

namespace sisa::mining {

Graph prepare_graph(const Graph &g, const PrepareOptions &opts,
                    RepresentationStats *stats) {
  const VertexOrder order = opts.order == OrderKind::Exact
                                ? degeneracy_order_exact(g)
                                : degeneracy_order_approx(g, opts.eps);
  return apply_representation(orient(g, order), opts.policy, stats);
}

const char *to_string(Measure m) {
  switch (m) {
    case Measure::Jaccard:
      return "jaccard";
    case Measure::Overlap:
      return "overlap";
    case Measure::AdamicAdar:
      return "adamic-adar";
    case Measure::ResourceAlloc:
      return "resource-alloc";
    case Measure::CommonNeighbors:
      return "common-neighbors";
    case Measure::TotalNeighbors:
      return "total-neighbors";
  }
  return "?";
}

Measure measure_from_string(const std::string &s) {
  for (Measure m : kAllMeasures)
    if (s == to_string(m)) return m;
  if (s == "aa") return Measure::AdamicAdar;
  if (s == "ra") return Measure::ResourceAlloc;
  if (s == "cn") return Measure::CommonNeighbors;
  if (s == "tn") return Measure::TotalNeighbors;
  throw std::invalid_argument(
      "unknown measure '" + s +
      "' (expected jaccard, overlap, adamic-adar, resource-alloc, "
      "common-neighbors or total-neighbors)");
}

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ull;
  void add(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
};

}  // namespace

std::uint64_t payload_hash(const MiningResult &r) {
  Fnv f;
  f.add(static_cast<std::uint64_t>(r.kind));
  f.add(r.count);
  for (const auto &s : r.sets) {
    f.add(s.size());
    for (auto v : s) f.add(v);
  }
  for (const auto &e : r.edges) f.add((std::uint64_t{e.u} << 32) | e.v);
  for (double d : r.scores) {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof d);
    std::memcpy(&bits, &d, sizeof d);
    f.add(bits);
  }
  for (auto p : r.parents) f.add(static_cast<std::uint64_t>(p));
  for (const auto &p : r.patterns) {
    f.add(p.size);
    f.add(p.count);
    for (const auto &e : p.edges) f.add((std::uint64_t{e.u} << 32) | e.v);
  }
  return f.h;
}

std::string MiningResult::summary() const {
  std::ostringstream os;
  switch (kind) {
    case ResultKind::Count:
      os << "count=" << count;
      break;
    case ResultKind::VertexSets:
      os << "sets=" << sets.size();
      if (count != sets.size()) os << " count=" << count;
      break;
    case ResultKind::EdgeSet:
      os << "edges=" << edges.size();
      break;
    case ResultKind::Scores:
      os << "pairs=" << scores.size();
      break;
    case ResultKind::ParentMap: {
      std::size_t reached = 0;
      for (auto p : parents) reached += p >= 0;
      os << "reached=" << reached;
      break;
    }
    case ResultKind::Patterns:
      os << "patterns=" << patterns.size();
      break;
    case ResultKind::Score:
      os.precision(17);
      os << "score=" << score;
      break;
  }
  if (limit_hit) os << " limit_hit=1";
  os << " hash=" << std::hex << payload_hash(*this);
  return os.str();
}

}  // namespace sisa::mining
