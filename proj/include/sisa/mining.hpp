#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sisa/graph.hpp"
#include "sisa/ledger.hpp"
#include "sisa/scu.hpp"

namespace sisa::mining {

struct MiningConfig {
  pim::ScuConfig scu;
  std::size_t workers = 1;
  /// Pattern cutoff per worker for listing algorithms.
  std::optional<std::uint64_t> limit;
};

enum class OrderKind : std::uint8_t { Exact, Approx };

struct PrepareOptions {
  OrderKind order = OrderKind::Exact;
  double eps = 0.1;
  RepresentationPolicy policy;
};

/// Orient by a degeneracy order and lay out N / N+ per the policy.
Graph prepare_graph(const Graph &g, const PrepareOptions &opts,
                    RepresentationStats *stats = nullptr);

/// A small unlabeled pattern in canonical form.
struct Pattern {
  std::uint32_t size = 0;
  std::vector<Edge> edges;  // canonical labeling, sorted
  std::uint64_t count = 0;  // induced embeddings in the target
  friend bool operator==(const Pattern &, const Pattern &) = default;
};

enum class ResultKind : std::uint8_t {
  Count,
  VertexSets,
  EdgeSet,
  Scores,
  ParentMap,
  Patterns,
  Score,
};

struct MiningResult {
  ResultKind kind = ResultKind::Count;
  std::uint64_t count = 0;
  std::vector<std::vector<Vertex>> sets;  // sorted tuples, sorted list
  std::vector<Edge> edges;                // sorted
  std::vector<double> scores;             // pair (u<v) order, row-major
  std::vector<std::int64_t> parents;      // -1 = unreachable
  std::vector<Pattern> patterns;          // by size, then edges
  double score = 0.0;
  bool limit_hit = false;
  pim::CostLedger ledger;
  std::vector<isa::Instruction> trace;

  /// One-line digest used by the CSV writer, e.g. "cliques=5 hash=...".
  std::string summary() const;
};

/// FNV-1a digest of the logical payload.
std::uint64_t payload_hash(const MiningResult &r);

// Each algorithm requires an oriented graph where noted.

MiningResult triangle_count(const Graph &g, const MiningConfig &cfg);  // oriented

/// Bron-Kerbosch with Tomita pivoting over the degeneracy order (oriented).
MiningResult maximal_cliques(const Graph &g, const MiningConfig &cfg);

MiningResult k_clique_count(const Graph &g, std::size_t k,
                            const MiningConfig &cfg);  // oriented, k >= 3
MiningResult k_clique_list(const Graph &g, std::size_t k,
                           const MiningConfig &cfg);  // oriented, k >= 3
MiningResult four_clique_count(const Graph &g, const MiningConfig &cfg);

enum class StarVariant : std::uint8_t { A, B };
/// Each k-clique with a non-empty common neighbourhood X yields the star
/// c ∪ X; duplicates removed.
MiningResult k_clique_star_list(const Graph &g, std::size_t k, StarVariant v,
                                const MiningConfig &cfg);  // oriented, k >= 2

/// Induced VF2 matching. Counts ordered embeddings, at most `limit` per
/// worker; with `collect`, sets[i][p] = target vertex of pattern vertex p.
MiningResult subgraph_isomorphism(const Graph &target, const Graph &pattern,
                                  bool labeled, const MiningConfig &cfg,
                                  bool collect = false);

/// Apriori over connected induced patterns; labels ignored.
MiningResult frequent_subgraph_mining(const Graph &target, double sigma,
                                      const MiningConfig &cfg,
                                      std::size_t max_size = 4);

/// Canonical edge list: lexicographically minimal upper-triangle adjacency
/// string over all vertex permutations.
std::vector<Edge> canonical_form(std::uint32_t size, const std::vector<Edge> &edges);

enum class Measure : std::uint8_t {
  Jaccard,
  Overlap,
  AdamicAdar,
  ResourceAlloc,
  CommonNeighbors,
  TotalNeighbors,
};
const char *to_string(Measure m);
Measure measure_from_string(const std::string &s);
inline constexpr Measure kAllMeasures[] = {
    Measure::Jaccard,         Measure::Overlap,
    Measure::AdamicAdar,      Measure::ResourceAlloc,
    Measure::CommonNeighbors, Measure::TotalNeighbors};

double vertex_similarity(const Graph &g, Vertex u, Vertex v, Measure m,
                         pim::Scu &scu);
/// Scores of every pair u < v, row-major.
MiningResult similarity_all_pairs(const Graph &g, Measure m,
                                  const MiningConfig &cfg);

MiningResult jarvis_patrick(const Graph &g, std::size_t tau,
                            const MiningConfig &cfg);

/// Seeded uniform sample of ceil(fraction * m) edges, sorted.
std::vector<Edge> sample_edges(const Graph &g, double fraction,
                               std::uint64_t seed);

/// Effectiveness |E_predict ∩ E_rndm| of a measure. `predict` defaults to
/// |removed|.
MiningResult link_prediction_eval(const Graph &g, const std::vector<Edge> &removed,
                                  Measure m, const MiningConfig &cfg,
                                  std::optional<std::size_t> predict = {});
MiningResult link_prediction_eval(const Graph &g, double fraction, Measure m,
                                  std::uint64_t seed, const MiningConfig &cfg,
                                  std::optional<std::size_t> predict = {});

enum class BfsDirection : std::uint8_t { TopDown, BottomUp };
MiningResult bfs(const Graph &g, Vertex root, BfsDirection dir,
                 const MiningConfig &cfg);

}  // namespace sisa::mining
