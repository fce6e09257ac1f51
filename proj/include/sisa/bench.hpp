#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sisa/mining.hpp"

namespace sisa::bench {

/// Bad configuration; the CLI maps it to exit status 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char *kAlgorithms[] = {
    "tc", "mc", "kcc", "kcl", "4cc", "kcs", "si", "fsm", "sim", "jp", "lp", "bfs"};

struct RunConfig {
  std::string graph;
  std::string labels;
  bool labeled = false;

  std::string algo = "tc";
  std::size_t k = 3;
  std::size_t tau = 0;
  double sigma = 0.0;
  double eps = 0.1;
  std::string measure = "jaccard";
  std::string pattern;
  std::string pattern_labels;
  double fraction = 0.1;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> limit;
  std::string star_variant = "A";
  std::string direction = "top-down";
  Vertex root = 0;
  std::size_t fsm_max_size = 4;
  std::optional<std::size_t> predict;
  std::string order = "exact";

  RepresentationPolicy policy;
  pim::CostParams params;
  pim::SelectionMode selection = pim::SelectionMode::CostModel;
  pim::VariantMode variant_mode = pim::VariantMode::Auto;
  Repr aux_repr = Repr::DenseBitvector;
  std::size_t cache_bytes = 32768;
  std::size_t entry_bytes = 16;
  std::size_t workers = 1;

  std::string format = "csv";
  std::string output;
  std::string trace_out;

  /// Throws UsageError when a value is out of range for the chosen algorithm.
  void validate() const;
  mining::MiningConfig mining_config() const;
};

/// Config keys accepted by set_param, config files and sweeps.
std::vector<std::string> config_keys();

/// Parses `value` into the field named `key`. Throws UsageError.
void set_param(RunConfig &cfg, const std::string &key, const std::string &value);

/// key=value lines; '#' starts a comment. Throws UsageError with the line.
void apply_config_file(RunConfig &cfg, std::istream &in);
void apply_config_file(RunConfig &cfg, const std::string &path);

/// Algorithms whose output depends on the parameter `key`.
bool param_relevant(const std::string &algo, const std::string &key);

struct RunRecord {
  std::string algo;
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string param_k, param_tau, param_sigma, param_eps, measure;
  double t = 0;
  std::string budget;
  std::string gallop_mode;
  double gallop_threshold = 0;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::string result_summary;
  double sim_time_total = 0;
  double sim_time_pnm_stream = 0;
  double sim_time_pnm_random = 0;
  double sim_time_pum = 0;
  std::uint64_t scu_hits = 0;
  std::uint64_t scu_misses = 0;
  std::string op_counts_json = "{}";
  double wall_ms = 0;

  // Not part of the CSV schema.
  double sim_time_parallel = 0;
  bool limit_hit = false;
};

struct RunOutput {
  RunRecord record;
  mining::MiningResult result;
};

/// Loads the graph, lays it out, runs the algorithm.
RunOutput run(const RunConfig &cfg);

/// Largest graph the oracle subcommand accepts.
inline constexpr std::size_t kOracleMaxVertices = 12;

/// Brute-force twin of run(); same summary format, zero simulated time.
RunOutput oracle(const RunConfig &cfg);

struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};
/// "key=v1,v2,..." -> axis. Throws UsageError.
SweepAxis parse_axis(const std::string &text);

/// One run per grid point, first axis outermost.
std::vector<RunRecord> sweep(const RunConfig &base, const std::vector<SweepAxis> &axes);

const std::string &csv_header();
std::string csv_row(const RunRecord &r);
/// RFC 4180 field splitting of one CSV line.
std::vector<std::string> split_csv_line(const std::string &line);
RunRecord record_from_csv(const std::string &line);

std::string to_json(const RunRecord &r);
std::string to_json(const std::vector<RunRecord> &rs);

void write_records(std::ostream &out, const std::vector<RunRecord> &rs,
                   const std::string &format, bool single);

}  // namespace sisa::bench
