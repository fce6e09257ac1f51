#include "sisa/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "sisa/oracle.hpp"

namespace sisa::bench {

namespace {

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_double(const std::string &key, const std::string &v) {
  if (v == "inf" || v == "open") return std::numeric_limits<double>::infinity();
  double x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw UsageError("bad value for " + key + ": '" + v + "' (expected a number)");
  return x;
}

std::uint64_t parse_uint(const std::string &key, const std::string &v) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw UsageError("bad value for " + key + ": '" + v +
                     "' (expected a non-negative integer)");
  return x;
}

bool parse_bool(const std::string &key, const std::string &v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("bad value for " + key + ": '" + v + "' (expected true/false)");
}

template <class F>
auto as_usage(F &&f) {
  try {
    return f();
  } catch (const UsageError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

bool is_algo(const std::string &a) {
  return std::find_if(std::begin(kAlgorithms), std::end(kAlgorithms),
                      [&](const char *x) { return a == x; }) != std::end(kAlgorithms);
}

struct KeyInfo {
  const char *key;
  const char *algos;  // space-separated, empty = every algorithm
};

// clang-format off
constexpr KeyInfo kKeys[] = {
    {"graph", ""}, {"labels", ""}, {"labeled", ""}, {"algo", ""},
    {"k", "kcc kcl kcs"}, {"tau", "jp"}, {"sigma", "fsm"}, {"fsm_max_size", "fsm"},
    {"eps", ""}, {"measure", "sim lp"}, {"pattern", "si"}, {"pattern_labels", "si"},
    {"fraction", "lp"}, {"seed", ""}, {"limit", "mc kcl si"}, {"predict", "lp"},
    {"star_variant", "kcs"}, {"direction", "bfs"}, {"root", "bfs"}, {"order", ""},
    {"t", ""}, {"budget", ""}, {"gallop_threshold", ""}, {"selection", ""},
    {"variant_mode", ""}, {"aux_repr", ""}, {"l_M", ""}, {"b_M", ""}, {"b_L", ""},
    {"l_I", ""}, {"q", ""}, {"R", ""}, {"W", ""}, {"literal_streaming", ""},
    {"cache_bytes", ""}, {"entry_bytes", ""}, {"workers", ""}, {"format", ""},
    {"output", ""}, {"trace_out", ""},
};
// clang-format on

}  // namespace

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto &k : kKeys) out.emplace_back(k.key);
  return out;
}

bool param_relevant(const std::string &algo, const std::string &key) {
  for (const auto &k : kKeys) {
    if (key != k.key) continue;
    std::istringstream is(k.algos);
    std::string a;
    bool any = false;
    while (is >> a) {
      any = true;
      if (a == algo) return true;
    }
    return !any;
  }
  return false;
}

void set_param(RunConfig &c, const std::string &key, const std::string &v) {
  auto &p = c.params;
  if (key == "graph") c.graph = v;
  else if (key == "labels") c.labels = v;
  else if (key == "labeled") c.labeled = parse_bool(key, v);
  else if (key == "algo") {
    if (!is_algo(v)) throw UsageError("unknown algorithm '" + v + "'");
    c.algo = v;
  } else if (key == "k") c.k = parse_uint(key, v);
  else if (key == "tau") c.tau = parse_uint(key, v);
  else if (key == "sigma") c.sigma = parse_double(key, v);
  else if (key == "fsm_max_size") c.fsm_max_size = parse_uint(key, v);
  else if (key == "eps") c.eps = parse_double(key, v);
  else if (key == "measure") {
    as_usage([&] { return mining::measure_from_string(v); });
    c.measure = v;
  } else if (key == "pattern") c.pattern = v;
  else if (key == "pattern_labels") c.pattern_labels = v;
  else if (key == "fraction") c.fraction = parse_double(key, v);
  else if (key == "seed") c.seed = parse_uint(key, v);
  else if (key == "limit") c.limit = parse_uint(key, v);
  else if (key == "predict") c.predict = parse_uint(key, v);
  else if (key == "star_variant") c.star_variant = v;
  else if (key == "direction") c.direction = v;
  else if (key == "root") c.root = static_cast<Vertex>(parse_uint(key, v));
  else if (key == "order") c.order = v;
  else if (key == "t") c.policy.t = parse_double(key, v);
  else if (key == "budget") c.policy.budget_fraction = parse_double(key, v);
  else if (key == "gallop_threshold") c.policy.galloping_threshold = parse_double(key, v);
  else if (key == "selection")
    c.selection = as_usage([&] { return pim::selection_mode_from_string(v); });
  else if (key == "variant_mode")
    c.variant_mode = as_usage([&] { return pim::variant_mode_from_string(v); });
  else if (key == "aux_repr") {
    if (v == "db" || v == "dense") c.aux_repr = Repr::DenseBitvector;
    else if (v == "sa" || v == "sparse") c.aux_repr = Repr::SparseArray;
    else throw UsageError("bad value for aux_repr: '" + v + "' (expected db or sa)");
  } else if (key == "l_M") p.mem_latency = parse_double(key, v);
  else if (key == "b_M") p.mem_bandwidth = parse_double(key, v);
  else if (key == "b_L") p.link_bandwidth = parse_double(key, v);
  else if (key == "l_I") p.insitu_latency = parse_double(key, v);
  else if (key == "q") p.parallel_rows = parse_uint(key, v);
  else if (key == "R") p.row_bits = parse_uint(key, v);
  else if (key == "W") {
    p.word_bits = static_cast<unsigned>(parse_uint(key, v));
    c.policy.word_bits = p.word_bits;
  } else if (key == "literal_streaming") p.literal_streaming = parse_bool(key, v);
  else if (key == "cache_bytes") c.cache_bytes = parse_uint(key, v);
  else if (key == "entry_bytes") c.entry_bytes = parse_uint(key, v);
  else if (key == "workers") c.workers = parse_uint(key, v);
  else if (key == "format") c.format = v;
  else if (key == "output") c.output = v;
  else if (key == "trace_out") c.trace_out = v;
  else throw UsageError("unknown config key '" + key + "'");
}

void apply_config_file(RunConfig &cfg, std::istream &in) {
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(no) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    try {
      set_param(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const UsageError &e) {
      throw UsageError("config line " + std::to_string(no) + ": " + e.what());
    }
  }
}

void apply_config_file(RunConfig &cfg, const std::string &path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  apply_config_file(cfg, in);
}

void RunConfig::validate() const {
  if (graph.empty()) throw UsageError("no graph given (--graph PATH)");
  if (!is_algo(algo)) throw UsageError("unknown algorithm '" + algo + "'");
  if ((algo == "kcc" || algo == "kcl") && k < 3)
    throw UsageError("k must be at least 3 for " + algo + ", got " + std::to_string(k));
  if (algo == "kcs" && k < 2)
    throw UsageError("k must be at least 2 for kcs, got " + std::to_string(k));
  if (!(sigma >= 0)) throw UsageError("sigma must be non-negative");
  if (fsm_max_size < 1 || fsm_max_size > 6)
    throw UsageError("fsm_max_size must be in [1, 6]");
  if (!(eps > 0)) throw UsageError("eps must be positive");
  if (order != "exact" && order != "approx")
    throw UsageError("order must be exact or approx");
  as_usage([&] { return mining::measure_from_string(measure); });
  if (algo == "si" && pattern.empty()) throw UsageError("si needs --pattern PATH");
  if (algo == "lp" && !(fraction > 0 && fraction < 1))
    throw UsageError("fraction must be in (0, 1)");
  if (star_variant != "A" && star_variant != "B")
    throw UsageError("star_variant must be A or B");
  if (direction != "top-down" && direction != "bottom-up")
    throw UsageError("direction must be top-down or bottom-up");
  if (workers < 1) throw UsageError("workers must be at least 1");
  if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
  if (entry_bytes == 0) throw UsageError("entry_bytes must be positive");
  as_usage([&] {
    policy.validate();
    params.validate();
    return 0;
  });
}

mining::MiningConfig RunConfig::mining_config() const {
  mining::MiningConfig m;
  m.scu.params = params;
  m.scu.policy = policy;
  m.scu.selection = selection;
  m.scu.variant_mode = variant_mode;
  m.scu.cache_bytes = cache_bytes;
  m.scu.entry_bytes = entry_bytes;
  m.scu.aux_repr = aux_repr;
  m.scu.record_trace = !trace_out.empty();
  m.workers = workers;
  m.limit = limit;
  return m;
}

namespace {

struct Loaded {
  LoadedGraph g;
  std::optional<LoadedGraph> pattern;
  Vertex root = 0;
};

Loaded load_inputs(const RunConfig &cfg) {
  Loaded l;
  l.g = load_edge_list_file(cfg.graph, cfg.labeled, cfg.labels);
  if (cfg.algo == "si")
    l.pattern = load_edge_list_file(cfg.pattern, cfg.labeled, cfg.pattern_labels);
  if (cfg.algo == "bfs") {
    const auto &ids = l.g.stats.original_ids;
    auto it = std::lower_bound(ids.begin(), ids.end(), std::uint64_t{cfg.root});
    if (it == ids.end() || *it != cfg.root)
      throw std::runtime_error("BFS root " + std::to_string(cfg.root) +
                               " is not a vertex of the graph");
    l.root = static_cast<Vertex>(it - ids.begin());
  }
  return l;
}

RunRecord base_record(const RunConfig &cfg, const Graph &g) {
  RunRecord r;
  r.algo = cfg.algo;
  r.graph = std::filesystem::path(cfg.graph).stem().string();
  r.n = g.num_vertices();
  r.m = g.num_edges();
  if (param_relevant(cfg.algo, "k")) r.param_k = std::to_string(cfg.k);
  if (param_relevant(cfg.algo, "tau")) r.param_tau = std::to_string(cfg.tau);
  if (param_relevant(cfg.algo, "sigma")) r.param_sigma = fmt(cfg.sigma);
  if (cfg.order == "approx") r.param_eps = fmt(cfg.eps);
  if (param_relevant(cfg.algo, "measure")) r.measure = cfg.measure;
  r.t = cfg.policy.t;
  r.budget = fmt(cfg.policy.budget_fraction);
  r.gallop_mode = cfg.variant_mode == pim::VariantMode::Auto
                      ? pim::to_string(cfg.selection)
                      : pim::to_string(cfg.variant_mode);
  r.gallop_threshold = cfg.policy.galloping_threshold;
  r.workers = cfg.workers;
  r.seed = cfg.seed;
  return r;
}

void fill_costs(RunRecord &r, const mining::MiningResult &res, const pim::CostParams &p) {
  using pim::Backend;
  r.result_summary = res.summary();
  r.limit_hit = res.limit_hit;
  r.sim_time_total = res.ledger.serialized_total(p);
  r.sim_time_parallel = res.ledger.parallel_total(p);
  r.sim_time_pnm_stream = res.ledger.time(Backend::PnmStream, p);
  r.sim_time_pnm_random = res.ledger.time(Backend::PnmRandom, p);
  r.sim_time_pum = res.ledger.time(Backend::Pum, p);
  r.scu_hits = res.ledger.scu_hits();
  r.scu_misses = res.ledger.scu_misses();
  r.op_counts_json = res.ledger.op_counts_json();
}

mining::MiningResult execute(const RunConfig &cfg, const Graph &g, const Loaded &in) {
  using namespace mining;
  const MiningConfig mc = cfg.mining_config();
  const std::string &a = cfg.algo;
  if (a == "tc") return triangle_count(g, mc);
  if (a == "mc") return maximal_cliques(g, mc);
  if (a == "kcc") return k_clique_count(g, cfg.k, mc);
  if (a == "kcl") return k_clique_list(g, cfg.k, mc);
  if (a == "4cc") return four_clique_count(g, mc);
  if (a == "kcs")
    return k_clique_star_list(g, cfg.k,
                              cfg.star_variant == "A" ? StarVariant::A : StarVariant::B, mc);
  if (a == "si") return subgraph_isomorphism(g, in.pattern->graph, cfg.labeled, mc);
  if (a == "fsm") return frequent_subgraph_mining(g, cfg.sigma, mc, cfg.fsm_max_size);
  if (a == "sim") return similarity_all_pairs(g, measure_from_string(cfg.measure), mc);
  if (a == "jp") return jarvis_patrick(g, cfg.tau, mc);
  if (a == "lp")
    return link_prediction_eval(g, cfg.fraction, measure_from_string(cfg.measure), cfg.seed,
                                mc, cfg.predict);
  if (a == "bfs")
    return bfs(g, in.root,
               cfg.direction == "top-down" ? BfsDirection::TopDown : BfsDirection::BottomUp,
               mc);
  throw UsageError("unknown algorithm '" + a + "'");
}

}  // namespace

RunOutput run(const RunConfig &cfg) {
  cfg.validate();
  const Loaded in = load_inputs(cfg);
  const auto start = std::chrono::steady_clock::now();
  mining::PrepareOptions prep;
  prep.order = cfg.order == "exact" ? mining::OrderKind::Exact : mining::OrderKind::Approx;
  prep.eps = cfg.eps;
  prep.policy = cfg.policy;
  const Graph g = mining::prepare_graph(in.g.graph, prep);
  RunOutput out{base_record(cfg, g), execute(cfg, g, in)};
  out.record.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  fill_costs(out.record, out.result, cfg.params);
  if (!cfg.trace_out.empty()) {
    std::ofstream f(cfg.trace_out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write trace file '" + cfg.trace_out + "'");
    isa::write_trace(f, out.result.trace);
  }
  return out;
}

RunOutput oracle(const RunConfig &cfg) {
  cfg.validate();
  const Loaded in = load_inputs(cfg);
  const Graph &g = in.g.graph;
  if (g.num_vertices() > kOracleMaxVertices)
    throw std::runtime_error("oracle refuses graphs with more than " +
                             std::to_string(kOracleMaxVertices) + " vertices (got " +
                             std::to_string(g.num_vertices()) + ")");
  using mining::ResultKind;
  const auto start = std::chrono::steady_clock::now();
  mining::MiningResult r;
  const std::string &a = cfg.algo;
  auto sets = [&](oracle::VertexSets s) {
    std::sort(s.begin(), s.end());
    r.kind = ResultKind::VertexSets;
    r.count = s.size();
    r.sets = std::move(s);
  };
  if (a == "tc") r.count = oracle::triangles(g);
  else if (a == "mc") sets(oracle::maximal_cliques(g));
  else if (a == "kcc") r.count = oracle::k_cliques(g, cfg.k).size();
  else if (a == "kcl") sets(oracle::k_cliques(g, cfg.k));
  else if (a == "4cc") r.count = oracle::k_cliques(g, 4).size();
  else if (a == "kcs") sets(oracle::k_clique_stars(g, cfg.k));
  else if (a == "si") r.count = oracle::embeddings(g, in.pattern->graph, cfg.labeled).size();
  else if (a == "fsm") {
    r.kind = ResultKind::Patterns;
    r.patterns = oracle::frequent_patterns(g, cfg.sigma, cfg.fsm_max_size);
    r.count = r.patterns.size();
  } else if (a == "sim") {
    r.kind = ResultKind::Scores;
    const auto m = mining::measure_from_string(cfg.measure);
    for (Vertex u = 0; u < g.num_vertices(); ++u)
      for (Vertex v = u + 1; v < g.num_vertices(); ++v)
        r.scores.push_back(oracle::similarity(g, u, v, m));
    r.count = r.scores.size();
  } else if (a == "jp") {
    r.kind = ResultKind::EdgeSet;
    r.edges = oracle::jarvis_patrick(g, cfg.tau);
    r.count = r.edges.size();
  } else if (a == "lp") {
    r.count = oracle::link_prediction(g, mining::sample_edges(g, cfg.fraction, cfg.seed),
                                      mining::measure_from_string(cfg.measure), cfg.predict,
                                      &r.edges);
  } else if (a == "bfs") {
    r.kind = ResultKind::ParentMap;
    r.parents = oracle::bfs_parents(g, in.root);
    for (auto p : r.parents) r.count += p >= 0;
  }
  RunOutput out{base_record(cfg, g), std::move(r)};
  out.record.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  fill_costs(out.record, out.result, cfg.params);
  return out;
}

SweepAxis parse_axis(const std::string &text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0)
    throw UsageError("sweep axis '" + text + "' must look like key=v1,v2,...");
  SweepAxis axis{text.substr(0, eq), {}};
  const auto keys = config_keys();
  if (std::find(keys.begin(), keys.end(), axis.key) == keys.end())
    throw UsageError("unknown sweep key '" + axis.key + "'");
  std::istringstream is(text.substr(eq + 1));
  for (std::string v; std::getline(is, v, ',');)
    if (!v.empty()) axis.values.push_back(v);
  if (axis.values.empty()) throw UsageError("sweep axis '" + axis.key + "' has no values");
  return axis;
}

std::vector<RunRecord> sweep(const RunConfig &base, const std::vector<SweepAxis> &axes) {
  if (axes.empty()) throw UsageError("empty sweep grid: give at least one axis");
  if (axes.size() > 2) throw UsageError("a sweep takes one or two axes");
  for (const auto &a : axes)
    if (a.values.empty()) throw UsageError("empty sweep grid on axis '" + a.key + "'");
  std::vector<RunConfig> grid;
  for (const auto &v0 : axes[0].values) {
    RunConfig c = base;
    set_param(c, axes[0].key, v0);
    if (axes.size() == 1) {
      grid.push_back(c);
      continue;
    }
    for (const auto &v1 : axes[1].values) {
      RunConfig c2 = c;
      set_param(c2, axes[1].key, v1);
      grid.push_back(c2);
    }
  }
  for (const auto &c : grid) c.validate();
  std::vector<RunRecord> rows;
  for (const auto &c : grid) rows.push_back(run(c).record);
  return rows;
}

// --- output ---------------------------------------------------------------

const std::string &csv_header() {
  static const std::string h =
      "algo,graph,n,m,param_k,param_tau,param_sigma,param_eps,measure,t,budget,"
      "gallop_mode,gallop_threshold,workers,seed,result_summary,sim_time_total,"
      "sim_time_pnm_stream,sim_time_pnm_random,sim_time_pum,scu_hits,scu_misses,"
      "op_counts_json,wall_ms";
  return h;
}

namespace {

std::string quote(const std::string &s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string csv_row(const RunRecord &r) {
  const std::vector<std::string> f = {
      r.algo, r.graph, std::to_string(r.n), std::to_string(r.m), r.param_k, r.param_tau,
      r.param_sigma, r.param_eps, r.measure, fmt(r.t), r.budget, r.gallop_mode,
      fmt(r.gallop_threshold), std::to_string(r.workers), std::to_string(r.seed),
      r.result_summary, fmt(r.sim_time_total), fmt(r.sim_time_pnm_stream),
      fmt(r.sim_time_pnm_random), fmt(r.sim_time_pum), std::to_string(r.scu_hits),
      std::to_string(r.scu_misses), r.op_counts_json, fmt(r.wall_ms)};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += quote(f[i]);
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string &line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  return out;
}

RunRecord record_from_csv(const std::string &line) {
  const auto f = split_csv_line(line);
  if (f.size() != 24)
    throw std::runtime_error("expected 24 CSV fields, got " + std::to_string(f.size()));
  auto num = [&](std::size_t i) { return parse_double("csv field", f[i]); };
  auto uint = [&](std::size_t i) { return parse_uint("csv field", f[i]); };
  RunRecord r;
  r.algo = f[0];
  r.graph = f[1];
  r.n = uint(2);
  r.m = uint(3);
  r.param_k = f[4];
  r.param_tau = f[5];
  r.param_sigma = f[6];
  r.param_eps = f[7];
  r.measure = f[8];
  r.t = num(9);
  r.budget = f[10];
  r.gallop_mode = f[11];
  r.gallop_threshold = num(12);
  r.workers = uint(13);
  r.seed = uint(14);
  r.result_summary = f[15];
  r.sim_time_total = num(16);
  r.sim_time_pnm_stream = num(17);
  r.sim_time_pnm_random = num(18);
  r.sim_time_pum = num(19);
  r.scu_hits = uint(20);
  r.scu_misses = uint(21);
  r.op_counts_json = f[22];
  r.wall_ms = num(23);
  return r;
}

namespace {

nlohmann::ordered_json json_of(const RunRecord &r) {
  nlohmann::ordered_json j;
  j["algo"] = r.algo;
  j["graph"] = r.graph;
  j["n"] = r.n;
  j["m"] = r.m;
  j["param_k"] = r.param_k;
  j["param_tau"] = r.param_tau;
  j["param_sigma"] = r.param_sigma;
  j["param_eps"] = r.param_eps;
  j["measure"] = r.measure;
  j["t"] = r.t;
  j["budget"] = r.budget;
  j["gallop_mode"] = r.gallop_mode;
  j["gallop_threshold"] = r.gallop_threshold;
  j["workers"] = r.workers;
  j["seed"] = r.seed;
  j["result_summary"] = r.result_summary;
  j["sim_time_total"] = r.sim_time_total;
  j["sim_time_parallel"] = r.sim_time_parallel;
  j["sim_time_pnm_stream"] = r.sim_time_pnm_stream;
  j["sim_time_pnm_random"] = r.sim_time_pnm_random;
  j["sim_time_pum"] = r.sim_time_pum;
  j["scu_hits"] = r.scu_hits;
  j["scu_misses"] = r.scu_misses;
  j["op_counts"] = nlohmann::ordered_json::parse(r.op_counts_json);
  j["limit_hit"] = r.limit_hit;
  j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace

std::string to_json(const RunRecord &r) { return json_of(r).dump(2); }

std::string to_json(const std::vector<RunRecord> &rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &r : rs) arr.push_back(json_of(r));
  return arr.dump(2);
}

void write_records(std::ostream &out, const std::vector<RunRecord> &rs,
                   const std::string &format, bool single) {
  if (format == "json") {
    out << (single && rs.size() == 1 ? to_json(rs.front()) : to_json(rs)) << '\n';
    return;
  }
  out << csv_header() << '\n';
  for (const auto &r : rs) out << csv_row(r) << '\n';
}

}  // namespace sisa::bench
