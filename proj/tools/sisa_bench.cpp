#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "CLI11.hpp"
#include "sisa/bench.hpp"
#include "sisa/isa.hpp"

namespace {

using sisa::bench::RunConfig;
using sisa::bench::UsageError;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDataError = 2;

const std::map<std::string, std::string> kHelp = {
    {"graph", "edge-list file"},
    {"labels", "vertex label file (\"vertex_id label\" lines)"},
    {"labeled", "parse edge labels / 'v id label' lines and match labels"},
    {"algo", "tc|mc|kcc|kcl|4cc|kcs|si|fsm|sim|jp|lp|bfs"},
    {"k", "clique size"},
    {"tau", "Jarvis-Patrick threshold"},
    {"sigma", "FSM support fraction"},
    {"fsm_max_size", "largest FSM pattern (1-6)"},
    {"eps", "approximate degeneracy slack"},
    {"measure", "similarity measure"},
    {"pattern", "pattern edge-list for si"},
    {"pattern_labels", "pattern vertex label file"},
    {"fraction", "link prediction removal fraction"},
    {"seed", "RNG seed"},
    {"limit", "per-worker pattern cutoff"},
    {"predict", "link prediction |E_predict|"},
    {"star_variant", "A or B"},
    {"direction", "top-down or bottom-up"},
    {"root", "BFS root (input vertex id)"},
    {"order", "exact or approx degeneracy order"},
    {"t", "dense-bitvector degree threshold (fraction of n)"},
    {"budget", "extra storage budget fraction, inf = open"},
    {"gallop_threshold", "ratio-mode galloping threshold"},
    {"selection", "cost-model or ratio"},
    {"variant_mode", "auto, merge or gallop"},
    {"aux_repr", "db or sa layout for private sets"},
    {"l_M", "DRAM latency"},
    {"b_M", "DRAM bandwidth (bytes/unit)"},
    {"b_L", "link bandwidth (bytes/unit)"},
    {"l_I", "in-situ op latency"},
    {"q", "rows processed in parallel"},
    {"R", "row size in bits"},
    {"W", "word size in bits"},
    {"literal_streaming", "multiply (not divide) by bandwidth in the streaming model"},
    {"cache_bytes", "SCU cache capacity"},
    {"entry_bytes", "SCU metadata entry size"},
    {"workers", "worker threads (env SISA_THREADS)"},
    {"format", "csv or json"},
    {"output", "output file (default stdout)"},
    {"trace_out", "write the instruction trace here"},
};

bool is_flag(const std::string &key) { return key == "labeled" || key == "literal_streaming"; }

struct RunArgs {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option *> options;
  std::string config_file;
  std::vector<std::string> axes;
};

void add_run_options(CLI::App *cmd, RunArgs &args) {
  cmd->add_option("--config", args.config_file, "key=value config file");
  for (const auto &key : sisa::bench::config_keys()) {
    std::string dashed = key;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    std::string names = "--" + dashed;
    if (dashed != key) names += ",--" + key;
    const std::string help = kHelp.count(key) ? kHelp.at(key) : "";
    if (is_flag(key))
      args.options[key] = cmd->add_flag_callback(
          names, [&args, key] { args.values[key] = "true"; }, help);
    else
      args.options[key] = cmd->add_option(names, args.values[key], help);
  }
}

RunConfig build_config(const RunArgs &args) {
  RunConfig cfg;
  if (!args.config_file.empty()) sisa::bench::apply_config_file(cfg, args.config_file);
  if (const char *env = std::getenv("SISA_THREADS"); env && *env)
    sisa::bench::set_param(cfg, "workers", env);
  std::vector<std::string> given;
  for (const auto &[key, opt] : args.options)
    if (opt->count() > 0) given.push_back(key);
  // algo first so relevance checks see the final algorithm
  if (std::count(given.begin(), given.end(), "algo"))
    sisa::bench::set_param(cfg, "algo", args.values.at("algo"));
  for (const auto &key : given) {
    if (!sisa::bench::param_relevant(cfg.algo, key))
      throw UsageError("--" + key + " does not apply to algorithm " + cfg.algo);
    sisa::bench::set_param(cfg, key, args.values.at(key));
  }
  return cfg;
}

void emit(const RunConfig &cfg, const std::vector<sisa::bench::RunRecord> &rows,
          bool single) {
  if (cfg.output.empty()) {
    sisa::bench::write_records(std::cout, rows, cfg.format, single);
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write '" + cfg.output + "'");
  sisa::bench::write_records(out, rows, cfg.format, single);
}

std::vector<std::uint8_t> read_bytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Set-centric graph mining benchmark with simulated PIM cost accounting"};
  app.require_subcommand(1);

  RunArgs run_args, oracle_args, sweep_args;
  auto *run = app.add_subcommand("run", "run one algorithm and emit a result record");
  add_run_options(run, run_args);
  auto *orc = app.add_subcommand("oracle", "brute-force reference (n <= 12)");
  add_run_options(orc, oracle_args);
  auto *swp = app.add_subcommand("sweep", "run over a grid of one or two config axes");
  add_run_options(swp, sweep_args);
  swp->add_option("--axis", sweep_args.axes, "key=v1,v2,... (repeat for a 2-D grid)");

  auto *trace = app.add_subcommand("trace", "instruction trace tools");
  trace->require_subcommand(1);
  std::string enc_in, enc_out, dec_in, dec_out;
  bool enc_raw = false, dec_raw = false;
  auto *enc = trace->add_subcommand("encode", "text listing -> binary trace");
  enc->add_option("--in", enc_in, "text file, one 'mnemonic rd rs1 rs2' per line")->required();
  enc->add_option("--out", enc_out, "binary output")->required();
  enc->add_flag("--raw", enc_raw, "omit the file header");
  auto *dec = trace->add_subcommand("decode", "binary trace -> text listing");
  dec->add_option("--in", dec_in, "binary trace")->required();
  dec->add_option("--out", dec_out, "text output (default stdout)");
  dec->add_flag("--raw", dec_raw, "input has no file header");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) {
      const RunConfig cfg = build_config(run_args);
      emit(cfg, {sisa::bench::run(cfg).record}, true);
    } else if (orc->parsed()) {
      const RunConfig cfg = build_config(oracle_args);
      emit(cfg, {sisa::bench::oracle(cfg).record}, true);
    } else if (swp->parsed()) {
      const RunConfig cfg = build_config(sweep_args);
      std::vector<sisa::bench::SweepAxis> axes;
      for (const auto &a : sweep_args.axes) axes.push_back(sisa::bench::parse_axis(a));
      emit(cfg, sisa::bench::sweep(cfg, axes), false);
    } else if (enc->parsed()) {
      std::ifstream in(enc_in);
      if (!in) throw std::runtime_error("cannot open '" + enc_in + "'");
      std::vector<sisa::isa::Instruction> instrs;
      std::string line;
      for (std::size_t no = 1; std::getline(in, line); ++no) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        try {
          instrs.push_back(sisa::isa::from_text(line));
        } catch (const std::exception &e) {
          throw std::runtime_error("line " + std::to_string(no) + ": " + e.what());
        }
      }
      std::ofstream out(enc_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write '" + enc_out + "'");
      if (enc_raw) {
        const auto bytes = sisa::isa::encode_words(instrs);
        out.write(reinterpret_cast<const char *>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
      } else {
        sisa::isa::write_trace(out, instrs);
      }
    } else if (dec->parsed()) {
      std::vector<sisa::isa::Instruction> instrs;
      if (dec_raw) {
        instrs = sisa::isa::decode_words(read_bytes(dec_in));
      } else {
        std::ifstream in(dec_in, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open '" + dec_in + "'");
        instrs = sisa::isa::read_trace(in);
      }
      std::ofstream file;
      if (!dec_out.empty()) {
        file.open(dec_out);
        if (!file) throw std::runtime_error("cannot write '" + dec_out + "'");
      }
      std::ostream &out = dec_out.empty() ? std::cout : file;
      for (const auto &i : instrs) out << sisa::isa::to_text(i) << '\n';
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}
