#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sisa/bench.hpp"
#include "sisa/cost_model.hpp"
#include "sisa/graph.hpp"
#include "sisa/isa.hpp"
#include "sisa/mining.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sisa;

namespace {

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &pairs) {
  GraphBuilder b(n);
  for (auto [u, v] : pairs) b.add_edge(u, v);
  return b.build();
}

mining::MiningConfig mining_config(std::size_t workers, std::optional<std::uint64_t> limit,
                                   const std::string &variant_mode) {
  mining::MiningConfig c;
  c.workers = workers;
  c.limit = limit;
  c.scu.variant_mode = pim::variant_mode_from_string(variant_mode);
  return c;
}

bench::RunConfig run_config(const py::dict &kw) {
  bench::RunConfig c;
  for (auto [k, v] : kw) {
    std::string value;
    if (py::isinstance<py::bool_>(v)) value = v.cast<bool>() ? "true" : "false";
    else value = py::str(v).cast<std::string>();
    bench::set_param(c, k.cast<std::string>(), value);
  }
  return c;
}

py::dict record_dict(const bench::RunRecord &r) {
  py::dict d;
  const auto fields = bench::split_csv_line(bench::csv_row(r));
  const auto names = bench::split_csv_line(bench::csv_header());
  for (std::size_t i = 0; i < names.size(); ++i) d[py::str(names[i])] = fields[i];
  d["sim_time_total"] = r.sim_time_total;
  d["sim_time_parallel"] = r.sim_time_parallel;
  d["n"] = r.n;
  d["m"] = r.m;
  d["limit_hit"] = r.limit_hit;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sisa, m) {
  m.doc() = "Set-centric graph mining with simulated in-memory set operations";

  py::register_exception<bench::UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), "n"_a, "edges"_a)
      .def_static("load", [](const std::string &path, bool labeled) {
        return load_edge_list_file(path, labeled).graph;
      }, "path"_a, "labeled"_a = false)
      .def_property_readonly("n", &Graph::num_vertices)
      .def_property_readonly("m", &Graph::num_edges)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph &g, Vertex v) { return g.neighbors(v).to_vector(); })
      .def("edges", [](const Graph &g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto &e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("__repr__", [](const Graph &g) {
        std::ostringstream os;
        os << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
        return os.str();
      });

  m.def("degeneracy", [](const Graph &g) { return degeneracy_order_exact(g).degeneracy_bound; });
  m.def("prepare", [](const Graph &g, double t, double budget, bool approx, double eps) {
    mining::PrepareOptions o;
    o.policy.t = t;
    o.policy.budget_fraction = budget;
    o.order = approx ? mining::OrderKind::Approx : mining::OrderKind::Exact;
    o.eps = eps;
    return mining::prepare_graph(g, o);
  }, "graph"_a, "t"_a = 0.4, "budget"_a = 0.1, "approx"_a = false, "eps"_a = 0.1);

  py::class_<mining::MiningResult>(m, "MiningResult")
      .def_readonly("count", &mining::MiningResult::count)
      .def_readonly("sets", &mining::MiningResult::sets)
      .def_property_readonly("edges", [](const mining::MiningResult &r) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto &e : r.edges) out.emplace_back(e.u, e.v);
        return out;
      })
      .def_readonly("scores", &mining::MiningResult::scores)
      .def_readonly("parents", &mining::MiningResult::parents)
      .def_readonly("limit_hit", &mining::MiningResult::limit_hit)
      .def_property_readonly("sim_time", [](const mining::MiningResult &r) {
        return r.ledger.serialized_total({});
      })
      .def_property_readonly("op_counts", [](const mining::MiningResult &r) {
        return r.ledger.op_counts_json();
      })
      .def("summary", &mining::MiningResult::summary);

  m.def("triangle_count", [](const Graph &g, std::size_t w, const std::string &vm) {
    return mining::triangle_count(g, mining_config(w, {}, vm));
  }, "graph"_a, "workers"_a = 1, "variant_mode"_a = "auto");
  m.def("maximal_cliques", [](const Graph &g, std::size_t w, std::optional<std::uint64_t> limit) {
    return mining::maximal_cliques(g, mining_config(w, limit, "auto"));
  }, "graph"_a, "workers"_a = 1, "limit"_a = py::none());
  m.def("k_clique_count", [](const Graph &g, std::size_t k, std::size_t w) {
    return mining::k_clique_count(g, k, mining_config(w, {}, "auto"));
  }, "graph"_a, "k"_a, "workers"_a = 1);
  m.def("subgraph_isomorphism", [](const Graph &t, const Graph &p, std::size_t w) {
    return mining::subgraph_isomorphism(t, p, false, mining_config(w, {}, "auto"));
  }, "target"_a, "pattern"_a, "workers"_a = 1);
  m.def("jarvis_patrick", [](const Graph &g, std::size_t tau) {
    return mining::jarvis_patrick(g, tau, {});
  }, "graph"_a, "tau"_a);
  m.def("similarity", [](const Graph &g, Vertex u, Vertex v, const std::string &measure) {
    pim::Scu scu({});
    return mining::vertex_similarity(g, u, v, mining::measure_from_string(measure), scu);
  }, "graph"_a, "u"_a, "v"_a, "measure"_a = "jaccard");
  m.def("bfs", [](const Graph &g, Vertex root, bool bottom_up) {
    return mining::bfs(g, root, bottom_up ? mining::BfsDirection::BottomUp
                                          : mining::BfsDirection::TopDown, {});
  }, "graph"_a, "root"_a, "bottom_up"_a = false);

  m.def("cost_streaming", [](std::size_t a, std::size_t b) {
    return pim::cost_streaming(a, b, {});
  });
  m.def("cost_random", [](std::size_t a, std::size_t b) { return pim::cost_random(a, b, {}); });
  m.def("cost_pum", [](std::size_t n) { return pim::cost_pum(n, {}); });

  m.def("encode", [](unsigned op, unsigned rs1, unsigned rs2, unsigned rd) {
    if (op >= 0x80 || rs1 >= 32 || rs2 >= 32 || rd >= 32)
      throw std::invalid_argument("field out of range");
    return isa::encode({static_cast<isa::Opcode>(op), static_cast<std::uint8_t>(rs1),
                        static_cast<std::uint8_t>(rs2), static_cast<std::uint8_t>(rd)});
  }, "opcode"_a, "rs1"_a, "rs2"_a, "rd"_a);
  m.def("decode", [](std::uint32_t w) {
    const auto i = isa::decode(w);
    return py::make_tuple(static_cast<unsigned>(i.opcode), i.rs1, i.rs2, i.rd);
  });
  m.def("mnemonic", [](unsigned op) {
    return std::string(isa::mnemonic(static_cast<isa::Opcode>(op)));
  });

  m.def("csv_header", [] { return bench::csv_header(); });
  m.def("run", [](py::kwargs kw) { return record_dict(bench::run(run_config(kw)).record); });
  m.def("oracle", [](py::kwargs kw) { return record_dict(bench::oracle(run_config(kw)).record); });
  m.def("csv_row", [](py::kwargs kw) { return bench::csv_row(bench::run(run_config(kw)).record); });
}
