#include <algorithm>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "sisa/graph.hpp"
#include "sisa/oracle.hpp"

using namespace sisa;

namespace {

LoadedGraph load(const std::string &text, bool labeled = false) {
  std::istringstream in(text);
  return load_edge_list(in, labeled);
}

std::vector<Vertex> vec(const SetValue &s) { return s.to_vector(); }

void check_simple(const Graph &g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += g.degree(v);
    CHECK_FALSE(g.adjacent(v, v));
    g.neighbors(v).for_each([&](Vertex u) { CHECK(g.adjacent(u, v)); });
  }
  CHECK(total == 2 * g.num_edges());
}

void check_orientation(const Graph &g) {
  REQUIRE(g.oriented());
  const auto &rank = g.order()->rank;
  std::size_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    total += g.out_neighbors(v).size();
    g.out_neighbors(v).for_each([&](Vertex u) {
      CHECK(g.adjacent(v, u));
      CHECK(rank[v] < rank[u]);
    });
  }
  CHECK(total == g.num_edges());
  for (const auto &e : g.edges())
    CHECK(g.out_neighbors(e.u).test(e.v) != g.out_neighbors(e.v).test(e.u));
}

}  // namespace

TEST_CASE("edge list examples") {
  auto p = load("0 1\n1 2\n");
  CHECK(p.graph.num_vertices() == 3);
  CHECK(p.graph.num_edges() == 2);
  CHECK(vec(p.graph.neighbors(1)) == std::vector<Vertex>{0, 2});
  CHECK(p.graph.neighbors(1).is_sparse());

  auto d = load("0 1\n0 1\n1 0\n");
  CHECK(d.graph.num_vertices() == 2);
  CHECK(d.graph.num_edges() == 1);
  CHECK(d.stats.duplicate_edges == 2);

  auto s = load("0 0\n0 1\n");
  CHECK(s.graph.num_vertices() == 2);
  CHECK(s.graph.num_edges() == 1);
  CHECK(s.stats.self_loops == 1);
}

TEST_CASE("edge list parsing") {
  auto g = load("# comment\n% other\n\n10 30\n30 20\n");
  CHECK(g.graph.num_vertices() == 3);
  CHECK(g.stats.original_ids == std::vector<std::uint64_t>{10, 20, 30});
  CHECK(g.graph.adjacent(0, 2));
  CHECK(g.graph.adjacent(1, 2));
  for (Vertex v = 0; v < 3; ++v) CHECK(g.graph.neighbors(v).id() == v);

  auto lab = load("v 0 red\nv 1 blue\n0 1 x\n1 2 y\n", true);
  REQUIRE(lab.graph.has_vertex_labels());
  CHECK(lab.graph.label_names()[lab.graph.vertex_label(0)] == "red");
  CHECK(lab.graph.vertex_label(2) == kNoLabel);
  CHECK(lab.graph.label_names()[lab.graph.edge_label(2, 1)] == "y");
  CHECK(lab.graph.edge_label(0, 2) == kNoLabel);

  std::istringstream edges("0 1\n1 2\n"), labels("0 a\n2 b\n");
  auto withfile = load_edge_list(edges, false, &labels);
  CHECK(withfile.graph.label_names()[withfile.graph.vertex_label(2)] == "b");
}

TEST_CASE("edge list errors") {
  CHECK_THROWS_AS(load(""), std::runtime_error);
  CHECK_THROWS_AS(load("# nothing\n"), std::runtime_error);
  try {
    load("0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load("0 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(load("0\n"), ParseError);
  CHECK_THROWS_AS(load("0 1 x\n"), ParseError);
  CHECK_THROWS_AS(load("0 1 x\n1 0 y\n", true), std::invalid_argument);
}

TEST_CASE("loader is independent of line order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> lines;
    for (int i = 0; i < 40; ++i)
      lines.push_back(std::to_string(rng() % 25) + " " + std::to_string(rng() % 25) + " " +
                      (rng() % 2 ? "p" : "q"));
    for (int i = 0; i < 5; ++i)
      lines.push_back("v " + std::to_string(rng() % 25) + " L" + std::to_string(i));
    std::string a;
    for (const auto &l : lines) a += l + "\n";
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string b;
    for (const auto &l : lines) b += l + "\n";
    bool a_ok = true, b_ok = true;
    LoadedGraph ga, gb;
    try { ga = load(a, true); } catch (const std::invalid_argument &) { a_ok = false; }
    try { gb = load(b, true); } catch (const std::invalid_argument &) { b_ok = false; }
    REQUIRE(a_ok == b_ok);
    if (!a_ok) continue;
    CHECK(ga.graph.num_vertices() == gb.graph.num_vertices());
    CHECK(ga.graph.edges() == gb.graph.edges());
    CHECK(ga.graph.label_names() == gb.graph.label_names());
    CHECK(ga.stats.original_ids == gb.stats.original_ids);
    for (Vertex v = 0; v < ga.graph.num_vertices(); ++v)
      CHECK(ga.graph.vertex_label(v) == gb.graph.vertex_label(v));
    for (const auto &e : ga.graph.edges())
      CHECK(ga.graph.edge_label(e.u, e.v) == gb.graph.edge_label(e.u, e.v));
  }
}

TEST_CASE("builder validation") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(b.set_vertex_label(5, "a"), std::invalid_argument);
  for (const auto &[name, g] : corpus::small_graphs()) {
    CAPTURE(name);
    check_simple(g);
  }
}

TEST_CASE("exact degeneracy examples") {
  CHECK(degeneracy_order_exact(corpus::complete(4)).degeneracy_bound == 3);
  CHECK(degeneracy_order_exact(corpus::star(5)).degeneracy_bound == 1);
  CHECK(degeneracy_order_exact(corpus::cycle(5)).degeneracy_bound == 2);
  CHECK(degeneracy_order_exact(corpus::edgeless(3)).degeneracy_bound == 0);
  // ties go to the lowest id
  CHECK(degeneracy_order_exact(corpus::complete(4)).sequence() ==
        std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("exact degeneracy matches the definition") {
  for (const auto &[name, g] : corpus::small_graphs()) {
    CAPTURE(name);
    const auto order = degeneracy_order_exact(g);
    CHECK(order.degeneracy_bound == oracle::degeneracy(g));
    CHECK(max_out_degree(g, order) == order.degeneracy_bound);
    auto ranks = order.rank;
    std::sort(ranks.begin(), ranks.end());
    for (std::uint32_t i = 0; i < ranks.size(); ++i) CHECK(ranks[i] == i);
  }
}

TEST_CASE("approximate degeneracy examples") {
  const auto s = degeneracy_order_approx(corpus::star(5), 0.1);
  CHECK(s.rounds == 2);
  CHECK(s.sequence().back() == 0);
  CHECK(s.degeneracy_bound <= 1);
  CHECK(degeneracy_order_approx(corpus::complete(4), 0.1).rounds == 1);
  const auto c = degeneracy_order_approx(corpus::cycle(5), 0.5);
  CHECK(c.rounds == 1);
  CHECK(c.degeneracy_bound <= 5);
  CHECK_THROWS(degeneracy_order_approx(corpus::cycle(5), 0.0));
}

TEST_CASE("approximate degeneracy bound") {
  for (double eps : {0.1, 0.5, 1.0})
    for (const auto &[name, g] : corpus::small_graphs()) {
      CAPTURE(name);
      CAPTURE(eps);
      const auto order = degeneracy_order_approx(g, eps);
      const auto c = static_cast<double>(oracle::degeneracy(g));
      CHECK(static_cast<double>(max_out_degree(g, order)) <= (2 + eps) * c);
      CHECK(order.degeneracy_bound == max_out_degree(g, order));
    }
}

TEST_CASE("orientation") {
  auto k3 = corpus::complete(3);
  VertexOrder id_order{{0, 1, 2}};
  auto o = orient(k3, id_order);
  CHECK(vec(o.out_neighbors(0)) == std::vector<Vertex>{1, 2});
  CHECK(vec(o.out_neighbors(1)) == std::vector<Vertex>{2});
  CHECK(o.out_neighbors(2).empty());
  CHECK(o.out_neighbors(1).id() == 3 + 1);

  auto p = orient(corpus::path(3), id_order);
  CHECK(vec(p.out_neighbors(0)) == std::vector<Vertex>{1});
  CHECK(vec(p.out_neighbors(1)) == std::vector<Vertex>{2});

  auto k4 = corpus::complete(4);
  CHECK(max_out_degree(k4, degeneracy_order_exact(k4)) == 3);

  CHECK_THROWS_AS(orient(k3, VertexOrder{{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(orient(k3, VertexOrder{{0, 1}}), std::invalid_argument);
  CHECK_THROWS(k3.out_neighbors(0));

  for (const auto &[name, g] : corpus::small_graphs()) {
    CAPTURE(name);
    check_orientation(orient(g, degeneracy_order_exact(g)));
    check_orientation(orient(g, degeneracy_order_approx(g, 0.1)));
  }
}

TEST_CASE("representation layout") {
  const auto g = corpus::rmat(8, 2000, 3);
  const auto o = orient(g, degeneracy_order_exact(g));
  RepresentationPolicy open;
  open.t = 0.0;
  open.budget_fraction = std::numeric_limits<double>::infinity();
  RepresentationStats st;
  const auto all_dense = apply_representation(o, open, &st);
  CHECK(st.dense_sets == 2 * g.num_vertices());
  CHECK(all_dense.dense_neighborhoods() == 2 * g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    CHECK(all_dense.neighbors(v).to_vector() == o.neighbors(v).to_vector());
    CHECK(all_dense.out_neighbors(v).to_vector() == o.out_neighbors(v).to_vector());
    CHECK(all_dense.neighbors(v).id() == v);
    CHECK(all_dense.out_neighbors(v).id() == g.num_vertices() + v);
  }

  RepresentationPolicy capped;
  capped.t = 0.0;
  capped.budget_fraction = 0.10;
  const auto c = apply_representation(o, capped, &st);
  CHECK(st.charged_bits <= static_cast<std::int64_t>(0.10 * static_cast<double>(st.baseline_bits)));
  CHECK(st.actual_extra_bits <= st.charged_bits);
  CHECK(st.dense_sets + st.sparse_sets == 2 * g.num_vertices());
  CHECK(c.dense_neighborhoods() == st.dense_sets);

  RepresentationPolicy none;
  none.t = 1.0;
  apply_representation(o, none, &st);
  CHECK(st.dense_sets == 0);
  CHECK(st.actual_extra_bits == 0);
}
