#include "sisa/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "sisa/set_ops.hpp"

namespace sisa {

std::vector<Vertex> VertexOrder::sequence() const {
  std::vector<Vertex> seq(rank.size());
  for (std::size_t v = 0; v < rank.size(); ++v) seq[rank[v]] = static_cast<Vertex>(v);
  return seq;
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto &e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

const SetValue &Graph::out_neighbors(Vertex v) const {
  if (out_neighborhoods_.empty())
    throw std::logic_error("graph is not oriented; call orient() first");
  return out_neighborhoods_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    neighborhoods_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  return out;
}

Label Graph::edge_label(Vertex u, Vertex v) const {
  if (edge_labels_.empty()) return kNoLabel;
  const auto &row = edge_labels_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::pair{v, Label{-2}});
  return it != row.end() && it->first == v ? it->second : kNoLabel;
}

std::optional<Label> Graph::find_label(std::string_view name) const {
  auto it = std::lower_bound(label_names_.begin(), label_names_.end(), name);
  if (it == label_names_.end() || *it != name) return std::nullopt;
  return static_cast<Label>(it - label_names_.begin());
}

std::size_t Graph::dense_neighborhoods() const {
  std::size_t c = 0;
  for (const auto &s : neighborhoods_) c += s.is_dense();
  for (const auto &s : out_neighborhoods_) c += s.is_dense();
  return c;
}

// ---------------------------------------------------------------------------
// Builder

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), vertex_labels_(n) {}

GraphBuilder &GraphBuilder::add_edge(Vertex u, Vertex v, std::string_view label) {
  if (u >= n_ || v >= n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") outside [0," +
                                std::to_string(n_) + ")");
  if (!label.empty()) labeled_edges_ = true;
  edges_.push_back({std::min(u, v), std::max(u, v), std::string(label)});
  return *this;
}

GraphBuilder &GraphBuilder::set_vertex_label(Vertex v, std::string_view label) {
  if (v >= n_) throw std::invalid_argument("vertex label outside graph");
  vertex_labels_[v] = std::string(label);
  return *this;
}

Graph GraphBuilder::build(LoadStats *stats) const {
  std::vector<Pending> edges;
  edges.reserve(edges_.size());
  std::size_t loops = 0;
  for (const auto &e : edges_) {
    if (e.u == e.v)
      ++loops;
    else
      edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](const Pending &a, const Pending &b) {
    return std::tie(a.u, a.v, a.label) < std::tie(b.u, b.v, b.label);
  });
  std::size_t dups = 0;
  std::vector<Pending> unique;
  unique.reserve(edges.size());
  for (const auto &e : edges) {
    if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) {
      if (unique.back().label != e.label)
        throw std::invalid_argument("conflicting labels for edge (" +
                                    std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ")");
      ++dups;
      continue;
    }
    unique.push_back(e);
  }

  std::vector<std::string> names;
  for (const auto &l : vertex_labels_)
    if (l) names.push_back(*l);
  if (labeled_edges_)
    for (const auto &e : unique) names.push_back(e.label);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto intern = [&](const std::string &s) {
    return static_cast<Label>(std::lower_bound(names.begin(), names.end(), s) -
                              names.begin());
  };

  Graph g;
  g.n_ = n_;
  g.m_ = unique.size();
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto &e : unique) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  g.neighborhoods_.reserve(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    g.neighborhoods_.push_back(SetValue::sparse(std::move(adj[v]), n_));
    g.neighborhoods_.back().set_id(v);
  }
  if (std::any_of(vertex_labels_.begin(), vertex_labels_.end(),
                  [](const auto &l) { return l.has_value(); })) {
    g.vertex_labels_.assign(n_, kNoLabel);
    for (std::size_t v = 0; v < n_; ++v)
      if (vertex_labels_[v]) g.vertex_labels_[v] = intern(*vertex_labels_[v]);
  }
  if (labeled_edges_) {
    g.edge_labels_.resize(n_);
    for (const auto &e : unique) {
      const Label l = e.label.empty() ? kNoLabel : intern(e.label);
      g.edge_labels_[e.u].emplace_back(e.v, l);
      g.edge_labels_[e.v].emplace_back(e.u, l);
    }
    for (auto &row : g.edge_labels_) std::sort(row.begin(), row.end());
  }
  g.label_names_ = std::move(names);
  if (stats) {
    stats->self_loops = loops;
    stats->duplicate_edges = dups;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Loading

namespace {

std::vector<std::string> split(const std::string &line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  for (std::string t; is >> t;) toks.push_back(std::move(t));
  return toks;
}

std::uint64_t parse_id(const std::string &tok, std::size_t line) {
  std::uint64_t v = 0;
  const auto *end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a non-negative vertex id, got '" + tok + "'");
  return v;
}

bool is_comment(const std::vector<std::string> &toks) {
  return toks.empty() || toks[0][0] == '#' || toks[0][0] == '%';
}

}  // namespace

LoadedGraph load_edge_list(std::istream &in, bool labeled,
                           std::istream *vertex_labels) {
  struct RawEdge {
    std::uint64_t u, v;
    std::string label;
  };
  std::vector<RawEdge> raw;
  std::vector<std::pair<std::uint64_t, std::string>> raw_vlabels;
  std::vector<std::uint64_t> ids;

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto toks = split(line);
    if (is_comment(toks)) continue;
    if (labeled && toks[0] == "v") {
      if (toks.size() != 3)
        throw ParseError(lineno, "expected 'v <id> <label>'");
      const auto id = parse_id(toks[1], lineno);
      raw_vlabels.emplace_back(id, toks[2]);
      ids.push_back(id);
      continue;
    }
    const std::size_t want = labeled ? 3 : 2;
    if (toks.size() != want && !(labeled && toks.size() == 2))
      throw ParseError(lineno, labeled ? "expected 'u v [edge_label]'"
                                       : "expected 'u v'");
    RawEdge e{parse_id(toks[0], lineno), parse_id(toks[1], lineno),
              toks.size() == 3 ? toks[2] : std::string{}};
    ids.push_back(e.u);
    ids.push_back(e.v);
    raw.push_back(std::move(e));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  if (vertex_labels) {
    for (std::size_t lineno = 1; std::getline(*vertex_labels, line); ++lineno) {
      const auto toks = split(line);
      if (is_comment(toks)) continue;
      if (toks.size() != 2) throw ParseError(lineno, "expected 'vertex_id label'");
      const auto id = parse_id(toks[0], lineno);
      if (!std::binary_search(ids.begin(), ids.end(), id))
        throw ParseError(lineno, "label for unknown vertex " + toks[0]);
      raw_vlabels.emplace_back(id, toks[1]);
    }
  }
  if (ids.empty()) throw std::runtime_error("empty graph: no vertices or edges");

  auto dense = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) -
                               ids.begin());
  };
  GraphBuilder b(ids.size());
  for (const auto &e : raw) b.add_edge(dense(e.u), dense(e.v), e.label);
  std::sort(raw_vlabels.begin(), raw_vlabels.end());
  for (std::size_t i = 0; i < raw_vlabels.size(); ++i) {
    if (i > 0 && raw_vlabels[i - 1].first == raw_vlabels[i].first)
      throw std::invalid_argument("conflicting labels for vertex " +
                                  std::to_string(raw_vlabels[i].first));
    b.set_vertex_label(dense(raw_vlabels[i].first), raw_vlabels[i].second);
  }

  LoadedGraph out;
  out.graph = b.build(&out.stats);
  out.stats.original_ids = std::move(ids);
  return out;
}

LoadedGraph load_edge_list_file(const std::string &path, bool labeled,
                                const std::string &labels_path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  if (labels_path.empty()) return load_edge_list(in, labeled);
  std::ifstream lin(labels_path);
  if (!lin) throw std::runtime_error("cannot open label file '" + labels_path + "'");
  return load_edge_list(in, labeled, &lin);
}

// ---------------------------------------------------------------------------
// Orders

VertexOrder degeneracy_order_exact(const Graph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  VertexOrder order;
  order.rank.assign(n, 0);
  order.rounds = n;
  std::vector<bool> removed(n, false);
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    order.rank[v] = pos;
    order.degeneracy_bound = std::max(order.degeneracy_bound, d);
    removed[v] = true;
    g.neighbors(v).for_each([&](Vertex u) {
      if (removed[u]) return;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    });
  }
  return order;
}

VertexOrder degeneracy_order_approx(const Graph &g, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  const std::size_t n = g.num_vertices();
  std::vector<SetValue> residual;
  residual.reserve(n);
  for (Vertex v = 0; v < n; ++v) residual.push_back(g.neighbors(v));
  SetValue alive = SetValue::full(n, Repr::DenseBitvector);
  std::vector<std::size_t> round(n, 0);

  std::size_t r = 0;
  for (; !alive.empty(); ++r) {
    std::size_t total = 0;
    alive.for_each([&](Vertex v) { total += residual[v].size(); });
    const double limit = (1.0 + eps) * static_cast<double>(total) /
                         static_cast<double>(alive.size());
    SetValue assigned = SetValue::dense(n);
    alive.for_each([&](Vertex v) {
      if (static_cast<double>(residual[v].size()) <= limit) {
        assigned.insert(v);
        round[v] = r;
      }
    });
    alive = difference(alive, assigned);
    alive.for_each([&](Vertex v) {
      residual[v] = difference(residual[v], assigned);
    });
  }

  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(),
                   [&](Vertex a, Vertex b) { return round[a] < round[b]; });
  VertexOrder order;
  order.rank.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) order.rank[seq[i]] = static_cast<std::uint32_t>(i);
  order.rounds = r;
  order.degeneracy_bound = max_out_degree(g, order);
  return order;
}

std::size_t max_out_degree(const Graph &g, const VertexOrder &order) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::size_t out = 0;
    g.neighbors(v).for_each([&](Vertex u) { out += order.rank[u] > order.rank[v]; });
    best = std::max(best, out);
  }
  return best;
}

Graph orient(const Graph &g, const VertexOrder &order) {
  const std::size_t n = g.num_vertices();
  if (order.rank.size() != n)
    throw std::invalid_argument("vertex order size does not match graph");
  std::vector<bool> seen(n, false);
  for (auto r : order.rank) {
    if (r >= n || seen[r])
      throw std::invalid_argument("vertex order rank is not a permutation");
    seen[r] = true;
  }
  Graph out = g;
  out.out_neighborhoods_.clear();
  out.out_neighborhoods_.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    g.neighbors(v).for_each([&](Vertex u) {
      if (order.rank[v] < order.rank[u]) later.push_back(u);
    });
    out.out_neighborhoods_.push_back(SetValue::sparse(std::move(later), n));
    out.out_neighborhoods_.back().set_id(n + v);
  }
  out.order_ = order;
  return out;
}

Graph apply_representation(const Graph &g, const RepresentationPolicy &policy,
                           RepresentationStats *stats) {
  policy.validate();
  Graph out = g;
  const std::size_t n = g.num_vertices();
  std::vector<SetValue *> managed;
  for (auto &s : out.neighborhoods_) managed.push_back(&s);
  for (auto &s : out.out_neighborhoods_) managed.push_back(&s);

  BudgetState budget;
  for (const auto *s : managed)
    budget.baseline_bits += static_cast<std::int64_t>(s->size() * policy.word_bits);

  // Largest first; managed is already ordered N before N+, by vertex.
  std::vector<std::size_t> idx(managed.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return managed[a]->size() > managed[b]->size();
  });

  RepresentationStats st;
  st.baseline_bits = budget.baseline_bits;
  for (auto i : idx) {
    SetValue &s = *managed[i];
    const Repr target = choose_representation(s.size(), n, policy, budget);
    if (s.repr() != target) {
      const SetId id = s.id();
      s = convert(s, target);
      s.set_id(id);
    }
    if (target == Repr::DenseBitvector) {
      ++st.dense_sets;
      st.actual_extra_bits += static_cast<std::int64_t>(n) -
                              static_cast<std::int64_t>(s.size() * policy.word_bits);
    } else {
      ++st.sparse_sets;
    }
  }
  st.charged_bits = budget.extra_bits;
  if (stats) *stats = st;
  return out;
}

}  // namespace sisa
