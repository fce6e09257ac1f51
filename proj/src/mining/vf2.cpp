#include <algorithm>

#include "workers.hpp"

namespace sisa::mining {

using detail::to_aux;

namespace {

constexpr Label kAbsentLabel = -2;  // pattern label unknown to the target
constexpr SetId kPatternIdBase = SetId{1} << 39;

Label translate(const Graph &target, const Graph &pattern, Label l) {
  if (l == kNoLabel) return kNoLabel;
  auto found = target.find_label(pattern.label_names()[static_cast<std::size_t>(l)]);
  return found ? *found : kAbsentLabel;
}

class Vf2 {
 public:
  Vf2(const Graph &t, const Graph &p, bool labeled, const MiningConfig &cfg,
      bool collect, pim::Scu &scu)
      : t_(t), p_(p), labeled_(labeled), cfg_(cfg), collect_(collect), scu_(scu),
        core1_(t.num_vertices(), -1), core2_(p.num_vertices(), -1) {
    const std::size_t n2 = p.num_vertices();
    pn_.reserve(n2);
    plabel_.assign(n2, kNoLabel);
    for (Vertex v = 0; v < n2; ++v) {
      pn_.push_back(p.neighbors(v));
      pn_.back().set_id(kPatternIdBase + v);
      if (labeled && p.has_vertex_labels())
        plabel_[v] = translate(t, p, p.vertex_label(v));
    }
    m1_ = scu_.make_aux(t.num_vertices());
    t1_ = scu_.make_aux(t.num_vertices());
    m2_ = scu_.make_aux(n2);
    t2_ = scu_.make_aux(n2);
    all1_ = scu_.make_aux(t.num_vertices());
    for (Vertex v = 0; v < t.num_vertices(); ++v) all1_.insert(v);
  }

  /// Explores every embedding whose first pattern vertex maps to `n`.
  void run_root(Vertex n) {
    if (p_.num_vertices() == 0) return;
    try_pair(n, 0, 0);
  }

  std::uint64_t count = 0;
  std::vector<std::vector<Vertex>> maps;
  bool limit_hit = false;
  bool stop = false;

 private:
  void match(std::size_t depth) {
    if (depth == p_.num_vertices()) {
      if (!detail::within_limit(cfg_, count + 1, limit_hit)) {
        stop = true;
        return;
      }
      if (collect_) maps.emplace_back(core2_.begin(), core2_.end());
      ++count;
      return;
    }
    if (!t2_.empty()) {
      if (t1_.empty()) return;
      const Vertex m = t2_.to_vector().front();
      for (Vertex n : t1_.to_vector()) {
        try_pair(n, m, depth);
        if (stop) return;
      }
      return;
    }
    Vertex m = 0;
    while (core2_[m] >= 0) ++m;
    const SetValue free1 = scu_.difference(all1_, m1_);
    for (Vertex n : free1.to_vector()) {
      try_pair(n, m, depth);
      if (stop) return;
    }
  }

  bool feasible(Vertex n, Vertex m) {
    if (labeled_ && p_.has_vertex_labels() && t_.vertex_label(n) != plabel_[m])
      return false;
    const SetValue &n1 = t_.neighbors(n);
    const SetValue &n2 = pn_[m];
    // verify_labels: every mapped neighbour of n must be the image of a
    // mapped neighbour of m, with a matching edge label.
    const SetValue mapped = scu_.intersect(n1, m1_);
    if (mapped.size() != scu_.intersect_card(n2, m2_)) return false;
    bool ok = true;
    mapped.for_each([&](Vertex n_prime) {
      if (!ok) return;
      const auto m_prime = static_cast<Vertex>(core1_[n_prime]);
      if (!p_.adjacent(m, m_prime)) {
        ok = false;
      } else if (labeled_ && p_.has_edge_labels()) {
        ok = t_.edge_label(n, n_prime) ==
             translate(t_, p_, p_.edge_label(m, m_prime));
      }
    });
    if (!ok) return false;
    // checkTerm
    if (scu_.intersect_card(n1, t1_) < scu_.intersect_card(n2, t2_)) return false;
    // checkNew
    const SetValue seen1 = scu_.unite(m1_, t1_);
    const SetValue seen2 = scu_.unite(m2_, t2_);
    return scu_.difference_card(n1, seen1) >= scu_.difference_card(n2, seen2);
  }

  void try_pair(Vertex n, Vertex m, std::size_t depth) {
    if (!feasible(n, m)) return;
    const SetValue saved1 = t1_, saved2 = t2_;
    core1_[n] = m;
    core2_[m] = n;
    scu_.insert(m1_, n);
    scu_.insert(m2_, m);
    t1_ = to_aux(scu_, scu_.difference(scu_.unite(t1_, t_.neighbors(n)), m1_));
    t2_ = to_aux(scu_, scu_.difference(scu_.unite(t2_, pn_[m]), m2_));
    match(depth + 1);
    t1_ = saved1;
    t2_ = saved2;
    scu_.erase(m1_, n);
    scu_.erase(m2_, m);
    core1_[n] = -1;
    core2_[m] = -1;
  }

  const Graph &t_;
  const Graph &p_;
  bool labeled_;
  const MiningConfig &cfg_;
  bool collect_;
  pim::Scu &scu_;
  std::vector<SetValue> pn_;
  std::vector<Label> plabel_;
  std::vector<std::int64_t> core1_, core2_;
  SetValue m1_, m2_, t1_, t2_, all1_;
};

struct SiState {
  std::optional<Vf2> vf2;
};

}  // namespace

MiningResult subgraph_isomorphism(const Graph &target, const Graph &pattern,
                                  bool labeled, const MiningConfig &cfg,
                                  bool collect) {
  MiningResult out;
  out.kind = collect ? ResultKind::VertexSets : ResultKind::Count;
  if (pattern.num_vertices() > target.num_vertices()) return out;
  if (pattern.num_vertices() == 0) {
    out.count = 1;
    return out;
  }
  auto states = detail::for_each_vertex<SiState>(
      target.num_vertices(), cfg, out, [&](pim::Scu &scu, SiState &st, Vertex n) {
        if (!st.vf2) st.vf2.emplace(target, pattern, labeled, cfg, collect, scu);
        st.vf2->run_root(n);
        return !st.vf2->stop;
      });
  for (auto &st : states) {
    if (!st.vf2) continue;
    out.count += st.vf2->count;
    out.limit_hit |= st.vf2->limit_hit;
    for (auto &m : st.vf2->maps) out.sets.push_back(std::move(m));
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

}  // namespace sisa::mining
