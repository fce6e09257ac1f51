#include "sisa/set_ops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sisa/cost_model.hpp"

namespace sisa {
namespace {

void require_same_universe(const SetValue &a, const SetValue &b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("set operands over different universes (" +
                                std::to_string(a.universe()) + " vs " +
                                std::to_string(b.universe()) + ")");
}

Variant resolve(Variant v, const SetValue &a, const SetValue &b) {
  if (!applicable(v, a.repr(), b.repr()))
    throw std::invalid_argument(std::string("variant ") + to_string(v) +
                                " cannot run on " + to_string(a.repr()) +
                                " and " + to_string(b.repr()));
  if (v != Variant::Auto) return v;
  return pim::select_variant(a.metadata(), b.metadata(), pim::CostParams{},
                             RepresentationPolicy{},
                             pim::SelectionMode::CostModel)
      .variant;
}

// First index in [lo, n) with large[idx] >= x, found by doubling from lo.
std::size_t gallop_to(std::span<const Vertex> large, std::size_t lo, Vertex x) {
  std::size_t bound = 1;
  while (lo + bound < large.size() && large[lo + bound] < x) bound *= 2;
  const auto first = large.begin() + static_cast<std::ptrdiff_t>(lo);
  const auto last = large.begin() + static_cast<std::ptrdiff_t>(
                                        std::min(large.size(), lo + bound + 1));
  return static_cast<std::size_t>(std::lower_bound(first, last, x) -
                                  large.begin());
}

template <class Emit>
void merge_intersect(std::span<const Vertex> a, std::span<const Vertex> b,
                     Emit emit) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      emit(a[i]);
      ++i;
      ++j;
    }
  }
}

template <class Emit>
void gallop_intersect(std::span<const Vertex> a, std::span<const Vertex> b,
                      Emit emit) {
  auto small = a, large = b;
  if (small.size() > large.size()) std::swap(small, large);
  std::size_t lo = 0;
  for (Vertex x : small) {
    lo = gallop_to(large, lo, x);
    if (lo == large.size()) return;
    if (large[lo] == x) {
      emit(x);
      ++lo;
    }
  }
}

template <class Emit>
void probe_intersect(const SetValue &sa, const SetValue &db, Emit emit) {
  for (Vertex x : sa.elements())
    if (db.test(x)) emit(x);
}

template <class Emit>
void merge_difference(std::span<const Vertex> a, std::span<const Vertex> b,
                      Emit emit) {
  std::size_t j = 0;
  for (Vertex x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size() || b[j] != x) emit(x);
  }
}

template <class Emit>
void gallop_difference(std::span<const Vertex> a, std::span<const Vertex> b,
                       Emit emit) {
  std::size_t lo = 0;
  for (Vertex x : a) {
    lo = gallop_to(b, lo, x);
    if (lo == b.size() || b[lo] != x) emit(x);
  }
}

std::vector<std::uint64_t> combine_words(const SetValue &a, const SetValue &b,
                                         auto op) {
  const auto wa = a.words(), wb = b.words();
  std::vector<std::uint64_t> out(wa.size());
  for (std::size_t i = 0; i < wa.size(); ++i) out[i] = op(wa[i], wb[i]);
  return out;
}

std::size_t count_words(const SetValue &a, const SetValue &b, auto op) {
  const auto wa = a.words(), wb = b.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < wa.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(op(wa[i], wb[i])));
  return c;
}

const SetValue &sparse_side(const SetValue &a, const SetValue &b) {
  return a.is_sparse() ? a : b;
}
const SetValue &dense_side(const SetValue &a, const SetValue &b) {
  return a.is_dense() ? a : b;
}

}  // namespace

const char *to_string(Variant v) {
  switch (v) {
    case Variant::Merge:
      return "merge";
    case Variant::Gallop:
      return "gallop";
    case Variant::SaDb:
      return "sa-db";
    case Variant::DbDb:
      return "db-db";
    case Variant::Auto:
      return "auto";
  }
  return "?";
}

Variant variant_from_string(const std::string &s) {
  for (auto v : {Variant::Merge, Variant::Gallop, Variant::SaDb, Variant::DbDb,
                 Variant::Auto})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

bool applicable(Variant v, Repr ra, Repr rb) {
  const bool sa_a = ra == Repr::SparseArray, sa_b = rb == Repr::SparseArray;
  switch (v) {
    case Variant::Merge:
    case Variant::Gallop:
      return sa_a && sa_b;
    case Variant::SaDb:
      return sa_a != sa_b;
    case Variant::DbDb:
      return !sa_a && !sa_b;
    case Variant::Auto:
      return true;
  }
  return false;
}

Variant forced_variant(Repr ra, Repr rb) {
  if (ra == Repr::DenseBitvector && rb == Repr::DenseBitvector)
    return Variant::DbDb;
  if (ra != rb) return Variant::SaDb;
  return Variant::Auto;
}

SetValue intersect(const SetValue &a, const SetValue &b, Variant variant) {
  require_same_universe(a, b);
  const Variant v = resolve(variant, a, b);
  if (v == Variant::DbDb)
    return SetValue::dense_from_words(
        combine_words(a, b, [](auto x, auto y) { return x & y; }), a.universe());
  std::vector<Vertex> out;
  auto emit = [&](Vertex x) { out.push_back(x); };
  if (v == Variant::Merge) {
    out.reserve(std::min(a.size(), b.size()));
    merge_intersect(a.elements(), b.elements(), emit);
  } else if (v == Variant::Gallop) {
    out.reserve(std::min(a.size(), b.size()));
    gallop_intersect(a.elements(), b.elements(), emit);
  } else {
    probe_intersect(sparse_side(a, b), dense_side(a, b), emit);
  }
  return SetValue::sparse(std::move(out), a.universe());
}

std::size_t intersect_cardinality(const SetValue &a, const SetValue &b,
                                  Variant variant) {
  require_same_universe(a, b);
  const Variant v = resolve(variant, a, b);
  if (v == Variant::DbDb)
    return count_words(a, b, [](auto x, auto y) { return x & y; });
  std::size_t count = 0;
  auto emit = [&](Vertex) { ++count; };
  if (v == Variant::Merge)
    merge_intersect(a.elements(), b.elements(), emit);
  else if (v == Variant::Gallop)
    gallop_intersect(a.elements(), b.elements(), emit);
  else
    probe_intersect(sparse_side(a, b), dense_side(a, b), emit);
  return count;
}

SetValue set_union(const SetValue &a, const SetValue &b) {
  require_same_universe(a, b);
  if (a.is_sparse() && b.is_sparse()) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::ranges::set_union(a.elements(), b.elements(), std::back_inserter(out));
    return SetValue::sparse(std::move(out), a.universe());
  }
  if (a.is_dense() && b.is_dense())
    return SetValue::dense_from_words(
        combine_words(a, b, [](auto x, auto y) { return x | y; }), a.universe());
  SetValue out = dense_side(a, b);
  out.set_id(kNoSetId);
  for (Vertex x : sparse_side(a, b).elements()) out.insert(x);
  return out;
}

std::size_t union_cardinality(const SetValue &a, const SetValue &b) {
  require_same_universe(a, b);
  if (a.is_dense() && b.is_dense())
    return count_words(a, b, [](auto x, auto y) { return x | y; });
  return a.size() + b.size() - intersect_cardinality(a, b);
}

SetValue difference(const SetValue &a, const SetValue &b, Variant variant) {
  require_same_universe(a, b);
  const Variant v = resolve(variant, a, b);
  if (v == Variant::DbDb)
    return SetValue::dense_from_words(
        combine_words(a, b, [](auto x, auto y) { return x & ~y; }),
        a.universe());
  if (a.is_dense()) {  // DB \ SA
    SetValue out = a;
    out.set_id(kNoSetId);
    for (Vertex x : b.elements()) out.erase(x);
    return out;
  }
  std::vector<Vertex> out;
  auto emit = [&](Vertex x) { out.push_back(x); };
  if (v == Variant::Merge) {
    merge_difference(a.elements(), b.elements(), emit);
  } else if (v == Variant::Gallop) {
    gallop_difference(a.elements(), b.elements(), emit);
  } else {
    for (Vertex x : a.elements())
      if (!b.test(x)) emit(x);
  }
  return SetValue::sparse(std::move(out), a.universe());
}

std::size_t difference_cardinality(const SetValue &a, const SetValue &b,
                                   Variant variant) {
  require_same_universe(a, b);
  const Variant v = resolve(variant, a, b);
  if (v == Variant::DbDb)
    return count_words(a, b, [](auto x, auto y) { return x & ~y; });
  return a.size() - intersect_cardinality(a, b, v);
}

SetValue complement(const SetValue &a) {
  const SetValue dense = convert(a, Repr::DenseBitvector);
  std::vector<std::uint64_t> words(dense.words().begin(), dense.words().end());
  for (auto &w : words) w = ~w;
  return SetValue::dense_from_words(std::move(words), a.universe());
}

bool membership(const SetValue &a, Vertex x) {
  if (x >= a.universe())
    throw std::out_of_range("vertex " + std::to_string(x) +
                            " outside universe " + std::to_string(a.universe()));
  return a.test(x);
}

SetValue add_element(SetValue a, Vertex x) {
  a.insert(x);
  return a;
}

SetValue remove_element(SetValue a, Vertex x) {
  a.erase(x);
  return a;
}

SetValue convert(const SetValue &a, Repr target) {
  if (a.repr() == target) return a;
  SetValue out = target == Repr::SparseArray
                     ? SetValue::sparse(a.to_vector(), a.universe())
                     : SetValue::dense_from(a.elements(), a.universe());
  out.set_id(a.id());
  return out;
}

}  // namespace sisa
