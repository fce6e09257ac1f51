#include "sisa/cost_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sisa::pim {

void CostParams::validate() const {
  if (!(mem_latency > 0) || !(mem_bandwidth > 0) || !(link_bandwidth > 0) ||
      !(insitu_latency > 0) || parallel_rows == 0 || row_bits == 0 ||
      word_bits == 0)
    throw std::invalid_argument("cost parameters must be strictly positive");
  if (row_bits % 8 != 0)
    throw std::invalid_argument("row size R must be a multiple of 8 bits");
}

std::uint64_t ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(x - 1));
}

double cost_streaming(std::size_t size_a, std::size_t size_b,
                      const CostParams &p) {
  const double bw = std::min(p.mem_bandwidth, p.link_bandwidth);
  const double elems = static_cast<double>(std::max(size_a, size_b));
  if (p.literal_streaming)
    return p.mem_latency + p.word_bits * elems * bw;
  return p.mem_latency + (p.word_bits / 8.0) * elems / bw;
}

std::uint64_t random_units(std::size_t size_a, std::size_t size_b) {
  const std::uint64_t lo = std::min(size_a, size_b);
  const std::uint64_t hi = std::max<std::uint64_t>({size_a, size_b, 2});
  return lo * ceil_log2(hi);
}

double cost_random(std::size_t size_a, std::size_t size_b,
                   const CostParams &p) {
  return p.mem_latency * static_cast<double>(random_units(size_a, size_b));
}

double cost_probe(std::size_t sa_size, const CostParams &p) {
  return p.mem_latency * static_cast<double>(sa_size);
}

std::uint64_t pum_batches(std::size_t n_bits, const CostParams &p) {
  const std::uint64_t span = p.parallel_rows * p.row_bits;
  return (n_bits + span - 1) / span;
}

double cost_pum(std::size_t n_bits, const CostParams &p) {
  return p.mem_latency +
         p.insitu_latency * static_cast<double>(pum_batches(n_bits, p));
}

const char *to_string(SelectionMode m) {
  return m == SelectionMode::CostModel ? "cost-model" : "ratio";
}

SelectionMode selection_mode_from_string(const std::string &s) {
  if (s == "cost-model" || s == "cost") return SelectionMode::CostModel;
  if (s == "ratio") return SelectionMode::Ratio;
  throw std::invalid_argument("unknown selection mode '" + s +
                              "' (expected cost-model or ratio)");
}

double predicted_time(Variant v, const SetMetadata &a, const SetMetadata &b,
                      const CostParams &p) {
  switch (v) {
    case Variant::Merge:
      return cost_streaming(a.cardinality, b.cardinality, p);
    case Variant::Gallop:
      return cost_random(a.cardinality, b.cardinality, p);
    case Variant::SaDb:
      return cost_probe(
          a.repr == Repr::SparseArray ? a.cardinality : b.cardinality, p);
    case Variant::DbDb:
      return cost_pum(std::max(a.universe, b.universe), p);
    case Variant::Auto:
      break;
  }
  throw std::invalid_argument("predicted_time needs a concrete variant");
}

VariantChoice select_variant(const SetMetadata &a, const SetMetadata &b,
                             const CostParams &p,
                             const RepresentationPolicy &policy,
                             SelectionMode mode) {
  const Variant forced = forced_variant(a.repr, b.repr);
  if (forced != Variant::Auto) return {forced, predicted_time(forced, a, b, p)};

  const double merge = predicted_time(Variant::Merge, a, b, p);
  const double gallop = predicted_time(Variant::Gallop, a, b, p);
  if (mode == SelectionMode::CostModel)
    return gallop < merge ? VariantChoice{Variant::Gallop, gallop}
                          : VariantChoice{Variant::Merge, merge};

  const auto lo = static_cast<double>(std::min(a.cardinality, b.cardinality));
  const auto hi = static_cast<double>(std::max(a.cardinality, b.cardinality));
  if (hi > 0 && hi >= policy.galloping_threshold * lo)
    return {Variant::Gallop, gallop};
  return {Variant::Merge, merge};
}

}  // namespace sisa::pim
