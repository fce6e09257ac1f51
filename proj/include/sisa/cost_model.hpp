#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "sisa/policy.hpp"
#include "sisa/set.hpp"
#include "sisa/set_ops.hpp"

namespace sisa::pim {

/// Platform constants of the analytic model. Time is in abstract units
/// (1 unit = 1 ns at the defaults); bandwidths are bytes per unit.
///
/// Defaults are artifact choices, not measured values.
struct CostParams {
  double mem_latency = 100.0;      // l_M
  double mem_bandwidth = 16.0;     // b_M
  double link_bandwidth = 16.0;    // b_L
  double insitu_latency = 50.0;    // l_I, one bulk bitwise row operation
  std::uint64_t parallel_rows = 16;  // q
  std::uint64_t row_bits = 65536;    // R, 8 KB rows
  unsigned word_bits = 32;           // W
  /// Use l_M + W*max*min{b_M,b_L} (multiplying by bandwidth) instead of the
  /// dimensionally consistent division.
  bool literal_streaming = false;

  void validate() const;
};

/// ceil(log2(x)) for x >= 1.
std::uint64_t ceil_log2(std::uint64_t x);

/// Merge over two SAs: both streamed in parallel through the slower of the
/// DRAM and inter-core links.
///   l_M + (W/8) * max{|A|,|B|} / min{b_M, b_L}
double cost_streaming(std::size_t size_a, std::size_t size_b,
                      const CostParams &p);

/// Galloping: one DRAM latency per binary-search step.
///   l_M * min{|A|,|B|} * ceil(log2(max{|A|,|B|,2}))
double cost_random(std::size_t size_a, std::size_t size_b,
                   const CostParams &p);

/// Latency units charged by cost_random (cost_random = l_M * units).
std::uint64_t random_units(std::size_t size_a, std::size_t size_b);

/// SA∩DB: one probe per SA element, l_M * |SA|.
double cost_probe(std::size_t sa_size, const CostParams &p);

/// In-situ bulk bitwise op over n-bit vectors:
///   l_M + l_I * ceil(n / (q*R))
double cost_pum(std::size_t n_bits, const CostParams &p);

/// Number of row batches ceil(n / (q*R)) for an n-bit in-situ op.
std::uint64_t pum_batches(std::size_t n_bits, const CostParams &p);

enum class SelectionMode : std::uint8_t {
  CostModel,  // argmin of predicted times
  Ratio,      // gallop iff max/min cardinality >= galloping threshold
};

const char *to_string(SelectionMode m);
SelectionMode selection_mode_from_string(const std::string &s);

struct VariantChoice {
  Variant variant = Variant::Merge;
  double predicted_time = 0.0;
};

/// Pick the intersection variant for two sets from their metadata alone.
/// DB/DB always runs in-situ; a mixed pair probes the DB once per SA
/// element; SA/SA chooses Merge or Gallop per `mode`, ties going to Merge.
VariantChoice select_variant(const SetMetadata &a, const SetMetadata &b,
                             const CostParams &p,
                             const RepresentationPolicy &policy,
                             SelectionMode mode);

/// Predicted time of a specific applicable variant.
double predicted_time(Variant v, const SetMetadata &a, const SetMetadata &b,
                      const CostParams &p);

}  // namespace sisa::pim
