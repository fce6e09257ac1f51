#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "sisa/cost_model.hpp"
#include "sisa/isa.hpp"
#include "sisa/set_ops.hpp"

namespace sisa::pim {

enum class Backend : std::uint8_t { PnmStream, PnmRandom, Pum };

const char *to_string(Backend b);

/// Accumulated work of one run, per backend.
///
/// Only integer aggregates are stored; times are derived from CostParams on
/// demand. Each backend's time is an affine function of its aggregates, so
/// the derived time equals the sum of per-operation cost-model predictions,
/// and merging ledgers is exact (commutative and associative) no matter how
/// work was split across workers.
class CostLedger {
 public:
  /// One streaming pass over max{|A|,|B|} = `elems` elements.
  void charge_stream(std::uint64_t elems);
  /// `units` DRAM latencies of random access (no fixed start-up cost).
  void charge_random(std::uint64_t units);
  /// One in-situ operation spanning `batches` row batches.
  void charge_pum(std::uint64_t batches);
  void count(isa::Opcode op);
  void count_variant(Variant v);
  void record_scu(bool hit);

  std::uint64_t stream_ops() const { return stream_ops_; }
  std::uint64_t stream_elems() const { return stream_elems_; }
  std::uint64_t random_units() const { return random_units_; }
  std::uint64_t pum_ops() const { return pum_ops_; }
  std::uint64_t pum_batches() const { return pum_batches_; }
  std::uint64_t scu_hits() const { return scu_hits_; }
  std::uint64_t scu_misses() const { return scu_misses_; }
  std::uint64_t op_count(isa::Opcode op) const;
  std::uint64_t variant_count(Variant v) const;
  std::uint64_t instructions() const;

  double time(Backend b, const CostParams &p) const;
  double scu_time(const CostParams &p) const;
  /// All backends and metadata misses one after another.
  double serialized_total(const CostParams &p) const;
  /// Backends overlapped (vaults and subarrays work concurrently).
  double parallel_total(const CostParams &p) const;

  /// {"isect.merge": 3, ...} with only non-zero entries, plus a "variants"
  /// object for executed SA/DB intersection variants.
  std::string op_counts_json() const;

  CostLedger &operator+=(const CostLedger &other);
  friend bool operator==(const CostLedger &, const CostLedger &) = default;

 private:
  std::uint64_t stream_ops_ = 0;
  std::uint64_t stream_elems_ = 0;
  std::uint64_t random_units_ = 0;
  std::uint64_t pum_ops_ = 0;
  std::uint64_t pum_batches_ = 0;
  std::uint64_t scu_hits_ = 0;
  std::uint64_t scu_misses_ = 0;
  std::array<std::uint64_t, isa::kNumOpcodes> ops_{};
  std::array<std::uint64_t, 4> variants_{};
};

CostLedger ledger_merge(const CostLedger &a, const CostLedger &b);

}  // namespace sisa::pim
