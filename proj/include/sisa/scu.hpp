#pragma once

#include <cstddef>
#include <list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sisa/cost_model.hpp"
#include "sisa/isa.hpp"
#include "sisa/ledger.hpp"
#include "sisa/policy.hpp"
#include "sisa/set.hpp"
#include "sisa/set_ops.hpp"

namespace sisa::pim {

/// LRU cache of set-metadata entries inside the controller.
class ScuCache {
 public:
  explicit ScuCache(std::size_t capacity_bytes = 32768,
                    std::size_t entry_bytes = 16);

  /// Returns true on a hit. A miss installs the entry, evicting the least
  /// recently used one when full.
  bool access(SetId id);
  bool contains(SetId id) const { return where_.contains(id); }
  std::size_t capacity_entries() const { return capacity_; }
  std::size_t resident() const { return lru_.size(); }

 private:
  std::size_t capacity_;
  std::list<SetId> lru_;  // front = most recent
  std::unordered_map<SetId, std::list<SetId>::iterator> where_;
};

struct ScuAccess {
  bool hit = false;
  double time = 0.0;
};

/// Metadata lookup: free on a hit, one DRAM access on a miss.
ScuAccess scu_access(SetId id, ScuCache &cache, const CostParams &p);

/// Which variant SA/SA operations use.
enum class VariantMode : std::uint8_t { Auto, Merge, Gallop };

const char *to_string(VariantMode m);
VariantMode variant_mode_from_string(const std::string &s);

struct ScuConfig {
  CostParams params;
  RepresentationPolicy policy;
  SelectionMode selection = SelectionMode::CostModel;
  VariantMode variant_mode = VariantMode::Auto;
  std::size_t cache_bytes = 32768;
  std::size_t entry_bytes = 16;
  /// Layout of algorithm-private sets (P, X, frontiers, candidates).
  Repr aux_repr = Repr::DenseBitvector;
  bool record_trace = false;
};

/// The set controller: dispatches every set operation of an algorithm to a
/// variant, runs it, and charges the ledger.
///
/// Per-operation charges (l_M = DRAM latency, W = word bits):
///   SA∩SA, SA\SA   merge: streaming over max{|A|,|B|}; gallop: random
///   SA∪SA          streaming
///   SA with DB     l_M per SA element (∩, ∪, \)
///   DB with DB     in-situ; \ costs two row passes (NOT then AND)
///   DB add/remove  l_M
///   SA add/remove  streaming over |A|
///   x∈A            DB: l_M; SA: l_M * ceil(log2 |A|)
///   metadata       l_M per SCU cache miss, one lookup per named operand
///
/// Not thread-safe: each worker owns one controller.
class Scu {
 public:
  explicit Scu(ScuConfig config, SetId first_private_id = SetId{1} << 40);

  SetValue intersect(const SetValue &a, const SetValue &b);
  std::size_t intersect_card(const SetValue &a, const SetValue &b);
  SetValue unite(const SetValue &a, const SetValue &b);
  std::size_t unite_card(const SetValue &a, const SetValue &b);
  SetValue difference(const SetValue &a, const SetValue &b);
  std::size_t difference_card(const SetValue &a, const SetValue &b);
  bool contains(const SetValue &a, Vertex x);
  void insert(SetValue &a, Vertex x);
  void erase(SetValue &a, Vertex x);

  /// Empty private set in the configured auxiliary layout.
  SetValue make_aux(std::size_t universe);
  /// Private copy of `src` in the auxiliary layout (charged as a union with
  /// an empty set).
  SetValue materialize(const SetValue &src);
  /// Private set holding the given sorted elements; free (setup only).
  SetValue make_aux_from(std::span<const Vertex> sorted,
                         std::size_t universe);

  /// Variant an intersection of these operands would use.
  Variant choose(const SetValue &a, const SetValue &b) const;

  const ScuConfig &config() const { return config_; }
  const CostLedger &ledger() const { return ledger_; }
  CostLedger &ledger() { return ledger_; }
  const ScuCache &cache() const { return cache_; }
  const std::vector<isa::Instruction> &trace() const { return trace_; }

 private:
  void lookup(const SetValue &s);
  void charge_binary(Variant v, const SetValue &a, const SetValue &b);
  void emit(isa::Opcode op, const SetValue &a, const SetValue *b, SetId rd);
  SetId fresh_id() { return next_id_++; }

  ScuConfig config_;
  ScuCache cache_;
  CostLedger ledger_;
  SetId next_id_;
  std::vector<isa::Instruction> trace_;
};

}  // namespace sisa::pim
