#include "sisa/scu.hpp"

#include <algorithm>
#include <stdexcept>

namespace sisa::pim {

ScuCache::ScuCache(std::size_t capacity_bytes, std::size_t entry_bytes)
    : capacity_(entry_bytes == 0 ? 0 : capacity_bytes / entry_bytes) {
  if (entry_bytes == 0) throw std::invalid_argument("entry size must be positive");
}

bool ScuCache::access(SetId id) {
  if (auto it = where_.find(id); it != where_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return true;
  }
  if (capacity_ == 0) return false;
  if (lru_.size() == capacity_) {
    where_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(id);
  where_[id] = lru_.begin();
  return false;
}

ScuAccess scu_access(SetId id, ScuCache &cache, const CostParams &p) {
  const bool hit = cache.access(id);
  return {hit, hit ? 0.0 : p.mem_latency};
}

const char *to_string(VariantMode m) {
  switch (m) {
    case VariantMode::Auto:
      return "auto";
    case VariantMode::Merge:
      return "merge";
    case VariantMode::Gallop:
      return "gallop";
  }
  return "?";
}

VariantMode variant_mode_from_string(const std::string &s) {
  if (s == "auto") return VariantMode::Auto;
  if (s == "merge") return VariantMode::Merge;
  if (s == "gallop") return VariantMode::Gallop;
  throw std::invalid_argument("unknown variant mode '" + s +
                              "' (expected auto, merge or gallop)");
}

Scu::Scu(ScuConfig config, SetId first_private_id)
    : config_(std::move(config)),
      cache_(config_.cache_bytes, config_.entry_bytes),
      next_id_(first_private_id) {
  config_.params.validate();
  config_.policy.validate();
}

Variant Scu::choose(const SetValue &a, const SetValue &b) const {
  const Variant forced = forced_variant(a.repr(), b.repr());
  if (forced != Variant::Auto) return forced;
  switch (config_.variant_mode) {
    case VariantMode::Merge:
      return Variant::Merge;
    case VariantMode::Gallop:
      return Variant::Gallop;
    case VariantMode::Auto:
      break;
  }
  return select_variant(a.metadata(), b.metadata(), config_.params,
                        config_.policy, config_.selection)
      .variant;
}

void Scu::lookup(const SetValue &s) {
  if (s.id() == kNoSetId) return;
  ledger_.record_scu(scu_access(s.id(), cache_, config_.params).hit);
}

void Scu::charge_binary(Variant v, const SetValue &a, const SetValue &b) {
  switch (v) {
    case Variant::Merge:
      ledger_.charge_stream(std::max(a.size(), b.size()));
      break;
    case Variant::Gallop:
      ledger_.charge_random(random_units(a.size(), b.size()));
      break;
    case Variant::SaDb:
      ledger_.charge_random(a.is_sparse() ? a.size() : b.size());
      break;
    case Variant::DbDb:
      ledger_.charge_pum(pum_batches(a.universe(), config_.params));
      break;
    case Variant::Auto:
      throw std::logic_error("unresolved variant");
  }
  ledger_.count_variant(v);
}

void Scu::emit(isa::Opcode op, const SetValue &a, const SetValue *b, SetId rd) {
  ledger_.count(op);
  if (!config_.record_trace) return;
  auto reg = [](SetId id) { return static_cast<std::uint8_t>(id % 32); };
  trace_.push_back({op, reg(a.id()), b ? reg(b->id()) : std::uint8_t{0},
                    reg(rd)});
}

SetValue Scu::intersect(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  const Variant v = choose(a, b);
  SetValue out = sisa::intersect(a, b, v);
  charge_binary(v, a, b);
  out.set_id(fresh_id());
  static constexpr isa::Opcode kOps[] = {
      isa::Opcode::IntersectMerge, isa::Opcode::IntersectGallop,
      isa::Opcode::IntersectSaDb, isa::Opcode::IntersectDbDb};
  emit(kOps[static_cast<std::size_t>(v)], a, &b, out.id());
  return out;
}

std::size_t Scu::intersect_card(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  const Variant v = choose(a, b);
  const std::size_t c = sisa::intersect_cardinality(a, b, v);
  charge_binary(v, a, b);
  emit(isa::Opcode::IntersectCard, a, &b, 0);
  return c;
}

SetValue Scu::unite(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  SetValue out = sisa::set_union(a, b);
  const Variant v = forced_variant(a.repr(), b.repr());
  if (v == Variant::Auto)
    ledger_.charge_stream(std::max(a.size(), b.size()));
  else
    charge_binary(v, a, b);
  out.set_id(fresh_id());
  emit(isa::Opcode::Union, a, &b, out.id());
  return out;
}

std::size_t Scu::unite_card(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  const std::size_t c = sisa::union_cardinality(a, b);
  const Variant v = forced_variant(a.repr(), b.repr());
  if (v == Variant::Auto)
    ledger_.charge_stream(std::max(a.size(), b.size()));
  else
    charge_binary(v, a, b);
  emit(isa::Opcode::UnionCard, a, &b, 0);
  return c;
}

SetValue Scu::difference(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  const Variant v = choose(a, b);
  SetValue out = sisa::difference(a, b, v);
  if (v == Variant::DbDb) {  // NOT pass, then AND pass
    ledger_.charge_pum(2 * pum_batches(a.universe(), config_.params));
    ledger_.count_variant(v);
  } else {
    charge_binary(v, a, b);
  }
  out.set_id(fresh_id());
  emit(isa::Opcode::Difference, a, &b, out.id());
  return out;
}

std::size_t Scu::difference_card(const SetValue &a, const SetValue &b) {
  lookup(a);
  lookup(b);
  const Variant v = choose(a, b);
  const std::size_t c = sisa::difference_cardinality(a, b, v);
  if (v == Variant::DbDb) {
    ledger_.charge_pum(2 * pum_batches(a.universe(), config_.params));
    ledger_.count_variant(v);
  } else {
    charge_binary(v, a, b);
  }
  emit(isa::Opcode::DifferenceCard, a, &b, 0);
  return c;
}

bool Scu::contains(const SetValue &a, Vertex x) {
  lookup(a);
  const bool in = membership(a, x);
  ledger_.charge_random(a.is_dense() ? 1 : std::max<std::uint64_t>(
                                               1, ceil_log2(a.size())));
  emit(isa::Opcode::Membership, a, nullptr, 0);
  return in;
}

void Scu::insert(SetValue &a, Vertex x) {
  lookup(a);
  if (a.is_dense()) {
    ledger_.charge_random(1);
    a.insert(x);
    emit(isa::Opcode::DbAdd, a, nullptr, a.id());
  } else {
    ledger_.charge_stream(a.size());
    a.insert(x);
    emit(isa::Opcode::Union, a, nullptr, a.id());
  }
}

void Scu::erase(SetValue &a, Vertex x) {
  lookup(a);
  if (a.is_dense()) {
    ledger_.charge_random(1);
    a.erase(x);
    emit(isa::Opcode::DbRemove, a, nullptr, a.id());
  } else {
    ledger_.charge_stream(a.size());
    a.erase(x);
    emit(isa::Opcode::Difference, a, nullptr, a.id());
  }
}

SetValue Scu::make_aux(std::size_t universe) {
  SetValue s = config_.aux_repr == Repr::DenseBitvector
                   ? SetValue::dense(universe)
                   : SetValue::sparse({}, universe);
  s.set_id(fresh_id());
  return s;
}

SetValue Scu::make_aux_from(std::span<const Vertex> sorted,
                            std::size_t universe) {
  SetValue s = config_.aux_repr == Repr::DenseBitvector
                   ? SetValue::dense_from(sorted, universe)
                   : SetValue::sparse({sorted.begin(), sorted.end()}, universe);
  s.set_id(fresh_id());
  return s;
}

SetValue Scu::materialize(const SetValue &src) {
  SetValue empty = make_aux(src.universe());
  SetValue out = unite(empty, src);
  if (out.repr() != config_.aux_repr) {
    const SetId id = out.id();
    out = convert(out, config_.aux_repr);
    out.set_id(id);
  }
  return out;
}

}  // namespace sisa::pim
