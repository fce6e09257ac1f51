#include "sisa/ledger.hpp"

#include <algorithm>
#include "json.hpp"

namespace sisa::pim {

const char *to_string(Backend b) {
  switch (b) {
    case Backend::PnmStream:
      return "pnm_stream";
    case Backend::PnmRandom:
      return "pnm_random";
    case Backend::Pum:
      return "pum";
  }
  return "?";
}

void CostLedger::charge_stream(std::uint64_t elems) {
  ++stream_ops_;
  stream_elems_ += elems;
}

void CostLedger::charge_random(std::uint64_t units) { random_units_ += units; }

void CostLedger::charge_pum(std::uint64_t batches) {
  ++pum_ops_;
  pum_batches_ += batches;
}

void CostLedger::count(isa::Opcode op) {
  ++ops_[static_cast<std::size_t>(op)];
}

void CostLedger::count_variant(Variant v) {
  if (v != Variant::Auto) ++variants_[static_cast<std::size_t>(v)];
}

void CostLedger::record_scu(bool hit) { ++(hit ? scu_hits_ : scu_misses_); }

std::uint64_t CostLedger::op_count(isa::Opcode op) const {
  return ops_[static_cast<std::size_t>(op)];
}

std::uint64_t CostLedger::variant_count(Variant v) const {
  return v == Variant::Auto ? 0 : variants_[static_cast<std::size_t>(v)];
}

std::uint64_t CostLedger::instructions() const {
  std::uint64_t total = 0;
  for (auto c : ops_) total += c;
  return total;
}

double CostLedger::time(Backend b, const CostParams &p) const {
  switch (b) {
    case Backend::PnmStream: {
      const double bw = std::min(p.mem_bandwidth, p.link_bandwidth);
      const double elems = static_cast<double>(stream_elems_);
      const double fixed = p.mem_latency * static_cast<double>(stream_ops_);
      if (p.literal_streaming) return fixed + p.word_bits * elems * bw;
      return fixed + (p.word_bits / 8.0) * elems / bw;
    }
    case Backend::PnmRandom:
      return p.mem_latency * static_cast<double>(random_units_);
    case Backend::Pum:
      return p.mem_latency * static_cast<double>(pum_ops_) +
             p.insitu_latency * static_cast<double>(pum_batches_);
  }
  return 0.0;
}

double CostLedger::scu_time(const CostParams &p) const {
  return p.mem_latency * static_cast<double>(scu_misses_);
}

double CostLedger::serialized_total(const CostParams &p) const {
  return time(Backend::PnmStream, p) + time(Backend::PnmRandom, p) +
         time(Backend::Pum, p) + scu_time(p);
}

double CostLedger::parallel_total(const CostParams &p) const {
  return std::max({time(Backend::PnmStream, p), time(Backend::PnmRandom, p),
                   time(Backend::Pum, p)}) +
         scu_time(p);
}

std::string CostLedger::op_counts_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i] != 0) j[isa::mnemonic(static_cast<isa::Opcode>(i))] = ops_[i];
  nlohmann::ordered_json v = nlohmann::ordered_json::object();
  for (auto var : {Variant::Merge, Variant::Gallop, Variant::SaDb, Variant::DbDb})
    if (variant_count(var) != 0) v[to_string(var)] = variant_count(var);
  j["variants"] = v;
  return j.dump();
}

CostLedger &CostLedger::operator+=(const CostLedger &o) {
  stream_ops_ += o.stream_ops_;
  stream_elems_ += o.stream_elems_;
  random_units_ += o.random_units_;
  pum_ops_ += o.pum_ops_;
  pum_batches_ += o.pum_batches_;
  scu_hits_ += o.scu_hits_;
  scu_misses_ += o.scu_misses_;
  for (std::size_t i = 0; i < ops_.size(); ++i) ops_[i] += o.ops_[i];
  for (std::size_t i = 0; i < variants_.size(); ++i) variants_[i] += o.variants_[i];
  return *this;
}

CostLedger ledger_merge(const CostLedger &a, const CostLedger &b) {
  CostLedger out = a;
  out += b;
  return out;
}

}  // namespace sisa::pim
