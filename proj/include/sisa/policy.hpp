#pragma once

#include <cstddef>
#include <cstdint>

#include "sisa/set.hpp"

namespace sisa {

/// How neighborhoods are split between sparse arrays and dense bitvectors,
/// and when SA/SA operations switch to galloping in ratio mode.
struct RepresentationPolicy {
  /// A neighborhood is DB-eligible iff |N(v)| >= t * n.
  double t = 0.4;
  /// Extra storage allowed on top of the all-SA layout, as a fraction of it.
  /// Infinity disables the cap.
  double budget_fraction = 0.10;
  /// Ratio mode: gallop iff the larger set is at least this many times larger.
  double galloping_threshold = 5.0;
  /// Bits per stored vertex ID in a sparse array.
  unsigned word_bits = 32;

  void validate() const;
};

/// Running storage account while handing out DBs.
struct BudgetState {
  /// Storage of the all-SA layout in bits.
  std::int64_t baseline_bits = 0;
  /// Net extra bits consumed by granted DBs (negative when DBs save space).
  std::int64_t extra_bits = 0;

  std::int64_t cap_bits(const RepresentationPolicy &policy) const;
};

/// Decide the layout of one neighborhood and charge the budget if it becomes
/// a DB. Callers grant the largest neighborhoods first.
Repr choose_representation(std::size_t degree, std::size_t n,
                           const RepresentationPolicy &policy,
                           BudgetState &budget);

}  // namespace sisa
