#include "sisa/policy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sisa {

void RepresentationPolicy::validate() const {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("t must lie in [0, 1]");
  if (!(budget_fraction >= 0.0))
    throw std::invalid_argument("budget_fraction must be non-negative");
  if (!(galloping_threshold >= 1.0))
    throw std::invalid_argument("galloping_threshold must be >= 1");
  if (word_bits == 0) throw std::invalid_argument("word_bits must be positive");
}

std::int64_t BudgetState::cap_bits(const RepresentationPolicy &policy) const {
  if (std::isinf(policy.budget_fraction))
    return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(
      std::floor(policy.budget_fraction * static_cast<double>(baseline_bits)));
}

Repr choose_representation(std::size_t degree, std::size_t n,
                           const RepresentationPolicy &policy,
                           BudgetState &budget) {
  if (static_cast<double>(degree) < policy.t * static_cast<double>(n))
    return Repr::SparseArray;
  // A DB is charged its full n bits: the all-SA copy is never assumed freed,
  // so the cap bounds the worst case.
  const auto cost = static_cast<std::int64_t>(n);
  if (budget.extra_bits + cost > budget.cap_bits(policy))
    return Repr::SparseArray;
  budget.extra_bits += cost;
  return Repr::DenseBitvector;
}

}  // namespace sisa
