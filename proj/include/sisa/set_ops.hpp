#pragma once

#include <cstddef>
#include <cstdint>

#include "sisa/set.hpp"

namespace sisa {

/// Algorithmic variant of a binary set operation.
enum class Variant : std::uint8_t {
  Merge,   // SA with SA, simultaneous linear scan
  Gallop,  // SA with SA, exponential + binary search in the larger set
  SaDb,    // SA with DB, one bit probe per SA element
  DbDb,    // DB with DB, word-wise bitwise op
  Auto,    // let the cost model decide
};

const char *to_string(Variant v);
Variant variant_from_string(const std::string &s);

/// Whether `v` can run on operands with layouts (ra, rb). Auto always can.
bool applicable(Variant v, Repr ra, Repr rb);

/// The single variant usable for a layout pair, or Auto for SA/SA where a
/// choice between Merge and Gallop remains.
Variant forced_variant(Repr ra, Repr rb);

// Layout-level kernels. None of these touch a cost ledger; the controller in
// scu.hpp wraps them with accounting. All binary ops require equal universes
// and throw std::invalid_argument otherwise (or for an inapplicable variant).

/// Result layout: SA for Merge/Gallop/SaDb, DB for DbDb.
SetValue intersect(const SetValue &a, const SetValue &b,
                   Variant variant = Variant::Auto);
std::size_t intersect_cardinality(const SetValue &a, const SetValue &b,
                                  Variant variant = Variant::Auto);

/// SA+SA merges to SA; anything involving a DB yields a DB.
SetValue set_union(const SetValue &a, const SetValue &b);
std::size_t union_cardinality(const SetValue &a, const SetValue &b);

/// a \ b. Result keeps a's layout. For SA\SA, `variant` picks Merge or
/// Gallop (Auto resolves through the cost model); DB\DB is a AND NOT b.
SetValue difference(const SetValue &a, const SetValue &b,
                    Variant variant = Variant::Auto);
std::size_t difference_cardinality(const SetValue &a, const SetValue &b,
                                   Variant variant = Variant::Auto);

/// Complement within the universe, as a DB.
SetValue complement(const SetValue &a);

/// Throws std::out_of_range if x is outside the universe.
bool membership(const SetValue &a, Vertex x);

SetValue add_element(SetValue a, Vertex x);
SetValue remove_element(SetValue a, Vertex x);

SetValue convert(const SetValue &a, Repr target);

}  // namespace sisa
