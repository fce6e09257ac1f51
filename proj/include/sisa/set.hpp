#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sisa {

using Vertex = std::uint32_t;
using SetId = std::uint64_t;

inline constexpr SetId kNoSetId = ~SetId{0};

/// Physical layout of a vertex set.
enum class Repr : std::uint8_t {
  SparseArray,     // sorted, duplicate-free array of member IDs
  DenseBitvector,  // one bit per vertex of the universe
};

const char *to_string(Repr r);

/// Per-set record kept by the controller: what it needs to pick a variant
/// without touching the payload.
struct SetMetadata {
  SetId set_id = kNoSetId;
  Repr repr = Repr::SparseArray;
  std::size_t cardinality = 0;
  std::size_t universe = 0;
};

/// A set of vertices drawn from [0, universe).
///
/// Cardinality is tracked on every mutation, so size() is O(1) for both
/// layouts. The logical contents never depend on the layout.
class SetValue {
 public:
  SetValue() = default;

  /// Throws std::invalid_argument unless `elems` is strictly increasing and
  /// every element is below `universe`.
  static SetValue sparse(std::vector<Vertex> elems, std::size_t universe);
  /// Sorts and deduplicates first.
  static SetValue sparse_from_unsorted(std::vector<Vertex> elems,
                                       std::size_t universe);
  static SetValue dense(std::size_t universe);
  static SetValue dense_from(std::span<const Vertex> elems,
                             std::size_t universe);
  /// Takes ownership of raw words; bits at or above `universe` are cleared.
  static SetValue dense_from_words(std::vector<std::uint64_t> words,
                                   std::size_t universe);
  static SetValue full(std::size_t universe, Repr repr);

  Repr repr() const { return repr_; }
  bool is_sparse() const { return repr_ == Repr::SparseArray; }
  bool is_dense() const { return repr_ == Repr::DenseBitvector; }
  std::size_t size() const { return card_; }
  bool empty() const { return card_ == 0; }
  std::size_t universe() const { return universe_; }

  SetId id() const { return id_; }
  void set_id(SetId id) { id_ = id; }
  SetMetadata metadata() const { return {id_, repr_, card_, universe_}; }

  /// Sorted members; only valid for the sparse layout.
  std::span<const Vertex> elements() const;
  /// Bit words (64 bits each, LSB first); only valid for the dense layout.
  std::span<const std::uint64_t> words() const;

  /// Unchecked probe: binary search for SA, one bit for DB. x < universe().
  bool test(Vertex x) const;

  /// Returns true iff the set changed. Throws std::out_of_range if x is not
  /// in the universe.
  bool insert(Vertex x);
  bool erase(Vertex x);

  template <class F>
  void for_each(F &&f) const {
    if (repr_ == Repr::SparseArray) {
      for (Vertex v : elems_) f(v);
      return;
    }
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;

  /// Number of bits used to store the payload for a given word size.
  std::size_t storage_bits(unsigned word_bits) const;

  std::string debug_string() const;

 private:
  Repr repr_ = Repr::SparseArray;
  std::size_t universe_ = 0;
  std::size_t card_ = 0;
  SetId id_ = kNoSetId;
  std::vector<Vertex> elems_;
  std::vector<std::uint64_t> bits_;
};

/// Same members, regardless of layout or id.
bool same_elements(const SetValue &a, const SetValue &b);

inline std::size_t words_for(std::size_t universe) {
  return (universe + 63) / 64;
}

}  // namespace sisa
