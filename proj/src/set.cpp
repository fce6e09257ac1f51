#include "sisa/set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sisa {

const char *to_string(Repr r) {
  switch (r) {
    case Repr::SparseArray:
      return "SA";
    case Repr::DenseBitvector:
      return "DB";
  }
  return "?";
}

SetValue SetValue::sparse(std::vector<Vertex> elems, std::size_t universe) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] >= universe)
      throw std::invalid_argument("set element " + std::to_string(elems[i]) +
                                  " outside universe " +
                                  std::to_string(universe));
    if (i > 0 && elems[i - 1] >= elems[i])
      throw std::invalid_argument(
          "sparse set elements must be strictly increasing");
  }
  SetValue s;
  s.repr_ = Repr::SparseArray;
  s.universe_ = universe;
  s.card_ = elems.size();
  s.elems_ = std::move(elems);
  return s;
}

SetValue SetValue::sparse_from_unsorted(std::vector<Vertex> elems,
                                        std::size_t universe) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return sparse(std::move(elems), universe);
}

SetValue SetValue::dense(std::size_t universe) {
  SetValue s;
  s.repr_ = Repr::DenseBitvector;
  s.universe_ = universe;
  s.bits_.assign(words_for(universe), 0);
  return s;
}

SetValue SetValue::dense_from(std::span<const Vertex> elems,
                              std::size_t universe) {
  SetValue s = dense(universe);
  for (Vertex v : elems) s.insert(v);
  return s;
}

SetValue SetValue::dense_from_words(std::vector<std::uint64_t> words,
                                    std::size_t universe) {
  if (words.size() != words_for(universe))
    throw std::invalid_argument("bitvector word count does not match universe");
  if (universe % 64 != 0 && !words.empty())
    words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
  SetValue s;
  s.repr_ = Repr::DenseBitvector;
  s.universe_ = universe;
  for (auto w : words) s.card_ += static_cast<std::size_t>(std::popcount(w));
  s.bits_ = std::move(words);
  return s;
}

SetValue SetValue::full(std::size_t universe, Repr repr) {
  if (repr == Repr::DenseBitvector)
    return dense_from_words(std::vector<std::uint64_t>(words_for(universe), ~0ULL),
                            universe);
  std::vector<Vertex> all(universe);
  for (std::size_t i = 0; i < universe; ++i) all[i] = static_cast<Vertex>(i);
  return sparse(std::move(all), universe);
}

std::span<const Vertex> SetValue::elements() const {
  if (repr_ != Repr::SparseArray)
    throw std::logic_error("elements() on a dense bitvector");
  return elems_;
}

std::span<const std::uint64_t> SetValue::words() const {
  if (repr_ != Repr::DenseBitvector)
    throw std::logic_error("words() on a sparse array");
  return bits_;
}

bool SetValue::test(Vertex x) const {
  if (repr_ == Repr::DenseBitvector)
    return (bits_[x / 64] >> (x % 64)) & 1U;
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool SetValue::insert(Vertex x) {
  if (x >= universe_)
    throw std::out_of_range("vertex " + std::to_string(x) +
                            " outside universe " + std::to_string(universe_));
  if (repr_ == Repr::DenseBitvector) {
    auto &w = bits_[x / 64];
    const auto mask = std::uint64_t{1} << (x % 64);
    if (w & mask) return false;
    w |= mask;
    ++card_;
    return true;
  }
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it != elems_.end() && *it == x) return false;
  elems_.insert(it, x);
  ++card_;
  return true;
}

bool SetValue::erase(Vertex x) {
  if (x >= universe_)
    throw std::out_of_range("vertex " + std::to_string(x) +
                            " outside universe " + std::to_string(universe_));
  if (repr_ == Repr::DenseBitvector) {
    auto &w = bits_[x / 64];
    const auto mask = std::uint64_t{1} << (x % 64);
    if (!(w & mask)) return false;
    w &= ~mask;
    --card_;
    return true;
  }
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) return false;
  elems_.erase(it);
  --card_;
  return true;
}

std::vector<Vertex> SetValue::to_vector() const {
  if (repr_ == Repr::SparseArray) return elems_;
  std::vector<Vertex> out;
  out.reserve(card_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::size_t SetValue::storage_bits(unsigned word_bits) const {
  if (repr_ == Repr::DenseBitvector) return universe_;
  return card_ * word_bits;
}

std::string SetValue::debug_string() const {
  std::ostringstream os;
  os << to_string(repr_) << "{";
  bool first = true;
  for_each([&](Vertex v) {
    if (!first) os << ",";
    os << v;
    first = false;
  });
  os << "}";
  return os.str();
}

bool same_elements(const SetValue &a, const SetValue &b) {
  if (a.size() != b.size()) return false;
  if (a.is_sparse() && b.is_sparse())
    return std::ranges::equal(a.elements(), b.elements());
  return a.to_vector() == b.to_vector();
}

}  // namespace sisa
