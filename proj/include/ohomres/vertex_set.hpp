#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ohomres {

inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from 1..64, stored as a bitmask (vertex v is bit v-1).
///
/// Numeric order of the masks coincides with the revlex order on subsets:
/// F < G exactly when the largest element of the symmetric difference lies in G.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_vector(std::span<const int> vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  /// {1, ..., n}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  /// {lo, ..., hi}; empty when lo > hi.
  static constexpr VertexSet interval(int lo, int hi) {
    if (lo > hi) return VertexSet();
    return VertexSet(range(hi).bits_ & ~range(lo - 1).bits_);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << (v - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & 1U); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(VertexSet other) const { return (bits_ & other.bits_) == 0; }

  /// Largest element; 0 for the empty set.
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  /// Smallest element; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  void insert(int v) {
    if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex " + std::to_string(v) + " outside 1..64");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  constexpr void erase(int v) {
    if (v >= 1 && v <= 64) bits_ &= ~(std::uint64_t{1} << (v - 1));
  }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << (v - 1))); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  /// k-th smallest element, 1-based.
  int nth(int k) const {
    std::uint64_t b = bits_;
    for (int i = 1; i < k; ++i) b &= b - 1;
    return std::countr_zero(b) + 1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Revlex order on subsets.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(VertexSet s);

}  // namespace ohomres

template <>
struct std::hash<ohomres::VertexSet> {
  std::size_t operator()(ohomres::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
