#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "kchev/errors.hpp"

namespace kchev {

// Hard limit on cell-table word length; indices are kept in a 32-bit mask.
inline constexpr int kHardMaxWordLength = 31;

// A point of {0,1}^N indexing a cell. Bit p (0-based) is epsilon_{p+1}.
class CellIndex {
 public:
  CellIndex() = default;

  explicit CellIndex(const std::vector<int>& bits) {
    check_size(static_cast<int>(bits.size()));
    size_ = static_cast<int>(bits.size());
    for (int p = 0; p < size_; ++p) {
      if (bits[p] != 0 && bits[p] != 1)
        throw Error("cell index bits must be 0 or 1");
      if (bits[p]) mask_ |= (1u << p);
    }
  }

  CellIndex(std::initializer_list<int> bits)
      : CellIndex(std::vector<int>(bits)) {}

  static CellIndex from_mask(std::uint32_t mask, int size) {
    check_size(size);
    CellIndex c;
    c.mask_ = mask & ((size == 32) ? ~0u : ((1u << size) - 1));
    c.size_ = size;
    return c;
  }
  static CellIndex zeros(int size) { return from_mask(0, size); }
  static CellIndex ones(int size) { return from_mask(~0u, size); }

  int size() const { return size_; }
  // l(epsilon): number of set positions
  int length() const { return std::popcount(mask_); }
  bool bit(int p) const { return (mask_ >> p) & 1u; }
  std::uint32_t mask() const { return mask_; }

  std::vector<int> bits() const {
    std::vector<int> out(size_);
    for (int p = 0; p < size_; ++p) out[p] = bit(p) ? 1 : 0;
    return out;
  }

  bool operator==(const CellIndex&) const = default;

 private:
  static void check_size(int size) {
    if (size < 0 || size > kHardMaxWordLength)
      throw CapExceeded("cell index length exceeds the supported maximum");
  }

  std::uint32_t mask_ = 0;
  int size_ = 0;
};

// epsilon <= epsilon' iff every set bit of epsilon is set in epsilon'
inline bool cell_order_leq(const CellIndex& a, const CellIndex& b) {
  if (a.size() != b.size())
    throw LengthMismatch("cell indices have different lengths");
  return (a.mask() & ~b.mask()) == 0;
}

// (l(epsilon), lexicographic bits) — the deterministic output order for cell tables
struct CellOrderLess {
  bool operator()(const CellIndex& a, const CellIndex& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.bits() < b.bits();
  }
};

std::ostream& operator<<(std::ostream& os, const CellIndex& c);

}  // namespace kchev
