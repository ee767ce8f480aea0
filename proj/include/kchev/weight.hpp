#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "kchev/errors.hpp"

namespace kchev {

using Int = std::int64_t;

// An integral weight in fundamental-weight coordinates:
// coords[i] = lambda(alpha_i^vee), so pairings against simple coroots are
// coordinate reads and the simple reflection s_i only touches coordinate data.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}

  static Weight zero(int rank) { return Weight(std::vector<Int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Int>& coords() const { return coords_; }
  Int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (Int c : coords_)
      if (c != 0) return false;
    return true;
  }

  // true iff lambda(alpha_i^vee) >= 0 for all i
  bool is_dominant() const {
    for (Int c : coords_)
      if (c < 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }
  friend Weight operator*(Int c, Weight a) {
    for (auto& x : a.coords_) x *= c;
    return a;
  }

  // lexicographic on coordinates; used as the canonical key order everywhere
  auto operator<=>(const Weight&) const = default;

 private:
  void check_rank(const Weight& o) const {
    if (coords_.size() != o.coords_.size())
      throw DimensionMismatch("weight ranks differ");
  }

  std::vector<Int> coords_;
};

// lambda(alpha_i^vee), 0-based index, range-checked
inline Int pairing(const Weight& lambda, int i) {
  if (i < 0 || i >= lambda.rank())
    throw IndexOutOfRange("simple index out of range");
  return lambda[i];
}

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace kchev
