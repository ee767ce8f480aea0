#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "kchev/cell_index.hpp"
#include "kchev/root_system.hpp"

namespace kchev {

// A word in the simple reflections, 0-based indices, repetitions allowed.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;
inline constexpr std::size_t kDefaultReducedWordCap = 5'000;

// A Weyl group element, canonically represented by its integer action matrix
// on fundamental-weight coordinates. The canonical reduced word (smallest
// left descent first) is computed at construction and cached; equality is
// matrix equality.
class WeylElem {
 public:
  static WeylElem identity(RootSystemPtr rs);
  static WeylElem simple_reflection(RootSystemPtr rs, int i);
  static WeylElem from_word(RootSystemPtr rs, const Word& word);
  // mat must act on fundamental coordinates and permute the root set
  static WeylElem from_action_matrix(RootSystemPtr rs, std::vector<Int> mat);

  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  int length() const { return static_cast<int>(word_.size()); }
  const Word& reduced_word() const { return word_; }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const Weight& lambda) const;

  // (w * u)(x) = w(u(x))
  WeylElem operator*(const WeylElem& u) const;
  WeylElem inverse() const;

  bool operator==(const WeylElem& o) const { return mat_ == o.mat_; }

  // row-major r x r action matrix
  const std::vector<Int>& matrix() const { return mat_; }

 private:
  WeylElem(RootSystemPtr rs, std::vector<Int> mat);

  RootSystemPtr rs_;
  std::vector<Int> mat_;
  Word word_;
};

// (length, lexicographic canonical word) — the canonical enumeration order
struct CanonicalLess {
  bool operator()(const WeylElem& a, const WeylElem& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.reduced_word() < b.reduced_word();
  }
};

// true iff the product of the word has length |word|
bool is_reduced(const RootSystemPtr& rs, const Word& word);

// 0-Hecke product of the letters selected by the mask (all letters when no
// mask), folded left to right in word order: w <- w s_i when that increases
// length, w otherwise.
WeylElem demazure_product(const RootSystemPtr& rs, const Word& word);
WeylElem demazure_product(const RootSystemPtr& rs, const Word& word,
                          const CellIndex& mask);

// Bruhat order via the subword property on the canonical word of w.
bool bruhat_leq(const WeylElem& v, const WeylElem& w);

WeylElem longest_element(RootSystemPtr rs);

// All of W ordered by (length, lexicographic canonical word); throws
// GroupTooLarge beyond the cap.
std::vector<WeylElem> all_elements(RootSystemPtr rs,
                                   std::size_t cap = kDefaultGroupCap);

// All reduced words of w in a deterministic DFS order (ascending last
// letter), truncated at cap.
std::vector<Word> reduced_words(const WeylElem& w,
                                std::size_t cap = kDefaultReducedWordCap);

std::ostream& operator<<(std::ostream& os, const WeylElem& w);

}  // namespace kchev
