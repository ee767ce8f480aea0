#pragma once

#include <cstdint>
#include <utility>

#include "kchev/group_algebra.hpp"

namespace kchev {

inline constexpr int kDefaultMaxWordLength = 20;

// A word mu_1, ..., mu_N of simple reflections (repetitions allowed, no
// reducedness required) whose cells are indexed by {0,1}^N.
class BSContext {
 public:
  BSContext(RootSystemPtr rs, Word word,
            int max_word_length = kDefaultMaxWordLength);

  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const RootSystem& root_system() const { return *rs_; }
  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

 private:
  RootSystemPtr rs_;
  Word word_;
};

// Product of s_{mu_j} over the selected positions j < prefix_len, in word
// order (the ordinary product, not the 0-Hecke one).
WeylElem v_prefix(const BSContext& ctx, const CellIndex& eps, int prefix_len);

// alpha_p(eps) = v(eps restricted to positions <= p) applied to alpha_{mu_p};
// equals -alpha_{mu_p} when p is the first selected position.
Weight alpha_at(const BSContext& ctx, const CellIndex& eps, int pos);

// all of alpha_0(eps), ..., alpha_{N-1}(eps) in one pass
std::vector<Weight> alphas_at(const BSContext& ctx, const CellIndex& eps);

// restriction of the line-bundle class to the fixed point: e^{v(eps) lambda}
GroupAlgebraElem restrict_line_bundle(const BSContext& ctx,
                                      const Weight& lambda,
                                      const CellIndex& at);

// restriction of the cell class indexed by `cell` to the fixed point `at`:
// prod over zero positions p of (1 - e^{-alpha_p(at)}) when at <= cell,
// zero otherwise
GroupAlgebraElem restrict_structure_sheaf(const BSContext& ctx,
                                          const CellIndex& cell,
                                          const CellIndex& at);

// Coefficients of the line-bundle class over the cell basis, indexed by the
// cells of {0,1}^N; zero coefficients are not stored.
class BSExpansion {
 public:
  BSExpansion(BSContext ctx, Weight lambda,
              std::map<std::uint32_t, GroupAlgebraElem> cells)
      : ctx_(std::move(ctx)),
        lambda_(std::move(lambda)),
        cells_(std::move(cells)) {}

  const BSContext& context() const { return ctx_; }
  const Weight& weight() const { return lambda_; }
  const std::map<std::uint32_t, GroupAlgebraElem>& cells() const {
    return cells_;
  }

  GroupAlgebraElem coefficient(const CellIndex& eps) const;

  // stored cells ordered by (l(eps), lexicographic bits)
  std::vector<CellIndex> cell_order() const;

 private:
  BSContext ctx_;
  Weight lambda_;
  std::map<std::uint32_t, GroupAlgebraElem> cells_;
};

// The coefficient table: the cell at eps holds
// T_{mu_1}^{eps_1} ... T_{mu_N}^{eps_N}(e^lambda), computed from the
// innermost operator outward so each partial result is shared by the two
// cells extending it.
BSExpansion line_bundle_expansion(const BSContext& ctx, const Weight& lambda);

// Per-fixed-point certificate: at every point eps of {0,1}^N the expansion
// must restrict to e^{v(eps) lambda} exactly.
struct LocalizationReport {
  bool pass = true;
  int n = 0;
  std::size_t checked = 0;
  std::vector<std::uint32_t> failures;  // masks of failing fixed points
};
LocalizationReport verify_localization(const BSExpansion& expansion);
LocalizationReport verify_localization(const BSContext& ctx,
                                       const Weight& lambda);

// Checks, at every fixed point, that the class of each cell equals the
// product of the one-missing-letter classes over its zero positions.
struct CellProductReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> failures;  // (cell, at)
};
CellProductReport verify_cell_product(const BSContext& ctx);

}  // namespace kchev
