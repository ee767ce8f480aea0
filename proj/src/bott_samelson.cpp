#include "kchev/bott_samelson.hpp"

#include <algorithm>

namespace kchev {

BSContext::BSContext(RootSystemPtr rs, Word word, int max_word_length)
    : rs_(std::move(rs)), word_(std::move(word)) {
  for (int i : word_)
    if (i < 0 || i >= rs_->rank())
      throw IndexOutOfRange("word letter out of range");
  int cap = std::min(max_word_length, kHardMaxWordLength);
  if (static_cast<int>(word_.size()) > cap)
    throw CapExceeded("word length exceeds the cell-table cap");
}

WeylElem v_prefix(const BSContext& ctx, const CellIndex& eps, int prefix_len) {
  if (eps.size() != ctx.size())
    throw LengthMismatch("cell index length differs from word length");
  if (prefix_len < 0 || prefix_len > ctx.size())
    throw IndexOutOfRange("prefix length out of range");
  WeylElem w = WeylElem::identity(ctx.root_system_ptr());
  for (int p = 0; p < prefix_len; ++p)
    if (eps.bit(p))
      w = w * WeylElem::simple_reflection(ctx.root_system_ptr(), ctx.word()[p]);
  return w;
}

std::vector<Weight> alphas_at(const BSContext& ctx, const CellIndex& eps) {
  if (eps.size() != ctx.size())
    throw LengthMismatch("cell index length differs from word length");
  const RootSystem& rs = ctx.root_system();
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(ctx.size()));
  WeylElem v = WeylElem::identity(ctx.root_system_ptr());
  for (int p = 0; p < ctx.size(); ++p) {
    int mu = ctx.word()[p];
    if (eps.bit(p))
      v = v * WeylElem::simple_reflection(ctx.root_system_ptr(), mu);
    out.push_back(v.apply(rs.simple_root(mu)));
  }
  return out;
}

Weight alpha_at(const BSContext& ctx, const CellIndex& eps, int pos) {
  if (pos < 0 || pos >= ctx.size())
    throw IndexOutOfRange("word position out of range");
  int mu = ctx.word()[pos];
  WeylElem v = v_prefix(ctx, eps, pos + 1);
  return v.apply(ctx.root_system().simple_root(mu));
}

GroupAlgebraElem restrict_line_bundle(const BSContext& ctx,
                                      const Weight& lambda,
                                      const CellIndex& at) {
  WeylElem v = v_prefix(ctx, at, ctx.size());
  return GroupAlgebraElem::monomial(v.apply(lambda));
}

namespace {

GroupAlgebraElem binomial_factor(const Weight& alpha) {
  GroupAlgebraElem f = GroupAlgebraElem::one(alpha.rank());
  f.add_term(-alpha, -1);
  return f;
}

GroupAlgebraElem structure_sheaf_from_alphas(const BSContext& ctx,
                                             const CellIndex& cell,
                                             const CellIndex& at,
                                             const std::vector<Weight>& alphas) {
  const int rank = ctx.root_system().rank();
  if (!cell_order_leq(at, cell)) return GroupAlgebraElem::zero(rank);
  GroupAlgebraElem out = GroupAlgebraElem::one(rank);
  for (int p = 0; p < ctx.size(); ++p)
    if (!cell.bit(p)) out = out * binomial_factor(alphas[p]);
  return out;
}

}  // namespace

GroupAlgebraElem restrict_structure_sheaf(const BSContext& ctx,
                                          const CellIndex& cell,
                                          const CellIndex& at) {
  if (cell.size() != ctx.size() || at.size() != ctx.size())
    throw LengthMismatch("cell index length differs from word length");
  if (!cell_order_leq(at, cell))
    return GroupAlgebraElem::zero(ctx.root_system().rank());
  return structure_sheaf_from_alphas(ctx, cell, at, alphas_at(ctx, at));
}

GroupAlgebraElem BSExpansion::coefficient(const CellIndex& eps) const {
  if (eps.size() != ctx_.size())
    throw LengthMismatch("cell index length differs from word length");
  auto it = cells_.find(eps.mask());
  return it == cells_.end() ? GroupAlgebraElem::zero(ctx_.root_system().rank())
                            : it->second;
}

std::vector<CellIndex> BSExpansion::cell_order() const {
  std::vector<CellIndex> order;
  order.reserve(cells_.size());
  for (const auto& [mask, coeff] : cells_)
    order.push_back(CellIndex::from_mask(mask, ctx_.size()));
  std::sort(order.begin(), order.end(), CellOrderLess{});
  return order;
}

BSExpansion line_bundle_expansion(const BSContext& ctx, const Weight& lambda) {
  const RootSystem& rs = ctx.root_system();
  if (lambda.rank() != rs.rank())
    throw DimensionMismatch("weight rank differs from root system rank");
  const int n = ctx.size();
  // level k holds the values of T_{mu_{k+1}}^{b_0} ... T_{mu_N}^{b_last}
  // indexed by the suffix bits (b_0 = eps_{k+1})
  std::vector<GroupAlgebraElem> level{GroupAlgebraElem::monomial(lambda)};
  for (int k = n - 1; k >= 0; --k) {
    int mu = ctx.word()[k];
    std::vector<GroupAlgebraElem> next;
    next.reserve(level.size() * 2);
    for (const GroupAlgebraElem& f : level) {
      next.push_back(demazure_t0(rs, mu, f));
      next.push_back(demazure_t1(rs, mu, f));
    }
    level = std::move(next);
  }
  // entry index: bit 0 = eps at position 0, matching CellIndex masks
  std::map<std::uint32_t, GroupAlgebraElem> cells;
  for (std::uint32_t mask = 0; mask < level.size(); ++mask) {
    if (level[mask].is_zero()) continue;
    cells.emplace(mask, std::move(level[mask]));
  }
  return BSExpansion(ctx, lambda, std::move(cells));
}

LocalizationReport verify_localization(const BSExpansion& expansion) {
  const BSContext& ctx = expansion.context();
  const int n = ctx.size();
  LocalizationReport report;
  report.n = n;
  for (std::uint32_t delta = 0; delta < (1u << n); ++delta) {
    CellIndex at = CellIndex::from_mask(delta, n);
    auto alphas = alphas_at(ctx, at);
    std::vector<int> free_pos;
    for (int p = 0; p < n; ++p)
      if (!at.bit(p)) free_pos.push_back(p);
    const int f = static_cast<int>(free_pos.size());
    // h starts as the coefficient table on the cells above `at`; repeatedly
    // contract one free position: h[t] <- h[t with bit set] + factor * h[t]
    std::vector<GroupAlgebraElem> h;
    h.reserve(1u << f);
    for (std::uint32_t s = 0; s < (1u << f); ++s) {
      std::uint32_t mask = delta;
      for (int b = 0; b < f; ++b)
        if ((s >> b) & 1u) mask |= (1u << free_pos[b]);
      h.push_back(expansion.coefficient(CellIndex::from_mask(mask, n)));
    }
    for (int b = f - 1; b >= 0; --b) {
      GroupAlgebraElem factor = binomial_factor(alphas[free_pos[b]]);
      for (std::uint32_t t = 0; t < (1u << b); ++t)
        h[t] = h[t | (1u << b)] + factor * h[t];
      h.erase(h.begin() + (1u << b), h.end());
    }
    GroupAlgebraElem expected = restrict_line_bundle(ctx, expansion.weight(), at);
    ++report.checked;
    if (!(h[0] == expected)) {
      report.pass = false;
      report.failures.push_back(delta);
    }
  }
  return report;
}

LocalizationReport verify_localization(const BSContext& ctx,
                                       const Weight& lambda) {
  return verify_localization(line_bundle_expansion(ctx, lambda));
}

CellProductReport verify_cell_product(const BSContext& ctx) {
  const RootSystem& rs = ctx.root_system();
  const int n = ctx.size();
  CellProductReport report;
  for (std::uint32_t dmask = 0; dmask < (1u << n); ++dmask) {
    CellIndex at = CellIndex::from_mask(dmask, n);
    auto alphas = alphas_at(ctx, at);
    for (std::uint32_t cmask = 0; cmask < (1u << n); ++cmask) {
      CellIndex cell = CellIndex::from_mask(cmask, n);
      GroupAlgebraElem lhs = cell_order_leq(at, cell)
                                 ? structure_sheaf_from_alphas(ctx, cell, at, alphas)
                                 : GroupAlgebraElem::zero(rs.rank());
      GroupAlgebraElem rhs = GroupAlgebraElem::one(rs.rank());
      for (int p = 0; p < n && !rhs.is_zero(); ++p) {
        if (cell.bit(p)) continue;
        // the cell with a single zero at p restricts to one factor, or to
        // zero when `at` selects p
        if (at.bit(p))
          rhs = GroupAlgebraElem::zero(rs.rank());
        else
          rhs = rhs * binomial_factor(alphas[p]);
      }
      ++report.checked;
      if (!(lhs == rhs)) {
        report.pass = false;
        report.failures.emplace_back(cmask, dmask);
      }
    }
  }
  return report;
}

}  // namespace kchev
