#include "kchev/chevalley.hpp"

#include <sstream>

namespace kchev {

namespace {

// Group the cell coefficients by the 0-Hecke product of the selected
// subword. The fold value is shared along the prefix tree of {0,1}^N.
void group_cells_rec(const BSExpansion& expansion, int pos,
                     std::uint32_t mask, const WeylElem& v,
                     ChevalleyExpansion::TermMap& out) {
  const BSContext& ctx = expansion.context();
  const int n = ctx.size();
  if (pos == n) {
    GroupAlgebraElem coeff =
        expansion.coefficient(CellIndex::from_mask(mask, n));
    if (coeff.is_zero()) return;
    auto [it, inserted] = out.emplace(v, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  group_cells_rec(expansion, pos + 1, mask, v, out);
  int mu = ctx.word()[pos];
  const RootSystemPtr& rs = ctx.root_system_ptr();
  WeylElem next = v;
  if (rs->is_positive_root(v.apply(rs->simple_root(mu))))
    next = v * WeylElem::simple_reflection(rs, mu);
  group_cells_rec(expansion, pos + 1, mask | (1u << pos), next, out);
}

Word resolve_reduced_word(const RootSystemPtr& rs, const Word& word,
                          bool auto_reduce, bool& auto_reduced) {
  auto_reduced = false;
  if (is_reduced(rs, word)) return word;
  if (!auto_reduce)
    throw NotReduced("word is not a reduced decomposition");
  auto_reduced = true;
  return WeylElem::from_word(rs, word).reduced_word();
}

}  // namespace

ChevalleyExpansion chevalley_expand(RootSystemPtr rs, const Word& word,
                                    const Weight& lambda, bool auto_reduce,
                                    int max_word_length) {
  if (lambda.rank() != rs->rank())
    throw DimensionMismatch("weight rank differs from root system rank");
  bool auto_reduced = false;
  Word used = resolve_reduced_word(rs, word, auto_reduce, auto_reduced);
  BSContext ctx(rs, used, max_word_length);
  BSExpansion expansion = line_bundle_expansion(ctx, lambda);
  ChevalleyExpansion::TermMap terms;
  group_cells_rec(expansion, 0, 0, WeylElem::identity(rs), terms);
  return ChevalleyExpansion(std::move(rs), std::move(used), lambda,
                            auto_reduced, std::move(terms));
}

ChevalleyExpansion chevalley_expand(const WeylElem& w, const Weight& lambda,
                                    int max_word_length) {
  return chevalley_expand(w.root_system_ptr(), w.reduced_word(), lambda, false,
                          max_word_length);
}

OrdinaryExpansion chevalley_ordinary(RootSystemPtr rs, const Word& word,
                                     const Weight& lambda, bool auto_reduce,
                                     int max_word_length) {
  ChevalleyExpansion eq =
      chevalley_expand(rs, word, lambda, auto_reduce, max_word_length);
  OrdinaryExpansion::TermMap terms;
  for (const auto& [v, coeff] : eq.terms()) {
    BigInt value = augment_ev(coeff);
    if (value != 0) terms.emplace(v, std::move(value));
  }
  return OrdinaryExpansion(std::move(rs), eq.word(), lambda,
                           eq.auto_reduced(), std::move(terms));
}

OrdinaryExpansion chevalley_ordinary(const WeylElem& w, const Weight& lambda,
                                     int max_word_length) {
  return chevalley_ordinary(w.root_system_ptr(), w.reduced_word(), lambda,
                            false, max_word_length);
}

WordIndependenceReport verify_word_independence(const WeylElem& w,
                                                const Weight& lambda,
                                                std::size_t word_cap,
                                                int max_word_length) {
  WordIndependenceReport report;
  auto words = reduced_words(w, word_cap);
  report.exhaustive = words.size() < word_cap;
  ChevalleyExpansion reference = chevalley_expand(w, lambda, max_word_length);
  for (const Word& word : words) {
    ChevalleyExpansion candidate = chevalley_expand(
        w.root_system_ptr(), word, lambda, false, max_word_length);
    ++report.words_checked;
    if (!(candidate.terms() == reference.terms())) {
      report.pass = false;
      std::ostringstream os;
      os << "expansion differs for an alternative reduced word of " << w;
      report.detail = os.str();
    }
  }
  return report;
}

PositivityReport check_positivity(RootSystemPtr rs, const Weight& lambda,
                                  std::size_t group_cap, int max_word_length) {
  if (!lambda.is_dominant())
    throw NotDominant("positivity sweep requires a dominant weight");
  PositivityReport report;
  for (const WeylElem& w : all_elements(rs, group_cap)) {
    ChevalleyExpansion expansion = chevalley_expand(w, lambda, max_word_length);
    ++report.elements_checked;
    for (const auto& [v, coeff] : expansion.terms())
      for (const auto& [exponent, c] : coeff.terms())
        if (c < 0) {
          report.pass = false;
          report.violations.push_back(
              {w.reduced_word(), v.reduced_word(), exponent, c});
        }
  }
  return report;
}

std::vector<ChevalleyExpansion> chevalley_table(RootSystemPtr rs,
                                                const Weight& lambda,
                                                std::size_t group_cap,
                                                int max_word_length) {
  std::vector<ChevalleyExpansion> rows;
  for (const WeylElem& w : all_elements(rs, group_cap))
    rows.push_back(chevalley_expand(w, lambda, max_word_length));
  return rows;
}

}  // namespace kchev
