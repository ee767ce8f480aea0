#pragma once

#include <string>

#include "kchev/bott_samelson.hpp"

namespace kchev {

// The expansion [L_lambda] * O_w = sum_v q_{w,v} O_v with q_{w,v} in the
// group algebra, grouped over canonical Weyl elements so cancellations
// between cells with the same 0-Hecke product happen in exact arithmetic.
class ChevalleyExpansion {
 public:
  using TermMap = std::map<WeylElem, GroupAlgebraElem, CanonicalLess>;

  ChevalleyExpansion(RootSystemPtr rs, Word word, Weight lambda,
                     bool auto_reduced, TermMap terms)
      : rs_(std::move(rs)),
        word_(std::move(word)),
        lambda_(std::move(lambda)),
        auto_reduced_(auto_reduced),
        terms_(std::move(terms)) {}

  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Word& word() const { return word_; }  // the reduced word used
  const Weight& weight() const { return lambda_; }
  bool auto_reduced() const { return auto_reduced_; }
  const TermMap& terms() const { return terms_; }

  GroupAlgebraElem coefficient(const WeylElem& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? GroupAlgebraElem::zero(rs_->rank())
                              : it->second;
  }

 private:
  RootSystemPtr rs_;
  Word word_;
  Weight lambda_;
  bool auto_reduced_;
  TermMap terms_;
};

class OrdinaryExpansion {
 public:
  using TermMap = std::map<WeylElem, BigInt, CanonicalLess>;

  OrdinaryExpansion(RootSystemPtr rs, Word word, Weight lambda,
                    bool auto_reduced, TermMap terms)
      : rs_(std::move(rs)),
        word_(std::move(word)),
        lambda_(std::move(lambda)),
        auto_reduced_(auto_reduced),
        terms_(std::move(terms)) {}

  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const Word& word() const { return word_; }
  const Weight& weight() const { return lambda_; }
  bool auto_reduced() const { return auto_reduced_; }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(const WeylElem& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

 private:
  RootSystemPtr rs_;
  Word word_;
  Weight lambda_;
  bool auto_reduced_;
  TermMap terms_;
};

// Expand [L_lambda] * O_w over a reduced word for w. A non-reduced word is
// rejected unless auto_reduce is set, in which case the canonical word of
// its product is substituted and the substitution is recorded on the result.
ChevalleyExpansion chevalley_expand(RootSystemPtr rs, const Word& word,
                                    const Weight& lambda,
                                    bool auto_reduce = false,
                                    int max_word_length = kDefaultMaxWordLength);
ChevalleyExpansion chevalley_expand(const WeylElem& w, const Weight& lambda,
                                    int max_word_length = kDefaultMaxWordLength);

OrdinaryExpansion chevalley_ordinary(RootSystemPtr rs, const Word& word,
                                     const Weight& lambda,
                                     bool auto_reduce = false,
                                     int max_word_length = kDefaultMaxWordLength);
OrdinaryExpansion chevalley_ordinary(const WeylElem& w, const Weight& lambda,
                                     int max_word_length = kDefaultMaxWordLength);

// The grouped expansion must not depend on the choice of reduced word.
struct WordIndependenceReport {
  bool pass = true;
  std::size_t words_checked = 0;
  bool exhaustive = true;
  std::string detail;  // set on failure
};
WordIndependenceReport verify_word_independence(
    const WeylElem& w, const Weight& lambda,
    std::size_t word_cap = kDefaultReducedWordCap,
    int max_word_length = kDefaultMaxWordLength);

// For dominant lambda, every grouped coefficient over the whole group must
// be a nonnegative combination of characters.
struct PositivityViolation {
  Word w_word;
  Word v_word;
  Weight exponent;
  BigInt coeff;
};
struct PositivityReport {
  bool pass = true;
  std::size_t elements_checked = 0;
  std::vector<PositivityViolation> violations;
};
PositivityReport check_positivity(RootSystemPtr rs, const Weight& lambda,
                                  std::size_t group_cap = kDefaultGroupCap,
                                  int max_word_length = kDefaultMaxWordLength);

// One expansion per Weyl element, in canonical order.
std::vector<ChevalleyExpansion> chevalley_table(
    RootSystemPtr rs, const Weight& lambda,
    std::size_t group_cap = kDefaultGroupCap,
    int max_word_length = kDefaultMaxWordLength);

}  // namespace kchev
