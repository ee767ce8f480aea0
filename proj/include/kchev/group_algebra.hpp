#pragma once

#include <map>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include "kchev/weyl.hpp"

namespace kchev {

using BigInt = boost::multiprecision::cpp_int;

// An element of the group algebra Z[weight lattice]: a finitely supported
// map from weights to exact integer coefficients. Zero coefficients are
// never stored; the term map is ordered lexicographically by coordinates,
// which pins serialization and equality.
class GroupAlgebraElem {
 public:
  explicit GroupAlgebraElem(int rank) : rank_(rank) {}

  static GroupAlgebraElem zero(int rank) { return GroupAlgebraElem(rank); }
  static GroupAlgebraElem one(int rank) {
    return monomial(Weight::zero(rank));
  }
  static GroupAlgebraElem monomial(const Weight& lambda, BigInt coeff = 1) {
    GroupAlgebraElem e(lambda.rank());
    e.add_term(lambda, coeff);
    return e;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Weight, BigInt>& terms() const { return terms_; }

  BigInt coeff(const Weight& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const Weight& lambda, const BigInt& c) {
    if (c == 0) return;
    if (lambda.rank() != rank_)
      throw DimensionMismatch("term rank differs from element rank");
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupAlgebraElem& operator+=(const GroupAlgebraElem& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupAlgebraElem& operator-=(const GroupAlgebraElem& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }

  friend GroupAlgebraElem operator+(GroupAlgebraElem a,
                                    const GroupAlgebraElem& b) {
    return a += b;
  }
  friend GroupAlgebraElem operator-(GroupAlgebraElem a,
                                    const GroupAlgebraElem& b) {
    return a -= b;
  }
  friend GroupAlgebraElem operator-(const GroupAlgebraElem& a) {
    GroupAlgebraElem out(a.rank_);
    for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
    return out;
  }

  // convolution product
  friend GroupAlgebraElem operator*(const GroupAlgebraElem& a,
                                    const GroupAlgebraElem& b) {
    a.check_rank(b);
    GroupAlgebraElem out(a.rank_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    return out;
  }

  friend GroupAlgebraElem operator*(const BigInt& c, GroupAlgebraElem a) {
    if (c == 0) return GroupAlgebraElem(a.rank_);
    for (auto& [w, x] : a.terms_) x *= c;
    return a;
  }

  bool operator==(const GroupAlgebraElem& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

 private:
  void check_rank(const GroupAlgebraElem& o) const {
    if (rank_ != o.rank_)
      throw DimensionMismatch("group algebra elements have different ranks");
  }

  int rank_;
  std::map<Weight, BigInt> terms_;
};

// T^1: relabels e^lambda -> e^{w lambda}; a ring automorphism
GroupAlgebraElem weyl_act(const WeylElem& w, const GroupAlgebraElem& f);

// single-letter T^1
GroupAlgebraElem demazure_t1(const RootSystem& rs, int i,
                             const GroupAlgebraElem& f);

// T^0 on e^lambda with m = lambda(alpha_i^vee):
//   m = 0:  0
//   m > 0:  e^lambda + e^{lambda-alpha} + ... + e^{lambda-(m-1)alpha}
//   m < 0:  -e^{lambda+alpha} - ... - e^{lambda+|m|alpha}
GroupAlgebraElem demazure_t0(const RootSystem& rs, int i,
                             const GroupAlgebraElem& f);

// classical Demazure operator T^0 + T^1; idempotent, satisfies the braid
// relations of W
GroupAlgebraElem demazure_classical(const RootSystem& rs, int i,
                                    const GroupAlgebraElem& f);

// sum of coefficients; the ring map to ordinary K-theory
BigInt augment_ev(const GroupAlgebraElem& f);

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElem& f);

}  // namespace kchev
