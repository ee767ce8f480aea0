#include "kchev/group_algebra.hpp"

namespace kchev {

GroupAlgebraElem weyl_act(const WeylElem& w, const GroupAlgebraElem& f) {
  if (w.rank() != f.rank())
    throw DimensionMismatch("element rank differs from group rank");
  GroupAlgebraElem out(f.rank());
  for (const auto& [lambda, c] : f.terms()) out.add_term(w.apply(lambda), c);
  return out;
}

GroupAlgebraElem demazure_t1(const RootSystem& rs, int i,
                             const GroupAlgebraElem& f) {
  if (rs.rank() != f.rank())
    throw DimensionMismatch("element rank differs from root system rank");
  GroupAlgebraElem out(f.rank());
  for (const auto& [lambda, c] : f.terms()) out.add_term(rs.reflect(i, lambda), c);
  return out;
}

GroupAlgebraElem demazure_t0(const RootSystem& rs, int i,
                             const GroupAlgebraElem& f) {
  if (rs.rank() != f.rank())
    throw DimensionMismatch("element rank differs from root system rank");
  if (i < 0 || i >= rs.rank())
    throw IndexOutOfRange("simple index out of range");
  const Weight& alpha = rs.simple_root(i);
  GroupAlgebraElem out(f.rank());
  for (const auto& [lambda, c] : f.terms()) {
    Int m = lambda[i];
    if (m > 0) {
      Weight w = lambda;
      for (Int j = 0; j < m; ++j) {
        out.add_term(w, c);
        w -= alpha;
      }
    } else if (m < 0) {
      Weight w = lambda;
      for (Int j = 0; j < -m; ++j) {
        w += alpha;
        out.add_term(w, -c);
      }
    }
  }
  return out;
}

GroupAlgebraElem demazure_classical(const RootSystem& rs, int i,
                                    const GroupAlgebraElem& f) {
  return demazure_t0(rs, i, f) + demazure_t1(rs, i, f);
}

BigInt augment_ev(const GroupAlgebraElem& f) {
  BigInt sum = 0;
  for (const auto& [w, c] : f.terms()) sum += c;
  return sum;
}

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElem& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (w.is_zero()) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << ' ';
      os << "e^" << w;
    }
    first = false;
  }
  return os;
}

}  // namespace kchev
