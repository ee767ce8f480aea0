#include "kchev/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kchev {

namespace {

std::vector<Int> identity_matrix(int r) {
  std::vector<Int> m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i) * r + i] = 1;
  return m;
}

// s_i in fundamental coordinates: column i becomes e_i - alpha_i
std::vector<Int> reflection_matrix(const RootSystem& rs, int i) {
  const int r = rs.rank();
  auto m = identity_matrix(r);
  const Weight& alpha = rs.simple_root(i);
  for (int k = 0; k < r; ++k)
    m[static_cast<std::size_t>(k) * r + i] -= alpha[k];
  return m;
}

std::vector<Int> matmul(const std::vector<Int>& a, const std::vector<Int>& b,
                        int r) {
  std::vector<Int> c(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Int aik = a[static_cast<std::size_t>(i) * r + k];
      if (aik == 0) continue;
      for (int j = 0; j < r; ++j)
        c[static_cast<std::size_t>(i) * r + j] +=
            aik * b[static_cast<std::size_t>(k) * r + j];
    }
  return c;
}

Weight matvec(const std::vector<Int>& m, const Weight& x, int r) {
  std::vector<Int> y(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      y[i] += m[static_cast<std::size_t>(i) * r + j] * x[j];
  return Weight{std::move(y)};
}

// l(w) = #{gamma in Delta+ : w gamma in Delta-}
int length_of(const RootSystem& rs, const std::vector<Int>& mat) {
  int count = 0;
  for (const Weight& gamma : rs.positive_roots())
    if (!rs.is_positive_root(matvec(mat, gamma, rs.rank()))) ++count;
  return count;
}

// Canonical word: repeatedly peel the smallest i with l(s_i w) < l(w).
Word canonical_word(const RootSystem& rs, std::vector<Int> mat) {
  Word word;
  int len = length_of(rs, mat);
  word.reserve(static_cast<std::size_t>(len));
  while (len > 0) {
    for (int i = 0; i < rs.rank(); ++i) {
      auto next = matmul(reflection_matrix(rs, i), mat, rs.rank());
      if (length_of(rs, next) < len) {
        word.push_back(i);
        mat = std::move(next);
        --len;
        break;
      }
    }
  }
  return word;
}

void check_letters(const RootSystem& rs, const Word& word) {
  for (int i : word)
    if (i < 0 || i >= rs.rank())
      throw IndexOutOfRange("word letter out of range");
}

void check_same_system(const WeylElem& a, const WeylElem& b) {
  if (a.root_system_ptr() == b.root_system_ptr()) return;
  if (a.root_system().cartan() != b.root_system().cartan())
    throw DimensionMismatch("elements belong to different root systems");
}

}  // namespace

WeylElem::WeylElem(RootSystemPtr rs, std::vector<Int> mat)
    : rs_(std::move(rs)), mat_(std::move(mat)) {
  word_ = canonical_word(*rs_, mat_);
}

WeylElem WeylElem::identity(RootSystemPtr rs) {
  auto m = identity_matrix(rs->rank());
  return WeylElem(std::move(rs), std::move(m));
}

WeylElem WeylElem::simple_reflection(RootSystemPtr rs, int i) {
  if (i < 0 || i >= rs->rank())
    throw IndexOutOfRange("simple index out of range");
  auto m = reflection_matrix(*rs, i);
  return WeylElem(std::move(rs), std::move(m));
}

WeylElem WeylElem::from_word(RootSystemPtr rs, const Word& word) {
  check_letters(*rs, word);
  auto m = identity_matrix(rs->rank());
  for (int i : word) m = matmul(m, reflection_matrix(*rs, i), rs->rank());
  return WeylElem(std::move(rs), std::move(m));
}

WeylElem WeylElem::from_action_matrix(RootSystemPtr rs, std::vector<Int> mat) {
  const int r = rs->rank();
  if (mat.size() != static_cast<std::size_t>(r) * r)
    throw DimensionMismatch("action matrix has wrong shape");
  for (const Weight& gamma : rs->positive_roots())
    if (!rs->is_root(matvec(mat, gamma, r)))
      throw Error("matrix does not permute the root set");
  return WeylElem(std::move(rs), std::move(mat));
}

Weight WeylElem::apply(const Weight& lambda) const {
  if (lambda.rank() != rank()) throw DimensionMismatch("weight rank mismatch");
  return matvec(mat_, lambda, rank());
}

WeylElem WeylElem::operator*(const WeylElem& u) const {
  check_same_system(*this, u);
  return WeylElem(rs_, matmul(mat_, u.mat_, rank()));
}

WeylElem WeylElem::inverse() const {
  Word rev(word_.rbegin(), word_.rend());
  return from_word(rs_, rev);
}

bool is_reduced(const RootSystemPtr& rs, const Word& word) {
  check_letters(*rs, word);
  auto m = identity_matrix(rs->rank());
  for (int i : word) m = matmul(m, reflection_matrix(*rs, i), rs->rank());
  return length_of(*rs, m) == static_cast<int>(word.size());
}

namespace {

WeylElem demazure_fold(const RootSystemPtr& rs, const Word& word,
                       const CellIndex* mask) {
  check_letters(*rs, word);
  if (mask && mask->size() != static_cast<int>(word.size()))
    throw LengthMismatch("mask length differs from word length");
  const int r = rs->rank();
  auto m = identity_matrix(r);
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (mask && !mask->bit(static_cast<int>(p))) continue;
    int i = word[p];
    // l(w s_i) > l(w) iff w alpha_i is positive
    if (rs->is_positive_root(matvec(m, rs->simple_root(i), r)))
      m = matmul(m, reflection_matrix(*rs, i), r);
  }
  return WeylElem::from_action_matrix(rs, std::move(m));
}

}  // namespace

WeylElem demazure_product(const RootSystemPtr& rs, const Word& word) {
  return demazure_fold(rs, word, nullptr);
}

WeylElem demazure_product(const RootSystemPtr& rs, const Word& word,
                          const CellIndex& mask) {
  return demazure_fold(rs, word, &mask);
}

bool bruhat_leq(const WeylElem& v, const WeylElem& w) {
  check_same_system(v, w);
  if (v.length() > w.length()) return false;
  // Scan a reduced word of w from the left, peeling descents off v
  // (lifting property); v <= w iff v is consumed entirely.
  const RootSystem& rs = v.root_system();
  const int r = rs.rank();
  std::vector<Int> x = v.matrix();
  int len = length_of(rs, x);
  for (int a : w.reduced_word()) {
    if (len == 0) return true;
    auto next = matmul(reflection_matrix(rs, a), x, r);
    if (length_of(rs, next) < len) {
      x = std::move(next);
      --len;
    }
  }
  return len == 0;
}

WeylElem longest_element(RootSystemPtr rs) {
  const int r = rs->rank();
  auto m = identity_matrix(r);
  bool advanced = true;
  while (advanced) {
    advanced = false;
    for (int i = 0; i < r; ++i) {
      if (rs->is_positive_root(matvec(m, rs->simple_root(i), r))) {
        m = matmul(m, reflection_matrix(*rs, i), r);
        advanced = true;
        break;
      }
    }
  }
  return WeylElem::from_action_matrix(rs, std::move(m));
}

std::vector<WeylElem> all_elements(RootSystemPtr rs, std::size_t cap) {
  const int r = rs->rank();
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> frontier{identity_matrix(r)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& m : frontier) {
      for (int i = 0; i < r; ++i) {
        auto m2 = matmul(m, reflection_matrix(*rs, i), r);
        if (seen.insert(m2).second) {
          if (seen.size() > cap)
            throw GroupTooLarge("Weyl group exceeds the configured bound");
          next.push_back(std::move(m2));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElem> out;
  out.reserve(seen.size());
  for (const auto& m : seen)
    out.push_back(WeylElem::from_action_matrix(rs, m));
  std::sort(out.begin(), out.end(), [](const WeylElem& a, const WeylElem& b) {
    return CanonicalLess{}(a, b);
  });
  return out;
}

namespace {

void reduced_words_rec(const RootSystem& rs, const std::vector<Int>& mat,
                       int len, Word& suffix, std::vector<Word>& out,
                       std::size_t cap) {
  if (out.size() >= cap) return;
  if (len == 0) {
    Word word(suffix.rbegin(), suffix.rend());
    out.push_back(std::move(word));
    return;
  }
  const int r = rs.rank();
  for (int i = 0; i < r; ++i) {
    // right descent: w alpha_i negative
    if (!rs.is_positive_root(matvec(mat, rs.simple_root(i), r))) {
      auto next = matmul(mat, reflection_matrix(rs, i), r);
      suffix.push_back(i);
      reduced_words_rec(rs, next, len - 1, suffix, out, cap);
      suffix.pop_back();
      if (out.size() >= cap) return;
    }
  }
}

}  // namespace

std::vector<Word> reduced_words(const WeylElem& w, std::size_t cap) {
  std::vector<Word> out;
  Word suffix;
  reduced_words_rec(w.root_system(), w.matrix(), w.length(), suffix, out, cap);
  return out;
}

std::ostream& operator<<(std::ostream& os, const WeylElem& w) {
  if (w.is_identity()) return os << "1";
  bool first = true;
  for (int i : w.reduced_word()) {
    if (!first) os << ' ';
    os << 's' << (i + 1);
    first = false;
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const CellIndex& c) {
  os << '(';
  for (int p = 0; p < c.size(); ++p) {
    if (p) os << ',';
    os << (c.bit(p) ? 1 : 0);
  }
  return os << ')';
}

}  // namespace kchev
