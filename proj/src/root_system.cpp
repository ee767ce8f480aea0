#include "kchev/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace kchev {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Determinant by fraction-free (Bareiss) elimination, exact.
BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct Fraction {
  Int num = 0;
  Int den = 1;
  void reduce() {
    Int g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

void validate_shape(const std::vector<std::vector<Int>>& a) {
  const std::size_t r = a.size();
  if (r == 0) throw InvalidCartan("Cartan matrix is empty");
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != r) throw InvalidCartan("Cartan matrix is not square");
    if (a[i][i] != 2) throw InvalidCartan("Cartan diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0)
        throw InvalidCartan("off-diagonal Cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InvalidCartan("Cartan zero pattern must be symmetric");
    }
  }
}

// d_i > 0 with d_i a[i][j] = d_j a[j][i]; exists for any valid generalized
// Cartan matrix whose Dynkin graph has consistent edge ratios.
std::vector<Int> compute_symmetrizer(const std::vector<std::vector<Int>>& a) {
  const int r = static_cast<int>(a.size());
  std::vector<Fraction> d(r, Fraction{0, 1});
  for (int start = 0; start < r; ++start) {
    if (d[start].num != 0) continue;
    d[start] = Fraction{1, 1};
    std::queue<int> q;
    q.push(start);
    std::vector<int> component{start};
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < r; ++j) {
        if (j == i || a[i][j] == 0) continue;
        Fraction cand{d[i].num * a[i][j], d[i].den * a[j][i]};
        if (cand.den < 0) {
          cand.num = -cand.num;
          cand.den = -cand.den;
        }
        cand.reduce();
        if (d[j].num == 0) {
          d[j] = cand;
          component.push_back(j);
          q.push(j);
        } else if (d[j].num * cand.den != cand.num * d[j].den) {
          throw InvalidCartan("Cartan matrix is not symmetrizable");
        }
      }
    }
    // clear denominators within the component
    Int lcm = 1;
    for (int i : component) lcm = std::lcm(lcm, d[i].den);
    for (int i : component) {
      d[i].num *= lcm / d[i].den;
      d[i].den = 1;
    }
  }
  std::vector<Int> out(r);
  for (int i = 0; i < r; ++i) {
    if (d[i].num <= 0) throw InvalidCartan("Cartan matrix is not symmetrizable");
    out[i] = d[i].num;
  }
  return out;
}

void validate_finite_type(const std::vector<std::vector<Int>>& a,
                          const std::vector<Int>& d) {
  const std::size_t r = a.size();
  // s[i][j] = d_i a[i][j] must be symmetric and positive definite
  std::vector<std::vector<BigInt>> s(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s[i][j] = BigInt(d[i]) * a[i][j];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s[i][j] != s[j][i])
        throw InvalidCartan("Cartan matrix is not symmetrizable");
  for (std::size_t k = 1; k <= r; ++k) {
    std::vector<std::vector<BigInt>> minor(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = s[i][j];
    if (determinant(std::move(minor)) <= 0)
      throw InvalidCartan("Cartan matrix is not of finite type");
  }
}

std::vector<std::vector<Int>> named_matrix(char letter, int rank) {
  auto bad_rank = [&] {
    throw UnsupportedRank(std::string("unsupported rank for type ") + letter +
                          std::to_string(rank));
  };
  if (rank < 1) bad_rank();
  const int r = rank;
  std::vector<std::vector<Int>> a(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto chain_edge = [&](int i, int j) {  // single bond, a[i][j] = a[j][i] = -1
    a[i][j] = -1;
    a[j][i] = -1;
  };
  switch (letter) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      break;
    case 'B':
      // alpha_r short: alpha_r(alpha_{r-1}^vee) = -1, alpha_{r-1}(alpha_r^vee) = -2
      if (r < 2) bad_rank();
      for (int i = 0; i + 2 < r; ++i) chain_edge(i, i + 1);
      a[r - 2][r - 1] = -1;
      a[r - 1][r - 2] = -2;
      break;
    case 'C':
      // alpha_r long: transpose of B
      if (r < 2) bad_rank();
      for (int i = 0; i + 2 < r; ++i) chain_edge(i, i + 1);
      a[r - 2][r - 1] = -2;
      a[r - 1][r - 2] = -1;
      break;
    case 'D':
      if (r < 3) bad_rank();
      for (int i = 0; i + 2 < r - 1; ++i) chain_edge(i, i + 1);
      chain_edge(r - 3, r - 2);
      chain_edge(r - 3, r - 1);
      break;
    case 'E':
      if (r < 6 || r > 8) bad_rank();
      // chain 1-3-4-5-...-r with node 2 attached to node 4 (1-based)
      chain_edge(0, 2);
      for (int i = 2; i + 1 < r; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case 'F':
      if (r != 4) bad_rank();
      chain_edge(0, 1);
      chain_edge(2, 3);
      // alpha_3 short, alpha_2 long
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      if (r != 2) bad_rank();
      // alpha_1 short, alpha_2 long: alpha_2(alpha_1^vee) = -3
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw UnsupportedRank(std::string("unknown Cartan type letter ") + letter);
  }
  return a;
}

}  // namespace

CartanSpec CartanSpec::named(char letter, int rank) {
  CartanSpec spec;
  spec.matrix_ = named_matrix(static_cast<char>(std::toupper(letter)), rank);
  spec.name_ = std::string(1, static_cast<char>(std::toupper(letter))) +
               std::to_string(rank);
  return spec;
}

CartanSpec CartanSpec::from_string(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw UnsupportedRank("Cartan type must look like 'A2', 'G2', ...");
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k])))
      throw UnsupportedRank("Cartan type must look like 'A2', 'G2', ...");
  int rank = std::stoi(name.substr(1));
  return named(name[0], rank);
}

CartanSpec CartanSpec::from_matrix(std::vector<std::vector<Int>> matrix) {
  validate_shape(matrix);
  CartanSpec spec;
  spec.name_ = "custom" + std::to_string(matrix.size());
  spec.matrix_ = std::move(matrix);
  return spec;
}

RootSystemPtr RootSystem::build(const CartanSpec& spec) {
  const auto& a = spec.matrix();
  validate_shape(a);
  auto d = compute_symmetrizer(a);
  validate_finite_type(a, d);

  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->rank_ = static_cast<int>(a.size());
  rs->name_ = spec.name();
  rs->cartan_ = a;
  rs->symmetrizer_ = std::move(d);
  const int r = rs->rank_;

  for (int j = 0; j < r; ++j) {
    std::vector<Int> coords(r);
    for (int i = 0; i < r; ++i) coords[i] = a[i][j];
    rs->simple_roots_.emplace_back(std::move(coords));
  }

  // Reflection closure over root coordinates. s_i changes only coordinate i:
  // c_i -> c_i - sum_j a[i][j] c_j.
  std::set<std::vector<Int>> seen;
  std::queue<std::vector<Int>> work;
  for (int j = 0; j < r; ++j) {
    std::vector<Int> c(r, 0);
    c[j] = 1;
    seen.insert(c);
    work.push(std::move(c));
  }
  while (!work.empty()) {
    std::vector<Int> c = std::move(work.front());
    work.pop();
    for (int i = 0; i < r; ++i) {
      Int p = 0;
      for (int j = 0; j < r; ++j) p += a[i][j] * c[j];
      std::vector<Int> c2 = c;
      c2[i] -= p;
      if (seen.insert(c2).second) work.push(std::move(c2));
    }
  }

  std::vector<std::vector<Int>> positive;
  for (const auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
    if (nonneg) positive.push_back(c);
  }
  std::sort(positive.begin(), positive.end());  // lexicographic by root coords

  for (auto& c : positive) {
    std::vector<Int> coords(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) coords[i] += a[i][j] * c[j];
    Weight w{std::move(coords)};
    rs->coords_by_root_.emplace(w, c);
    rs->positive_roots_.push_back(w);
    rs->positive_sorted_.push_back(std::move(w));
    rs->positive_root_coords_.push_back(std::move(c));
  }
  std::sort(rs->positive_sorted_.begin(), rs->positive_sorted_.end());
  return rs;
}

const Weight& RootSystem::simple_root(int j) const {
  if (j < 0 || j >= rank_) throw IndexOutOfRange("simple index out of range");
  return simple_roots_[static_cast<std::size_t>(j)];
}

Int RootSystem::pairing(const Weight& lambda, int i) const {
  if (lambda.rank() != rank_) throw DimensionMismatch("weight rank mismatch");
  return kchev::pairing(lambda, i);
}

Weight RootSystem::reflect(int i, const Weight& lambda) const {
  if (lambda.rank() != rank_) throw DimensionMismatch("weight rank mismatch");
  if (i < 0 || i >= rank_) throw IndexOutOfRange("simple index out of range");
  Weight out = lambda;
  Int p = lambda[i];
  if (p != 0) out -= p * simple_roots_[static_cast<std::size_t>(i)];
  return out;
}

Weight RootSystem::root_coords_to_weight(const std::vector<Int>& c) const {
  if (static_cast<int>(c.size()) != rank_)
    throw DimensionMismatch("root-coordinate vector has wrong length");
  std::vector<Int> coords(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) coords[i] += cartan_[i][j] * c[j];
  return Weight{std::move(coords)};
}

bool RootSystem::is_positive_root(const Weight& w) const {
  return std::binary_search(positive_sorted_.begin(), positive_sorted_.end(), w);
}

bool RootSystem::is_root(const Weight& w) const {
  return is_positive_root(w) || is_positive_root(-w);
}

std::optional<std::vector<Int>> RootSystem::root_coords_of(const Weight& w) const {
  if (auto it = coords_by_root_.find(w); it != coords_by_root_.end())
    return it->second;
  if (auto it = coords_by_root_.find(-w); it != coords_by_root_.end()) {
    std::vector<Int> c = it->second;
    for (auto& x : c) x = -x;
    return c;
  }
  return std::nullopt;
}

Int RootSystem::coroot_pairing(const Weight& beta, const Weight& lambda) const {
  if (lambda.rank() != rank_) throw DimensionMismatch("weight rank mismatch");
  auto c = root_coords_of(beta);
  if (!c) throw Error("coroot_pairing: weight is not a root");
  // lambda(beta^vee) = 2 (lambda, beta) / (beta, beta) with
  // (lambda, alpha_j) = d_j lambda_j and (alpha_j, alpha_k) = d_j a[j][k]
  Int num = 0;
  for (int j = 0; j < rank_; ++j) num += (*c)[j] * symmetrizer_[j] * lambda[j];
  Int den = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      den += (*c)[j] * (*c)[k] * symmetrizer_[j] * cartan_[j][k];
  num *= 2;
  return num / den;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (int i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os << ')';
}

}  // namespace kchev
