#include "kchev/render.hpp"

#include <limits>
#include <sstream>

namespace kchev {

namespace {

BigInt bigint_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

BigInt bigint_gcd(BigInt a, BigInt b) {
  a = bigint_abs(a);
  b = bigint_abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

// determinant of the k x k matrix `m` by fraction-free elimination
BigInt det(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct TermPiece {
  BigInt num;
  BigInt den;  // 1 for integers
};

std::string fraction_string(const TermPiece& t) {
  if (t.den == 1) return t.num.str();
  return t.num.str() + "/" + t.den.str();
}

// joined linear combination like "3a1+2a2" / "-\rho_1+\rho_2"
std::string linear_combination(const std::vector<TermPiece>& cs,
                               const std::string& symbol_prefix,
                               const std::string& symbol_suffix,
                               bool latex_fractions) {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const TermPiece& t = cs[i];
    if (t.num == 0) continue;
    bool negative = t.num < 0;
    TermPiece a{bigint_abs(t.num), t.den};
    if (!first)
      out += negative ? "-" : "+";
    else if (negative)
      out += "-";
    if (!(a.num == 1 && a.den == 1)) {
      if (a.den == 1) {
        out += a.num.str();
      } else if (latex_fractions) {
        out += "\\tfrac{" + a.num.str() + "}{" + a.den.str() + "}";
      } else {
        out += "(" + fraction_string(a) + ")";
      }
    }
    out += symbol_prefix + std::to_string(i + 1) + symbol_suffix;
    first = false;
  }
  if (first) out = "0";
  return out;
}

}  // namespace

std::vector<std::pair<BigInt, BigInt>> weight_root_coords(const RootSystem& rs,
                                                          const Weight& w) {
  if (w.rank() != rs.rank()) throw DimensionMismatch("weight rank mismatch");
  const int r = rs.rank();
  // solve cartan * c = coords by Cramer's rule, exactly
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = rs.cartan()[i][j];
  BigInt d = det(a);
  std::vector<std::pair<BigInt, BigInt>> out(r);
  for (int j = 0; j < r; ++j) {
    auto aj = a;
    for (int i = 0; i < r; ++i) aj[i][j] = w[i];
    BigInt num = det(std::move(aj));
    BigInt den = d;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = bigint_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    out[j] = {std::move(num), std::move(den)};
  }
  return out;
}

std::string weight_text(const RootSystem& rs, const Weight& w,
                        WeightDisplay display) {
  if (display == WeightDisplay::kFundamental) {
    std::ostringstream os;
    os << w;
    return os.str();
  }
  auto rc = weight_root_coords(rs, w);
  std::vector<TermPiece> cs;
  for (auto& [num, den] : rc) cs.push_back({num, den});
  return linear_combination(cs, "a", "", false);
}

std::string weight_latex(const RootSystem& rs, const Weight& w,
                         WeightDisplay display) {
  std::vector<TermPiece> cs;
  if (display == WeightDisplay::kFundamental) {
    for (int i = 0; i < w.rank(); ++i) cs.push_back({BigInt(w[i]), BigInt(1)});
    return linear_combination(cs, "\\rho_{", "}", true);
  }
  auto rc = weight_root_coords(rs, w);
  for (auto& [num, den] : rc) cs.push_back({num, den});
  return linear_combination(cs, "\\alpha_{", "}", true);
}

namespace {

std::string elem_string(const RootSystem& rs, const GroupAlgebraElem& f,
                        WeightDisplay display, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    bool negative = c < 0;
    BigInt a = bigint_abs(c);
    if (!first)
      out += negative ? (latex ? "-" : " - ") : (latex ? "+" : " + ");
    else if (negative)
      out += "-";
    if (w.is_zero()) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + (latex ? "" : " ");
      out += latex ? ("e^{" + weight_latex(rs, w, display) + "}")
                   : ("e^{" + weight_text(rs, w, display) + "}");
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string elem_text(const RootSystem& rs, const GroupAlgebraElem& f,
                      WeightDisplay display) {
  return elem_string(rs, f, display, false);
}

std::string elem_latex(const RootSystem& rs, const GroupAlgebraElem& f,
                       WeightDisplay display) {
  return elem_string(rs, f, display, true);
}

std::string weyl_text(const WeylElem& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string weyl_latex(const WeylElem& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (int i : w.reduced_word()) out += "s_{" + std::to_string(i + 1) + "}";
  return out;
}

Json bigint_json(const BigInt& value) {
  static const BigInt kMax = std::numeric_limits<std::int64_t>::max();
  static const BigInt kMin = std::numeric_limits<std::int64_t>::min();
  if (value >= kMin && value <= kMax)
    return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

Json elem_json(const GroupAlgebraElem& f) {
  Json terms = Json::array();
  for (const auto& [w, c] : f.terms()) {
    Json term;
    term["exponent"] = w.coords();
    term["coeff"] = bigint_json(c);
    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace kchev
