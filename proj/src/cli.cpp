#include "kchev/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

namespace kchev {

namespace {

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Int>(v));
    } catch (const std::exception&) {
      throw UsageError("cannot parse integer list entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list '" + text + "'");
  return out;
}

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("environment variable ") + name +
                     " is not a nonnegative integer");
  }
}

int env_int(const char* name, int fallback) {
  return static_cast<int>(env_size(name, static_cast<std::size_t>(fallback)));
}

RootSystemPtr build_system(const RunConfig& cfg) {
  if (!cfg.type.empty())
    return RootSystem::build(CartanSpec::from_string(cfg.type));
  Json j;
  try {
    j = Json::parse(cfg.matrix_json);
  } catch (const std::exception&) {
    throw UsageError("--matrix must be a JSON integer matrix");
  }
  if (!j.is_array() || j.empty())
    throw UsageError("--matrix must be a JSON array of integer rows");
  std::vector<std::vector<Int>> m;
  for (const auto& row : j) {
    if (!row.is_array())
      throw UsageError("--matrix must be a JSON array of integer rows");
    std::vector<Int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw UsageError("--matrix entries must be integers");
      r.push_back(x.get<Int>());
    }
    m.push_back(std::move(r));
  }
  return RootSystem::build(CartanSpec::from_matrix(std::move(m)));
}

Weight build_weight(const RunConfig& cfg, const RootSystemPtr& rs,
                    const std::vector<Int>& raw) {
  if (static_cast<int>(raw.size()) != rs->rank())
    throw DimensionMismatch("weight has " + std::to_string(raw.size()) +
                            " coordinates but the rank is " +
                            std::to_string(rs->rank()));
  if (cfg.root_coords_input) return rs->root_coords_to_weight(raw);
  return Weight(raw);
}

Word build_word(const RootSystemPtr& rs, const std::vector<int>& one_based) {
  Word out;
  out.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1 || v > rs->rank())
      throw IndexOutOfRange("word letter " + std::to_string(v) +
                            " outside 1.." + std::to_string(rs->rank()));
    out.push_back(v - 1);
  }
  return out;
}

std::vector<int> one_based(const Word& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int i : word) out.push_back(i + 1);
  return out;
}

// --- term rendering -------------------------------------------------------

// sign-split rendering so sums read like hand-written output: a bare
// monomial keeps its sign outside, anything else is parenthesized
struct SignedPiece {
  bool negative = false;
  std::string body;
};

SignedPiece coeff_piece(const RootSystem& rs, const GroupAlgebraElem& f,
                        WeightDisplay display, bool latex) {
  const std::string rendered =
      latex ? elem_latex(rs, f, display) : elem_text(rs, f, display);
  if (f.size() == 1) {
    const auto& [w, c] = *f.terms().begin();
    if (c > 0) return {false, rendered};
    GroupAlgebraElem pos = GroupAlgebraElem::monomial(w, -c);
    return {true, latex ? elem_latex(rs, pos, display)
                        : elem_text(rs, pos, display)};
  }
  return {false, "(" + rendered + ")"};
}

SignedPiece scalar_piece(const BigInt& c) {
  BigInt a = c < 0 ? BigInt(-c) : c;
  return {c < 0, a == 1 ? std::string() : a.str()};
}

void append_piece(std::string& out, bool first, const SignedPiece& piece,
                  const std::string& tail) {
  if (first)
    out += (piece.negative ? "-" : "") + piece.body + tail;
  else
    out += (piece.negative ? " - " : " + ") + piece.body + tail;
}

std::string weyl_subscript_text(const WeylElem& w) { return weyl_text(w); }

// --- expand ---------------------------------------------------------------

std::string verification_line(const LocalizationReport& rep) {
  std::ostringstream os;
  os << "localization check: " << (rep.pass ? "pass" : "FAIL") << " ("
     << (rep.checked - rep.failures.size()) << "/" << rep.checked
     << " fixed points)";
  if (!rep.pass) {
    os << " failing:";
    for (std::uint32_t mask : rep.failures)
      os << ' ' << CellIndex::from_mask(mask, rep.n);
  }
  os << '\n';
  return os.str();
}

std::string expand_text(const RunConfig& cfg, const RootSystem& rs,
                        const ChevalleyExpansion& e, bool have_report,
                        const LocalizationReport& rep) {
  std::ostringstream os;
  os << "[L_{" << weight_text(rs, e.weight(), cfg.display) << "}] * O_{"
     << weyl_subscript_text(WeylElem::from_word(e.root_system_ptr(), e.word()))
     << "} =\n";
  if (e.auto_reduced()) os << "(word auto-reduced)\n";
  bool first = true;
  std::string body;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    SignedPiece piece = coeff_piece(rs, it->second, cfg.display, false);
    body += first ? (piece.negative ? "  -" : "   ") : (piece.negative ? " - " : " + ");
    body += piece.body + " O_{" + weyl_subscript_text(it->first) + "}\n";
    first = false;
  }
  if (first) body = "   0\n";
  os << body;
  if (have_report) os << verification_line(rep);
  return os.str();
}

std::string expand_ordinary_text(const RunConfig& cfg, const RootSystem& rs,
                                 const OrdinaryExpansion& e, bool have_report,
                                 const LocalizationReport& rep) {
  std::ostringstream os;
  os << "[L_{" << weight_text(rs, e.weight(), cfg.display) << "}] * O_{"
     << weyl_subscript_text(WeylElem::from_word(e.root_system_ptr(), e.word()))
     << "} =\n";
  if (e.auto_reduced()) os << "(word auto-reduced)\n";
  bool first = true;
  std::string body;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    SignedPiece piece = scalar_piece(it->second);
    if (!piece.body.empty()) piece.body += " ";
    body += first ? (piece.negative ? "  -" : "   ") : (piece.negative ? " - " : " + ");
    body += piece.body + "O_{" + weyl_subscript_text(it->first) + "}\n";
    first = false;
  }
  if (first) body = "   0\n";
  os << body;
  if (have_report) os << verification_line(rep);
  return os.str();
}

std::string expand_latex(const RunConfig& cfg, const RootSystem& rs,
                         const ChevalleyExpansion& e) {
  std::string out = "[\\mathcal{L}_{" + weight_latex(rs, e.weight(), cfg.display) +
                    "}]^{H} \\mathcal{O}_{";
  out += weyl_latex(WeylElem::from_word(e.root_system_ptr(), e.word()));
  out += "}^{H} = ";
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    append_piece(out, first, coeff_piece(rs, it->second, cfg.display, true),
                 "\\mathcal{O}_{" + weyl_latex(it->first) + "}^{H}");
    first = false;
  }
  if (first) out += "0";
  out += "\n";
  return out;
}

std::string expand_ordinary_latex(const RunConfig& cfg, const RootSystem& rs,
                                  const OrdinaryExpansion& e) {
  std::string out = "[\\mathcal{L}_{" + weight_latex(rs, e.weight(), cfg.display) +
                    "}] \\mathcal{O}_{";
  out += weyl_latex(WeylElem::from_word(e.root_system_ptr(), e.word()));
  out += "} = ";
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    append_piece(out, first, scalar_piece(it->second),
                 "\\mathcal{O}_{" + weyl_latex(it->first) + "}");
    first = false;
  }
  if (first) out += "0";
  out += "\n";
  return out;
}

Json expand_json(const RunConfig& cfg, const RootSystem& rs,
                 const ChevalleyExpansion* eq, const OrdinaryExpansion* ord,
                 bool verified) {
  Json j;
  j["group"] = rs.name();
  const Weight& lambda = eq ? eq->weight() : ord->weight();
  const Word& word = eq ? eq->word() : ord->word();
  bool auto_reduced = eq ? eq->auto_reduced() : ord->auto_reduced();
  j["weight"] = lambda.coords();
  j["word"] = one_based(word);
  Json terms = Json::array();
  if (eq) {
    for (auto it = eq->terms().rbegin(); it != eq->terms().rend(); ++it) {
      Json t;
      t["v_word"] = one_based(it->first.reduced_word());
      t["v_length"] = it->first.length();
      t["coefficient"] = elem_json(it->second);
      terms.push_back(std::move(t));
    }
  } else {
    for (auto it = ord->terms().rbegin(); it != ord->terms().rend(); ++it) {
      Json t;
      t["v_word"] = one_based(it->first.reduced_word());
      t["v_length"] = it->first.length();
      t["coefficient"] = bigint_json(it->second);
      terms.push_back(std::move(t));
    }
  }
  j["terms"] = std::move(terms);
  j["verified"] = verified;
  if (auto_reduced) {
    j["auto_reduced"] = true;
    j["input_word"] = cfg.word;
  }
  return j;
}

// --- bott-samelson --------------------------------------------------------

std::string bs_text(const RunConfig& cfg, const RootSystem& rs,
                    const BSExpansion& e, bool have_report,
                    const LocalizationReport& rep) {
  std::ostringstream os;
  os << "[L_{" << weight_text(rs, e.weight(), cfg.display)
     << "}] over cells of word (";
  const Word& w = e.context().word();
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) os << ',';
    os << (w[p] + 1);
  }
  os << "):\n";
  for (const CellIndex& eps : e.cell_order()) {
    os << "  " << eps << " l=" << eps.length() << ": "
       << elem_text(rs, e.coefficient(eps), cfg.display) << "\n";
  }
  if (have_report) os << verification_line(rep);
  return os.str();
}

std::string bs_latex(const RunConfig& cfg, const RootSystem& rs,
                     const BSExpansion& e) {
  std::string out = "[\\mathcal{L}_{" + weight_latex(rs, e.weight(), cfg.display) +
                    "}^{\\Gamma}]^{H} = ";
  bool first = true;
  for (const CellIndex& eps : e.cell_order()) {
    std::ostringstream sub;
    sub << eps;
    append_piece(out, first,
                 coeff_piece(rs, e.coefficient(eps), cfg.display, true),
                 "\\mathcal{O}_{" + sub.str() + "}^{H}");
    first = false;
  }
  if (first) out += "0";
  out += "\n";
  return out;
}

Json bs_json(const RootSystem& rs, const BSExpansion& e, bool verified) {
  Json j;
  j["group"] = rs.name();
  j["weight"] = e.weight().coords();
  j["word"] = one_based(e.context().word());
  Json cells = Json::array();
  for (const CellIndex& eps : e.cell_order()) {
    Json c;
    c["bits"] = eps.bits();
    c["length"] = eps.length();
    c["coefficient"] = elem_json(e.coefficient(eps));
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  j["verified"] = verified;
  return j;
}

// --- table ----------------------------------------------------------------

std::string table_text(const RunConfig& cfg, const RootSystem& rs,
                       const std::vector<ChevalleyExpansion>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    WeylElem w = WeylElem::from_word(row.root_system_ptr(), row.word());
    os << "w = " << w << " (length " << w.length() << "):\n";
    bool first = true;
    for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
      SignedPiece piece;
      std::string tail;
      if (cfg.ordinary) {
        piece = scalar_piece(augment_ev(it->second));
        if (!piece.body.empty()) piece.body += " ";
        tail = "O_{" + weyl_subscript_text(it->first) + "}";
      } else {
        piece = coeff_piece(rs, it->second, cfg.display, false);
        tail = " O_{" + weyl_subscript_text(it->first) + "}";
      }
      std::string line = first ? (piece.negative ? "  -" : "   ")
                               : (piece.negative ? " - " : " + ");
      os << line << piece.body << tail << "\n";
      first = false;
    }
  }
  return os.str();
}

std::string table_latex(const RunConfig& cfg, const RootSystem& rs,
                        const std::vector<ChevalleyExpansion>& rows) {
  std::string out;
  for (const auto& row : rows) {
    WeylElem w = WeylElem::from_word(row.root_system_ptr(), row.word());
    std::string line = cfg.ordinary
                           ? "[\\mathcal{L}_{" +
                                 weight_latex(rs, row.weight(), cfg.display) +
                                 "}] \\mathcal{O}_{" + weyl_latex(w) + "} = "
                           : "[\\mathcal{L}_{" +
                                 weight_latex(rs, row.weight(), cfg.display) +
                                 "}]^{H} \\mathcal{O}_{" + weyl_latex(w) +
                                 "}^{H} = ";
    bool first = true;
    for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
      if (cfg.ordinary)
        append_piece(line, first, scalar_piece(augment_ev(it->second)),
                     "\\mathcal{O}_{" + weyl_latex(it->first) + "}");
      else
        append_piece(line, first,
                     coeff_piece(rs, it->second, cfg.display, true),
                     "\\mathcal{O}_{" + weyl_latex(it->first) + "}^{H}");
      first = false;
    }
    out += line + "\n";
  }
  return out;
}

Json table_json(const RunConfig& cfg, const RootSystem& rs,
                const std::vector<ChevalleyExpansion>& rows) {
  Json j;
  j["group"] = rs.name();
  j["weight"] = rows.empty() ? Json::array() : Json(rows.front().weight().coords());
  Json out_rows = Json::array();
  for (const auto& row : rows) {
    Json r;
    r["w_word"] = one_based(row.word());
    r["w_length"] = static_cast<int>(row.word().size());
    Json terms = Json::array();
    for (auto it = row.terms().rbegin(); it != row.terms().rend(); ++it) {
      Json t;
      t["v_word"] = one_based(it->first.reduced_word());
      t["v_length"] = it->first.length();
      if (cfg.ordinary)
        t["coefficient"] = bigint_json(augment_ev(it->second));
      else
        t["coefficient"] = elem_json(it->second);
      terms.push_back(std::move(t));
    }
    r["terms"] = std::move(terms);
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  return j;
}

// --- verify ---------------------------------------------------------------

struct VerifyCheck {
  std::string name;
  Weight weight;
  bool pass = true;
  bool skipped = false;
  std::size_t cases = 0;
};

std::vector<VerifyCheck> run_verify(const RunConfig& cfg,
                                    const RootSystemPtr& rs,
                                    const std::vector<Weight>& weights) {
  std::vector<VerifyCheck> checks;
  auto elems = all_elements(rs, cfg.max_group);
  for (const Weight& lambda : weights) {
    VerifyCheck loc{"localization", lambda};
    for (const WeylElem& w : elems) {
      BSContext ctx(rs, w.reduced_word(), cfg.max_word_length);
      ++loc.cases;
      if (!verify_localization(ctx, lambda).pass) loc.pass = false;
    }
    checks.push_back(loc);

    VerifyCheck wi{"word-independence", lambda};
    for (const WeylElem& w : elems) {
      ++wi.cases;
      if (!verify_word_independence(w, lambda, cfg.max_reduced_words,
                                    cfg.max_word_length)
               .pass)
        wi.pass = false;
    }
    checks.push_back(wi);

    VerifyCheck pos{"positivity", lambda};
    if (lambda.is_dominant()) {
      auto report =
          check_positivity(rs, lambda, cfg.max_group, cfg.max_word_length);
      pos.pass = report.pass;
      pos.cases = report.elements_checked;
    } else {
      pos.skipped = true;
    }
    checks.push_back(pos);
  }
  return checks;
}

std::string verify_text(const RunConfig& cfg, const RootSystem& rs,
                        const std::vector<VerifyCheck>& checks, bool pass) {
  std::ostringstream os;
  os << "verify " << rs.name() << ":\n";
  for (const auto& c : checks) {
    os << "  " << c.name << " weight=" << weight_text(rs, c.weight, cfg.display)
       << ": ";
    if (c.skipped)
      os << "skipped (weight not dominant)";
    else
      os << (c.pass ? "pass" : "FAIL") << " (" << c.cases << " elements)";
    os << "\n";
  }
  os << "overall: " << (pass ? "pass" : "FAIL") << "\n";
  return os.str();
}

Json verify_json(const RootSystem& rs, const std::vector<Weight>& weights,
                 const std::vector<VerifyCheck>& checks, bool pass) {
  Json j;
  j["group"] = rs.name();
  Json ws = Json::array();
  for (const Weight& w : weights) ws.push_back(w.coords());
  j["weights"] = std::move(ws);
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["weight"] = c.weight.coords();
    e["pass"] = c.pass;
    e["cases"] = c.cases;
    if (c.skipped) e["skipped"] = true;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["pass"] = pass;
  return j;
}

// --- JSON self-validation ---------------------------------------------------

bool is_exact_int(const Json& v) {
  if (v.is_number_integer()) return true;
  if (!v.is_string()) return false;
  static const std::regex digits("^-?[0-9]+$");
  return std::regex_match(v.get<std::string>(), digits);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("json self-check failed: " + what);
}

void validate_int_array(const Json& v, const std::string& what) {
  require(v.is_array(), what + " must be an array");
  for (const auto& x : v)
    require(x.is_number_integer(), what + " entries must be integers");
}

void validate_coefficient(const Json& v, int rank, bool ordinary) {
  if (ordinary) {
    require(is_exact_int(v), "ordinary coefficient must be an integer");
    return;
  }
  require(v.is_array(), "coefficient must be a term list");
  for (const auto& t : v) {
    require(t.is_object() && t.contains("exponent") && t.contains("coeff"),
            "coefficient term must carry exponent and coeff");
    validate_int_array(t["exponent"], "exponent");
    require(static_cast<int>(t["exponent"].size()) == rank,
            "exponent length must equal the rank");
    require(is_exact_int(t["coeff"]), "coeff must be an integer");
  }
}

void validate_terms(const Json& terms, int rank, bool ordinary) {
  require(terms.is_array(), "terms must be an array");
  for (const auto& t : terms) {
    require(t.is_object(), "term must be an object");
    require(t.contains("v_word") && t.contains("v_length") &&
                t.contains("coefficient"),
            "term must carry v_word, v_length, coefficient");
    validate_int_array(t["v_word"], "v_word");
    require(t["v_length"].is_number_integer() &&
                t["v_length"].get<int>() ==
                    static_cast<int>(t["v_word"].size()),
            "v_length must match v_word");
    validate_coefficient(t["coefficient"], rank, ordinary);
  }
}

void validate_output_json(const RunConfig& cfg, int rank,
                          const std::string& rendered) {
  Json j = Json::parse(rendered);
  require(j.is_object(), "output must be an object");
  require(j.contains("group") && j["group"].is_string(), "group missing");
  if (cfg.subcommand == "expand") {
    require(j.contains("weight") && j.contains("word") && j.contains("terms") &&
                j.contains("verified"),
            "expand output must carry weight, word, terms, verified");
    validate_int_array(j["weight"], "weight");
    validate_int_array(j["word"], "word");
    require(j["verified"].is_boolean(), "verified must be a boolean");
    validate_terms(j["terms"], rank, cfg.ordinary);
  } else if (cfg.subcommand == "bott-samelson") {
    require(j.contains("weight") && j.contains("word") && j.contains("cells") &&
                j.contains("verified"),
            "cell output must carry weight, word, cells, verified");
    validate_int_array(j["weight"], "weight");
    validate_int_array(j["word"], "word");
    require(j["cells"].is_array(), "cells must be an array");
    for (const auto& c : j["cells"]) {
      require(c.contains("bits") && c.contains("length") &&
                  c.contains("coefficient"),
              "cell must carry bits, length, coefficient");
      validate_int_array(c["bits"], "bits");
      require(c["length"].is_number_integer(), "length must be an integer");
      validate_coefficient(c["coefficient"], rank, false);
    }
    require(j["verified"].is_boolean(), "verified must be a boolean");
  } else if (cfg.subcommand == "table") {
    require(j.contains("weight") && j.contains("rows"),
            "table output must carry weight and rows");
    require(j["rows"].is_array(), "rows must be an array");
    for (const auto& r : j["rows"]) {
      require(r.contains("w_word") && r.contains("w_length") &&
                  r.contains("terms"),
              "row must carry w_word, w_length, terms");
      validate_int_array(r["w_word"], "w_word");
      validate_terms(r["terms"], rank, cfg.ordinary);
    }
  } else if (cfg.subcommand == "verify") {
    require(j.contains("weights") && j.contains("checks") && j.contains("pass"),
            "verify output must carry weights, checks, pass");
    require(j["pass"].is_boolean(), "pass must be a boolean");
    for (const auto& c : j["checks"]) {
      require(c.contains("name") && c.contains("weight") && c.contains("pass"),
              "check must carry name, weight, pass");
    }
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.max_word_length = env_int("KCHEV_MAX_N", kDefaultMaxWordLength);
  cfg.max_group = env_size("KCHEV_MAX_GROUP", kDefaultGroupCap);
  cfg.max_reduced_words = env_size("KCHEV_MAX_WORDS", kDefaultReducedWordCap);

  CLI::App app{"exact Chevalley expansions in torus-equivariant K-theory of flag varieties"};
  app.name("kchev");
  app.require_subcommand(1);

  std::string word_str;
  std::vector<std::string> weight_strs;
  std::string display = "fundamental";
  std::string format = "text";

  auto add_cartan = [&](CLI::App* sub) {
    auto* grp = sub->add_option_group("cartan", "Cartan data");
    grp->add_option("--type", cfg.type, "named Cartan type, e.g. A2, B3, G2");
    grp->add_option("--matrix", cfg.matrix_json,
                    "Cartan matrix as JSON rows, e.g. [[2,-1],[-1,2]]");
    grp->require_option(1);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    sub->add_option("--display", display, "weight display coordinates")
        ->check(CLI::IsMember({"fundamental", "root-coords"}))
        ->capture_default_str();
    sub->add_flag("--validate-json", cfg.validate_json,
                  "re-parse and schema-check the emitted JSON");
    sub->add_option("--output", cfg.output_path, "write output to a file");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.max_word_length,
                    "cell-table word length cap")
        ->capture_default_str();
    sub->add_option("--max-group", cfg.max_group, "Weyl group size cap")
        ->capture_default_str();
    sub->add_option("--max-words", cfg.max_reduced_words,
                    "reduced-word enumeration cap")
        ->capture_default_str();
  };
  auto add_weight = [&](CLI::App* sub, bool repeatable) {
    auto* opt = sub->add_option("--weight", weight_strs,
                                "weight coordinates, e.g. 1,0")
                    ->required();
    opt->type_size(1);
    if (!repeatable) opt->expected(1);
    sub->add_flag("--root-coords", cfg.root_coords_input,
                  "read --weight in simple-root coordinates");
  };

  CLI::App* expand =
      app.add_subcommand("expand", "expand a line bundle against a Schubert class");
  add_cartan(expand);
  expand->add_option("--word", word_str, "reduced word, 1-based, e.g. 2,1,2")
      ->required();
  add_weight(expand, false);
  expand->add_flag("--ordinary", cfg.ordinary,
                   "specialize to ordinary K-theory coefficients");
  expand->add_flag("--verify", cfg.verify,
                   "certify the result against the fixed-point restrictions");
  expand->add_flag("--auto-reduce", cfg.auto_reduce,
                   "replace a non-reduced word by the canonical word of its product");
  add_output(expand);
  add_caps(expand);

  CLI::App* bs = app.add_subcommand(
      "bott-samelson", "cell-by-cell line bundle coefficients over a word");
  add_cartan(bs);
  bs->add_option("--word", word_str, "word, 1-based, repetitions allowed")
      ->required();
  add_weight(bs, false);
  bs->add_flag("--verify", cfg.verify,
               "check all fixed-point restriction identities");
  add_output(bs);
  add_caps(bs);

  CLI::App* table = app.add_subcommand(
      "table", "expansions for every Weyl group element");
  add_cartan(table);
  add_weight(table, false);
  table->add_flag("--ordinary", cfg.ordinary,
                  "specialize to ordinary K-theory coefficients");
  add_output(table);
  add_caps(table);

  CLI::App* verify = app.add_subcommand(
      "verify", "localization, word-independence and positivity sweeps");
  add_cartan(verify);
  add_weight(verify, true);
  add_output(verify);
  add_caps(verify);

  std::vector<const char*> argv;
  argv.push_back("kchev");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    CLI::App* sub =
        app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    cfg.help_text = sub->help();
    return cfg;
  } catch (const CLI::CallForAllHelp&) {
    cfg.help_text = app.help("", CLI::AppFormatMode::All);
    return cfg;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (!word_str.empty()) {
    for (Int v : parse_int_list(word_str))
      cfg.word.push_back(static_cast<int>(v));
  }
  for (const auto& ws : weight_strs) cfg.weights.push_back(parse_int_list(ws));
  cfg.display = display == "fundamental" ? WeightDisplay::kFundamental
                                         : WeightDisplay::kRootCoords;
  cfg.format = format == "text"   ? OutputFormat::kText
               : format == "json" ? OutputFormat::kJson
                                  : OutputFormat::kLatex;
  if (cfg.validate_json && cfg.format != OutputFormat::kJson)
    throw UsageError("--validate-json requires --format json");
  if (cfg.max_word_length < 0 || cfg.max_word_length > kHardMaxWordLength)
    throw UsageError("--max-n must be between 0 and " +
                     std::to_string(kHardMaxWordLength));
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.help_text.empty()) {
    out << cfg.help_text;
    return 0;
  }
  RootSystemPtr rs = build_system(cfg);
  std::vector<Weight> weights;
  for (const auto& raw : cfg.weights)
    weights.push_back(build_weight(cfg, rs, raw));

  std::string rendered;
  int exit_code = 0;

  if (cfg.subcommand == "expand") {
    Word word = build_word(rs, cfg.word);
    const Weight& lambda = weights.at(0);
    LocalizationReport rep;
    bool verified = false;
    if (cfg.ordinary) {
      OrdinaryExpansion e = chevalley_ordinary(rs, word, lambda,
                                               cfg.auto_reduce,
                                               cfg.max_word_length);
      if (cfg.verify) {
        rep = verify_localization(
            BSContext(rs, e.word(), cfg.max_word_length), lambda);
        verified = rep.pass;
        if (!rep.pass) exit_code = 1;
      }
      switch (cfg.format) {
        case OutputFormat::kText:
          rendered = expand_ordinary_text(cfg, *rs, e, cfg.verify, rep);
          break;
        case OutputFormat::kJson:
          rendered = dump_json(expand_json(cfg, *rs, nullptr, &e, verified));
          break;
        case OutputFormat::kLatex:
          rendered = expand_ordinary_latex(cfg, *rs, e);
          break;
      }
    } else {
      ChevalleyExpansion e = chevalley_expand(rs, word, lambda,
                                              cfg.auto_reduce,
                                              cfg.max_word_length);
      if (cfg.verify) {
        rep = verify_localization(
            BSContext(rs, e.word(), cfg.max_word_length), lambda);
        verified = rep.pass;
        if (!rep.pass) exit_code = 1;
      }
      switch (cfg.format) {
        case OutputFormat::kText:
          rendered = expand_text(cfg, *rs, e, cfg.verify, rep);
          break;
        case OutputFormat::kJson:
          rendered = dump_json(expand_json(cfg, *rs, &e, nullptr, verified));
          break;
        case OutputFormat::kLatex:
          rendered = expand_latex(cfg, *rs, e);
          break;
      }
    }
  } else if (cfg.subcommand == "bott-samelson") {
    Word word = build_word(rs, cfg.word);
    const Weight& lambda = weights.at(0);
    BSContext ctx(rs, word, cfg.max_word_length);
    BSExpansion e = line_bundle_expansion(ctx, lambda);
    LocalizationReport rep;
    bool verified = false;
    if (cfg.verify) {
      rep = verify_localization(e);
      verified = rep.pass;
      if (!rep.pass) exit_code = 1;
    }
    switch (cfg.format) {
      case OutputFormat::kText:
        rendered = bs_text(cfg, *rs, e, cfg.verify, rep);
        break;
      case OutputFormat::kJson:
        rendered = dump_json(bs_json(*rs, e, verified));
        break;
      case OutputFormat::kLatex:
        rendered = bs_latex(cfg, *rs, e);
        break;
    }
  } else if (cfg.subcommand == "table") {
    const Weight& lambda = weights.at(0);
    auto rows = chevalley_table(rs, lambda, cfg.max_group, cfg.max_word_length);
    switch (cfg.format) {
      case OutputFormat::kText:
        rendered = table_text(cfg, *rs, rows);
        break;
      case OutputFormat::kJson:
        rendered = dump_json(table_json(cfg, *rs, rows));
        break;
      case OutputFormat::kLatex:
        rendered = table_latex(cfg, *rs, rows);
        break;
    }
  } else if (cfg.subcommand == "verify") {
    if (cfg.format == OutputFormat::kLatex)
      throw UsageError("latex output is not available for verify");
    auto checks = run_verify(cfg, rs, weights);
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    if (!pass) exit_code = 1;
    if (cfg.format == OutputFormat::kJson)
      rendered = dump_json(verify_json(*rs, weights, checks, pass));
    else
      rendered = verify_text(cfg, *rs, checks, pass);
  } else {
    throw UsageError("unknown subcommand " + cfg.subcommand);
  }

  if (cfg.validate_json) validate_output_json(cfg, rs->rank(), rendered);

  if (!cfg.output_path.empty()) {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) throw Error("cannot open output file " + cfg.output_path);
    file << rendered;
  } else {
    out << rendered;
  }
  return exit_code;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  try {
    RunConfig cfg = parse_args(args);
    return run(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kchev
