#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kchev/chevalley.hpp"

namespace py = pybind11;
using namespace kchev;

namespace {

// python-facing handle that owns the shared root system
struct PyRootSystem {
  RootSystemPtr ptr;
};

Weight to_weight(const std::vector<Int>& coords) { return Weight(coords); }

Word to_word(const std::vector<int>& one_based, const RootSystem& rs) {
  Word out;
  out.reserve(one_based.size());
  for (int v : one_based) {
    if (v < 1 || v > rs.rank())
      throw IndexOutOfRange("word letter " + std::to_string(v) +
                            " outside 1.." + std::to_string(rs.rank()));
    out.push_back(v - 1);
  }
  return out;
}

py::tuple word_tuple(const Word& word) {
  py::tuple out(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) out[k] = word[k] + 1;
  return out;
}

py::tuple coords_tuple(const Weight& w) {
  py::tuple out(w.rank());
  for (int i = 0; i < w.rank(); ++i) out[i] = w[i];
  return out;
}

py::object big_to_py(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::dict terms_dict(const GroupAlgebraElem& f) {
  py::dict out;
  for (const auto& [w, c] : f.terms()) out[coords_tuple(w)] = big_to_py(c);
  return out;
}

py::dict expansion_dict(const ChevalleyExpansion& e) {
  py::dict out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    out[word_tuple(it->first.reduced_word())] = it->second;
  return out;
}

py::dict ordinary_dict(const OrdinaryExpansion& e) {
  py::dict out;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
    out[word_tuple(it->first.reduced_word())] = big_to_py(it->second);
  return out;
}

std::string repr_of(const WeylElem& w) {
  std::ostringstream os;
  os << "<WeylElem " << w << ">";
  return os.str();
}

std::string repr_elem(const GroupAlgebraElem& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_kchev, m) {
  m.doc() = "exact Chevalley expansions in equivariant K-theory of flag varieties";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const IndexOutOfRange& e) {
      PyErr_SetString(PyExc_IndexError, e.what());
    } catch (const GroupTooLarge& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<PyRootSystem>(m, "RootSystem")
      .def_static(
          "from_type",
          [](const std::string& type) {
            return PyRootSystem{RootSystem::build(CartanSpec::from_string(type))};
          },
          py::arg("type"), "build a named finite-type root system, e.g. 'A2'")
      .def_static(
          "from_matrix",
          [](const std::vector<std::vector<Int>>& matrix) {
            return PyRootSystem{
                RootSystem::build(CartanSpec::from_matrix(matrix))};
          },
          py::arg("matrix"))
      .def_property_readonly(
          "rank", [](const PyRootSystem& rs) { return rs.ptr->rank(); })
      .def_property_readonly(
          "name", [](const PyRootSystem& rs) { return rs.ptr->name(); })
      .def("cartan", [](const PyRootSystem& rs) { return rs.ptr->cartan(); })
      .def("positive_roots",
           [](const PyRootSystem& rs) {
             py::list out;
             for (const Weight& w : rs.ptr->positive_roots())
               out.append(coords_tuple(w));
             return out;
           })
      .def(
          "simple_root",
          [](const PyRootSystem& rs, int i) {
            return coords_tuple(rs.ptr->simple_root(i - 1));
          },
          py::arg("i"), "simple root alpha_i in fundamental coordinates (1-based)")
      .def(
          "pairing",
          [](const PyRootSystem& rs, const std::vector<Int>& w, int i) {
            return rs.ptr->pairing(to_weight(w), i - 1);
          },
          py::arg("weight"), py::arg("i"))
      .def(
          "reflect",
          [](const PyRootSystem& rs, int i, const std::vector<Int>& w) {
            return coords_tuple(rs.ptr->reflect(i - 1, to_weight(w)));
          },
          py::arg("i"), py::arg("weight"))
      .def(
          "root_coords_to_weight",
          [](const PyRootSystem& rs, const std::vector<Int>& c) {
            return coords_tuple(rs.ptr->root_coords_to_weight(c));
          },
          py::arg("coords"))
      .def("__repr__", [](const PyRootSystem& rs) {
        return "<RootSystem " + rs.ptr->name() + ">";
      });

  m.def(
      "is_dominant",
      [](const std::vector<Int>& w) { return to_weight(w).is_dominant(); },
      py::arg("weight"));

  py::class_<WeylElem>(m, "WeylElem")
      .def_property_readonly("length", &WeylElem::length)
      .def("reduced_word",
           [](const WeylElem& w) { return word_tuple(w.reduced_word()); })
      .def("is_identity", &WeylElem::is_identity)
      .def(
          "apply",
          [](const WeylElem& w, const std::vector<Int>& lambda) {
            return coords_tuple(w.apply(to_weight(lambda)));
          },
          py::arg("weight"))
      .def("inverse", &WeylElem::inverse)
      .def("__mul__", &WeylElem::operator*)
      .def("__eq__", [](const WeylElem& a, const WeylElem& b) { return a == b; })
      .def("__hash__",
           [](const WeylElem& w) {
             return py::hash(word_tuple(w.reduced_word()));
           })
      .def("__repr__", &repr_of);

  m.def(
      "identity",
      [](const PyRootSystem& rs) { return WeylElem::identity(rs.ptr); },
      py::arg("rs"));
  m.def(
      "simple_reflection",
      [](const PyRootSystem& rs, int i) {
        return WeylElem::simple_reflection(rs.ptr, i - 1);
      },
      py::arg("rs"), py::arg("i"));
  m.def(
      "weyl_element",
      [](const PyRootSystem& rs, const std::vector<int>& word) {
        return WeylElem::from_word(rs.ptr, to_word(word, *rs.ptr));
      },
      py::arg("rs"), py::arg("word"), "product of the 1-based word");
  m.def(
      "is_reduced",
      [](const PyRootSystem& rs, const std::vector<int>& word) {
        return is_reduced(rs.ptr, to_word(word, *rs.ptr));
      },
      py::arg("rs"), py::arg("word"));
  m.def(
      "demazure_product",
      [](const PyRootSystem& rs, const std::vector<int>& word,
         const std::optional<std::vector<int>>& mask) {
        Word w = to_word(word, *rs.ptr);
        if (!mask) return demazure_product(rs.ptr, w);
        return demazure_product(rs.ptr, w, CellIndex(*mask));
      },
      py::arg("rs"), py::arg("word"), py::arg("mask") = py::none(),
      "0-Hecke product of the selected subword");
  m.def("bruhat_leq", &bruhat_leq, py::arg("v"), py::arg("w"));
  m.def(
      "longest_element",
      [](const PyRootSystem& rs) { return longest_element(rs.ptr); },
      py::arg("rs"));
  m.def(
      "all_elements",
      [](const PyRootSystem& rs, std::size_t cap) {
        return all_elements(rs.ptr, cap);
      },
      py::arg("rs"), py::arg("cap") = kDefaultGroupCap);
  m.def(
      "reduced_words",
      [](const WeylElem& w, std::size_t cap) {
        py::list out;
        for (const Word& word : reduced_words(w, cap))
          out.append(word_tuple(word));
        return out;
      },
      py::arg("w"), py::arg("cap") = kDefaultReducedWordCap);

  py::class_<GroupAlgebraElem>(m, "GroupAlgebraElem")
      .def_static(
          "monomial",
          [](const std::vector<Int>& w, std::int64_t coeff) {
            return GroupAlgebraElem::monomial(to_weight(w), coeff);
          },
          py::arg("weight"), py::arg("coeff") = 1)
      .def_static("one", &GroupAlgebraElem::one, py::arg("rank"))
      .def_static("zero", &GroupAlgebraElem::zero, py::arg("rank"))
      .def_property_readonly("rank", &GroupAlgebraElem::rank)
      .def("is_zero", &GroupAlgebraElem::is_zero)
      .def("terms", &terms_dict,
           "dict from exponent tuples (fundamental coordinates) to integers")
      .def("__add__",
           [](const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
             return a + b;
           })
      .def("__sub__",
           [](const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
             return a - b;
           })
      .def("__mul__",
           [](const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
             return a * b;
           })
      .def("__neg__", [](const GroupAlgebraElem& a) { return -a; })
      .def("__eq__",
           [](const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
             return a == b;
           })
      .def("__repr__", &repr_elem);

  m.def(
      "weyl_act",
      [](const WeylElem& w, const GroupAlgebraElem& f) {
        return weyl_act(w, f);
      },
      py::arg("w"), py::arg("f"));
  m.def(
      "demazure_t0",
      [](const PyRootSystem& rs, int i, const GroupAlgebraElem& f) {
        return demazure_t0(*rs.ptr, i - 1, f);
      },
      py::arg("rs"), py::arg("i"), py::arg("f"));
  m.def(
      "demazure_t1",
      [](const PyRootSystem& rs, int i, const GroupAlgebraElem& f) {
        return demazure_t1(*rs.ptr, i - 1, f);
      },
      py::arg("rs"), py::arg("i"), py::arg("f"));
  m.def(
      "demazure",
      [](const PyRootSystem& rs, int i, const GroupAlgebraElem& f) {
        return demazure_classical(*rs.ptr, i - 1, f);
      },
      py::arg("rs"), py::arg("i"), py::arg("f"),
      "classical Demazure operator T0 + T1");
  m.def(
      "ev", [](const GroupAlgebraElem& f) { return big_to_py(augment_ev(f)); },
      py::arg("f"), "sum of coefficients");

  m.def(
      "line_bundle_expansion",
      [](const PyRootSystem& rs, const std::vector<int>& word,
         const std::vector<Int>& weight, int max_n) {
        BSContext ctx(rs.ptr, to_word(word, *rs.ptr), max_n);
        auto expansion = line_bundle_expansion(ctx, to_weight(weight));
        py::dict out;
        for (const CellIndex& eps : expansion.cell_order()) {
          py::tuple bits(eps.size());
          for (int p = 0; p < eps.size(); ++p) bits[p] = eps.bit(p) ? 1 : 0;
          out[bits] = expansion.coefficient(eps);
        }
        return out;
      },
      py::arg("rs"), py::arg("word"), py::arg("weight"),
      py::arg("max_n") = kDefaultMaxWordLength,
      "nonzero cell coefficients keyed by bit tuples");

  py::class_<LocalizationReport>(m, "LocalizationReport")
      .def_readonly("passed", &LocalizationReport::pass)
      .def_readonly("checked", &LocalizationReport::checked)
      .def_property_readonly("failures",
                             [](const LocalizationReport& r) {
                               py::list out;
                               for (std::uint32_t mask : r.failures) {
                                 CellIndex eps = CellIndex::from_mask(mask, r.n);
                                 py::tuple bits(eps.size());
                                 for (int p = 0; p < eps.size(); ++p)
                                   bits[p] = eps.bit(p) ? 1 : 0;
                                 out.append(bits);
                               }
                               return out;
                             })
      .def("__repr__", [](const LocalizationReport& r) {
        return std::string("<LocalizationReport ") +
               (r.pass ? "pass" : "FAIL") + " checked=" +
               std::to_string(r.checked) + ">";
      });

  m.def(
      "verify_localization",
      [](const PyRootSystem& rs, const std::vector<int>& word,
         const std::vector<Int>& weight, int max_n) {
        BSContext ctx(rs.ptr, to_word(word, *rs.ptr), max_n);
        return verify_localization(ctx, to_weight(weight));
      },
      py::arg("rs"), py::arg("word"), py::arg("weight"),
      py::arg("max_n") = kDefaultMaxWordLength);

  py::class_<CellProductReport>(m, "CellProductReport")
      .def_readonly("passed", &CellProductReport::pass)
      .def_readonly("checked", &CellProductReport::checked);

  m.def(
      "verify_cell_product",
      [](const PyRootSystem& rs, const std::vector<int>& word, int max_n) {
        return verify_cell_product(BSContext(rs.ptr, to_word(word, *rs.ptr), max_n));
      },
      py::arg("rs"), py::arg("word"),
      py::arg("max_n") = kDefaultMaxWordLength);

  m.def(
      "chevalley_expand",
      [](const PyRootSystem& rs, const std::vector<int>& word,
         const std::vector<Int>& weight, bool auto_reduce, int max_n) {
        auto e = chevalley_expand(rs.ptr, to_word(word, *rs.ptr),
                                  to_weight(weight), auto_reduce, max_n);
        return expansion_dict(e);
      },
      py::arg("rs"), py::arg("word"), py::arg("weight"),
      py::arg("auto_reduce") = false, py::arg("max_n") = kDefaultMaxWordLength,
      "grouped coefficients keyed by canonical reduced words, leading term first");

  m.def(
      "chevalley_ordinary",
      [](const PyRootSystem& rs, const std::vector<int>& word,
         const std::vector<Int>& weight, bool auto_reduce, int max_n) {
        auto e = chevalley_ordinary(rs.ptr, to_word(word, *rs.ptr),
                                    to_weight(weight), auto_reduce, max_n);
        return ordinary_dict(e);
      },
      py::arg("rs"), py::arg("word"), py::arg("weight"),
      py::arg("auto_reduce") = false, py::arg("max_n") = kDefaultMaxWordLength);

  py::class_<WordIndependenceReport>(m, "WordIndependenceReport")
      .def_readonly("passed", &WordIndependenceReport::pass)
      .def_readonly("words_checked", &WordIndependenceReport::words_checked)
      .def_readonly("exhaustive", &WordIndependenceReport::exhaustive);

  m.def(
      "verify_word_independence",
      [](const WeylElem& w, const std::vector<Int>& weight,
         std::size_t word_cap) {
        return verify_word_independence(w, to_weight(weight), word_cap);
      },
      py::arg("w"), py::arg("weight"),
      py::arg("word_cap") = kDefaultReducedWordCap);

  py::class_<PositivityReport>(m, "PositivityReport")
      .def_readonly("passed", &PositivityReport::pass)
      .def_readonly("elements_checked", &PositivityReport::elements_checked)
      .def_property_readonly("violations", [](const PositivityReport& r) {
        return r.violations.size();
      });

  m.def(
      "check_positivity",
      [](const PyRootSystem& rs, const std::vector<Int>& weight,
         std::size_t group_cap) {
        return check_positivity(rs.ptr, to_weight(weight), group_cap);
      },
      py::arg("rs"), py::arg("weight"), py::arg("group_cap") = kDefaultGroupCap);

  m.def(
      "chevalley_table",
      [](const PyRootSystem& rs, const std::vector<Int>& weight,
         std::size_t group_cap) {
        py::list out;
        for (const auto& row : chevalley_table(rs.ptr, to_weight(weight),
                                               group_cap))
          out.append(py::make_tuple(word_tuple(row.word()),
                                    expansion_dict(row)));
        return out;
      },
      py::arg("rs"), py::arg("weight"), py::arg("group_cap") = kDefaultGroupCap);

#ifdef KCHEV_VERSION
  m.attr("__version__") = KCHEV_VERSION;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
