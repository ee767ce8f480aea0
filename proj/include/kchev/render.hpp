#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "kchev/chevalley.hpp"

namespace kchev {

using Json = nlohmann::ordered_json;

enum class WeightDisplay { kFundamental, kRootCoords };

// Exact expansion of a weight over the simple roots; entries are reduced
// fractions (numerator, positive denominator). Weights outside the root
// lattice have non-integral entries.
std::vector<std::pair<BigInt, BigInt>> weight_root_coords(const RootSystem& rs,
                                                          const Weight& w);

std::string weight_text(const RootSystem& rs, const Weight& w,
                        WeightDisplay display);
std::string weight_latex(const RootSystem& rs, const Weight& w,
                         WeightDisplay display);

std::string elem_text(const RootSystem& rs, const GroupAlgebraElem& f,
                      WeightDisplay display);
std::string elem_latex(const RootSystem& rs, const GroupAlgebraElem& f,
                       WeightDisplay display);

std::string weyl_text(const WeylElem& w);
std::string weyl_latex(const WeylElem& w);

// JSON value for an exact integer: a number when it fits in 64 bits, a
// decimal string beyond that.
Json bigint_json(const BigInt& value);

// sorted list of {"exponent": [...], "coeff": ...} in fundamental coordinates
Json elem_json(const GroupAlgebraElem& f);

}  // namespace kchev
