#include "doctest.h"
#include "kchev/render.hpp"

using namespace kchev;

namespace {

RootSystemPtr make(const std::string& type) {
  return RootSystem::build(CartanSpec::from_string(type));
}

}  // namespace

TEST_CASE("weights expand exactly over the simple roots") {
  auto a2 = make("A2");
  // rho_1 = (2 alpha_1 + alpha_2) / 3
  auto rc = weight_root_coords(*a2, Weight({1, 0}));
  REQUIRE(rc.size() == 2);
  CHECK(rc[0] == std::pair<BigInt, BigInt>(2, 3));
  CHECK(rc[1] == std::pair<BigInt, BigInt>(1, 3));

  auto g2 = make("G2");
  auto rho2 = weight_root_coords(*g2, Weight({0, 1}));
  CHECK(rho2[0] == std::pair<BigInt, BigInt>(3, 1));
  CHECK(rho2[1] == std::pair<BigInt, BigInt>(2, 1));

  // round trip through integral root coordinates
  for (const auto& c : g2->positive_root_coords()) {
    auto back = weight_root_coords(*g2, g2->root_coords_to_weight(c));
    for (int j = 0; j < 2; ++j) {
      CHECK(back[j].first == c[j]);
      CHECK(back[j].second == 1);
    }
  }
}

TEST_CASE("weight rendering") {
  auto a2 = make("A2");
  CHECK(weight_text(*a2, Weight({1, 0}), WeightDisplay::kFundamental) ==
        "(1,0)");
  CHECK(weight_text(*a2, Weight({1, 0}), WeightDisplay::kRootCoords) ==
        "(2/3)a1+(1/3)a2");
  CHECK(weight_latex(*a2, Weight({0, -1}), WeightDisplay::kFundamental) ==
        "-\\rho_{2}");
  CHECK(weight_latex(*a2, Weight({-1, 1}), WeightDisplay::kFundamental) ==
        "-\\rho_{1}+\\rho_{2}");
  auto g2 = make("G2");
  CHECK(weight_text(*g2, g2->root_coords_to_weight({3, 2}),
                    WeightDisplay::kRootCoords) == "3a1+2a2");
  CHECK(weight_latex(*g2, g2->root_coords_to_weight({-3, -1}),
                     WeightDisplay::kRootCoords) ==
        "-3\\alpha_{1}-\\alpha_{2}");
  CHECK(weight_text(*a2, Weight::zero(2), WeightDisplay::kRootCoords) == "0");
}

TEST_CASE("element rendering follows the coordinate order") {
  auto g2 = make("G2");
  auto rc = [&](Int c1, Int c2) {
    return GroupAlgebraElem::monomial(g2->root_coords_to_weight({c1, c2}));
  };
  auto f = rc(2, 1) + rc(1, 0) + rc(0, 0);
  CHECK(elem_text(*g2, f, WeightDisplay::kRootCoords) ==
        "1 + e^{2a1+a2} + e^{a1}");
  CHECK(elem_latex(*g2, rc(-1, 0) + rc(0, 0), WeightDisplay::kRootCoords) ==
        "e^{-\\alpha_{1}}+1");
  CHECK(elem_text(*g2, -rc(2, 1), WeightDisplay::kRootCoords) ==
        "-e^{2a1+a2}");
  CHECK(elem_text(*g2, GroupAlgebraElem::zero(2), WeightDisplay::kRootCoords)
        == "0");
  CHECK(elem_text(*g2, BigInt(3) * rc(0, 0), WeightDisplay::kFundamental) ==
        "3");
}

TEST_CASE("weyl element rendering") {
  auto a2 = make("A2");
  CHECK(weyl_text(WeylElem::identity(a2)) == "1");
  CHECK(weyl_text(WeylElem::from_word(a2, {1, 0})) == "s2 s1");
  CHECK(weyl_latex(WeylElem::from_word(a2, {1, 0})) == "s_{2}s_{1}");
}

TEST_CASE("json integers") {
  CHECK(bigint_json(BigInt(42)) == Json(42));
  CHECK(bigint_json(BigInt(-7)) == Json(-7));
  BigInt huge = BigInt("123456789012345678901234567890");
  Json j = bigint_json(huge);
  CHECK(j.is_string());
  CHECK(j.get<std::string>() == "123456789012345678901234567890");

  auto a2 = make("A2");
  auto f = GroupAlgebraElem::monomial(Weight({1, 0}), huge) +
           GroupAlgebraElem::monomial(Weight({0, 1}), -2);
  Json terms = elem_json(f);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0]["exponent"] == Json::array({0, 1}));
  CHECK(terms[0]["coeff"] == Json(-2));
  CHECK(terms[1]["coeff"].is_string());
}
