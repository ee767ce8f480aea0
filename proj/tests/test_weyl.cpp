#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "kchev/weyl.hpp"

using namespace kchev;

namespace {

RootSystemPtr make(const std::string& type) {
  return RootSystem::build(CartanSpec::from_string(type));
}

// Independent enumeration of W: elements represented by the images of the
// fundamental weights under repeated rs.reflect, never touching WeylElem.
struct BruteForceGroup {
  std::vector<std::vector<Weight>> elems;  // images of rho_j
  std::vector<int> depth;                  // BFS word length = length

  explicit BruteForceGroup(const RootSystem& rs) {
    const int r = rs.rank();
    std::vector<Weight> id;
    for (int j = 0; j < r; ++j) {
      std::vector<Int> c(r, 0);
      c[j] = 1;
      id.emplace_back(std::move(c));
    }
    std::map<std::vector<Weight>, int> seen{{id, 0}};
    std::vector<std::vector<Weight>> frontier{id};
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<std::vector<Weight>> next;
      for (const auto& images : frontier)
        for (int i = 0; i < r; ++i) {
          std::vector<Weight> neu;
          for (const Weight& im : images) neu.push_back(rs.reflect(i, im));
          if (seen.emplace(neu, d).second) next.push_back(std::move(neu));
        }
      frontier = std::move(next);
    }
    for (auto& [images, dd] : seen) {
      elems.push_back(images);
      depth.push_back(dd);
    }
  }
};

}  // namespace

TEST_CASE("identity, apply, compose") {
  auto a2 = make("A2");
  auto id = WeylElem::identity(a2);
  Weight lambda({2, -1});
  CHECK(id.apply(lambda) == lambda);

  // s2 s1 s2 applied to rho_1, against a reflect-chain oracle
  auto w = WeylElem::from_word(a2, {1, 0, 1});
  Weight expected = a2->reflect(1, a2->reflect(0, a2->reflect(1, Weight({1, 0}))));
  CHECK(expected == Weight({0, -1}));
  CHECK(w.apply(Weight({1, 0})) == Weight({0, -1}));

  for (int i = 0; i < 2; ++i) {
    auto s = WeylElem::simple_reflection(a2, i);
    CHECK(s * s == id);
  }
  CHECK_THROWS_AS(WeylElem::simple_reflection(a2, 2), IndexOutOfRange);
}

TEST_CASE("length and brute-force group order") {
  auto a2 = make("A2");
  CHECK(WeylElem::identity(a2).length() == 0);
  CHECK(WeylElem::simple_reflection(a2, 0).length() == 1);

  for (const auto& type : {"A2", "B2", "G2"}) {
    auto rs = make(type);
    BruteForceGroup oracle(*rs);
    auto elems = all_elements(rs);
    CHECK(elems.size() == oracle.elems.size());
    int max_depth = 0;
    for (int d : oracle.depth) max_depth = std::max(max_depth, d);
    CHECK(longest_element(rs).length() == max_depth);
    CHECK(longest_element(rs).length() ==
          static_cast<int>(rs->positive_roots().size()));
  }
  CHECK(all_elements(make("A3")).size() == 24);
  CHECK(all_elements(make("G2")).size() == 12);
  CHECK(all_elements(make("B3")).size() == 48);
  CHECK(all_elements(make("C3")).size() == 48);
  CHECK(longest_element(make("B3")).length() == 9);
}

TEST_CASE("reduced words round-trip and are canonical") {
  for (const auto& type : {"A2", "B2", "G2", "A3"}) {
    auto rs = make(type);
    for (const WeylElem& w : all_elements(rs)) {
      const Word& word = w.reduced_word();
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(WeylElem::from_word(rs, word) == w);
      CHECK(is_reduced(rs, word));
    }
  }
  auto a2 = make("A2");
  CHECK(WeylElem::identity(a2).reduced_word().empty());
  // smallest-left-descent greedy on the longest element of A2
  CHECK(longest_element(a2).reduced_word() == Word{0, 1, 0});
}

TEST_CASE("0-Hecke products of masked subwords") {
  auto a2 = make("A2");
  Word word{1, 0, 1};  // letters alpha_2, alpha_1, alpha_2
  auto elem = [&](const Word& w) { return WeylElem::from_word(a2, w); };
  struct Row {
    CellIndex eps;
    Word expected;
  };
  const std::vector<Row> table = {
      {{0, 0, 0}, {}},        {{0, 0, 1}, {1}},    {{0, 1, 0}, {0}},
      {{1, 0, 0}, {1}},       {{1, 0, 1}, {1}},    {{0, 1, 1}, {0, 1}},
      {{1, 1, 0}, {1, 0}},    {{1, 1, 1}, {1, 0, 1}},
  };
  for (const auto& row : table)
    CHECK(demazure_product(a2, word, row.eps) == elem(row.expected));

  CHECK_THROWS_AS(demazure_product(a2, word, CellIndex{1, 0}), LengthMismatch);
}

TEST_CASE("0-Hecke product properties") {
  std::mt19937 rng(23);
  for (const auto& type : {"A2", "B2", "G2"}) {
    auto rs = make(type);
    for (const WeylElem& w : all_elements(rs))
      CHECK(demazure_product(rs, w.reduced_word()) == w);

    std::uniform_int_distribution<int> letter(0, rs->rank() - 1);
    for (int rep = 0; rep < 50; ++rep) {
      std::uniform_int_distribution<int> len(1, 8);
      Word word(static_cast<std::size_t>(len(rng)));
      for (auto& x : word) x = letter(rng);
      auto base = demazure_product(rs, word);
      // duplicating any letter in place never changes the product
      std::uniform_int_distribution<std::size_t> at(0, word.size() - 1);
      std::size_t p = at(rng);
      Word doubled = word;
      doubled.insert(doubled.begin() + static_cast<std::ptrdiff_t>(p), word[p]);
      CHECK(demazure_product(rs, doubled) == base);
    }
  }
}

TEST_CASE("is_reduced") {
  auto a2 = make("A2");
  CHECK(is_reduced(a2, {1, 0, 1}));
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  CHECK(is_reduced(a2, {}));
}

TEST_CASE("Bruhat order against subword enumeration") {
  for (const auto& type : {"A2", "B2", "G2", "A3"}) {
    auto rs = make(type);
    auto elems = all_elements(rs);
    auto oracle = [&](const WeylElem& v, const WeylElem& w) {
      const Word& word = w.reduced_word();
      const std::size_t n = word.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Word sub;
        for (std::size_t p = 0; p < n; ++p)
          if ((mask >> p) & 1u) sub.push_back(word[p]);
        if (static_cast<int>(sub.size()) == v.length() &&
            WeylElem::from_word(rs, sub) == v)
          return true;
      }
      return false;
    };
    for (const WeylElem& v : elems)
      for (const WeylElem& w : elems) CHECK(bruhat_leq(v, w) == oracle(v, w));
  }
}

TEST_CASE("Bruhat order is a partial order") {
  auto a2 = make("A2");
  auto id = WeylElem::identity(a2);
  auto s1 = WeylElem::simple_reflection(a2, 0);
  auto s2 = WeylElem::simple_reflection(a2, 1);
  auto w0 = longest_element(a2);
  for (const WeylElem& w : all_elements(a2)) {
    CHECK(bruhat_leq(id, w));
    CHECK(bruhat_leq(w, w0));
    CHECK(bruhat_leq(w, w));
  }
  CHECK(bruhat_leq(s2, WeylElem::from_word(a2, {1, 0, 1})));
  CHECK_FALSE(bruhat_leq(s1, s2));
  CHECK_FALSE(bruhat_leq(s2, s1));

  auto g2 = make("G2");
  auto elems = all_elements(g2);
  for (const WeylElem& u : elems)
    for (const WeylElem& v : elems) {
      if (bruhat_leq(u, v)) CHECK(u.length() <= v.length());
      if (bruhat_leq(u, v) && bruhat_leq(v, u)) CHECK(u == v);
      for (const WeylElem& w : elems)
        if (bruhat_leq(u, v) && bruhat_leq(v, w)) CHECK(bruhat_leq(u, w));
    }
}

TEST_CASE("enumeration order and caps") {
  auto b2 = make("B2");
  auto elems = all_elements(b2);
  CHECK(elems.size() == 8);
  CHECK(elems.front().is_identity());
  for (std::size_t k = 0; k + 1 < elems.size(); ++k)
    CHECK(CanonicalLess{}(elems[k], elems[k + 1]));
  CHECK_THROWS_AS(all_elements(make("A3"), 10), GroupTooLarge);
}

TEST_CASE("reduced word enumeration") {
  auto a2 = make("A2");
  auto words = reduced_words(longest_element(a2));
  CHECK(words.size() == 2);
  CHECK(std::set<Word>(words.begin(), words.end()) ==
        std::set<Word>{{0, 1, 0}, {1, 0, 1}});
  CHECK(reduced_words(WeylElem::simple_reflection(a2, 0)) ==
        std::vector<Word>{{0}});
  CHECK(reduced_words(longest_element(a2), 1).size() == 1);
}

TEST_CASE("pairing transport along group elements") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<Int> dist(-4, 4);
  for (const auto& type : {"A2", "B2"}) {
    auto rs = make(type);
    for (const WeylElem& w : all_elements(rs)) {
      CHECK(w * w.inverse() == WeylElem::identity(rs));
      for (int rep = 0; rep < 10; ++rep) {
        std::vector<Int> c(rs->rank());
        for (auto& x : c) x = dist(rng);
        Weight lambda(c);
        for (int i = 0; i < rs->rank(); ++i) {
          Weight beta = w.inverse().apply(rs->simple_root(i));
          CHECK(rs->pairing(w.apply(lambda), i) ==
                rs->coroot_pairing(beta, lambda));
        }
      }
    }
  }
}
