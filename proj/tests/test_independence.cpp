#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fquandle/independence.hpp"
#include "fquandle/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace fquandle;
using fquandle::test::elem;
using fquandle::test::elems;
using fquandle::test::word;
using fquandle::test::xy;

TEST_CASE("significant indices sit on the central letter") {
  Element const e = elem("x^(y x^-1)");
  CHECK(significant_index(e, Sign::Plus) == 3);
  CHECK(significant_index(e, Sign::Minus) == e.group_length() + 1 - 3);
  CHECK(significant_index(elem("y"), Sign::Plus) == 1);
}

TEST_CASE("check_significant_factors examples") {
  CHECK(check_significant_factors(elems({"x", "y"})).passed);
  CHECK(check_significant_factors(elems({"x^(y)", "x^(y^-1)"})).passed);

  auto const s = elems({"x^(y)", "y"});
  IndependenceReport const r = check_significant_factors(s);
  CHECK_FALSE(r.passed);
  REQUIRE(r.first_failure);
  CHECK(s[r.first_failure->left.member] == elem("y"));
  CHECK(r.first_failure->left.sign == Sign::Plus);
  CHECK(s[r.first_failure->right.member] == elem("x^(y)"));
  CHECK(r.first_failure->right.sign == Sign::Plus);
  CHECK(r.first_failure->depth == 1);
  CHECK(r.verdict.find("not satisfied") != std::string::npos);
  CHECK(r.verdict.find("dependent") == std::string::npos);

  CHECK_THROWS_AS(check_significant_factors({}), Error);
}

TEST_CASE("nielsen_independent examples") {
  CHECK(nielsen_independent({word("x"), word("y")}).passed);

  IndependenceReport const r = nielsen_independent({word("x y"), word("y")});
  CHECK(r.passed);
  CHECK(r.moves == 1);
  CHECK(std::find(r.reduced.begin(), r.reduced.end(), word("x")) !=
        r.reduced.end());

  IndependenceReport const inv = nielsen_independent({word("x"), word("x^-1")});
  CHECK_FALSE(inv.passed);
  CHECK(inv.collapsed.has_value());

  // {x^y, y} passes Nielsen even though it fails the central-factor check.
  CHECK(nielsen_independent(group_words(elems({"x^(y)", "y"}))).passed);

  // dependent: x y x^-1 y^-1, x, y
  CHECK_FALSE(
      nielsen_independent({word("x y x^-1 y^-1"), word("x"), word("y")}).passed);
  CHECK(nielsen_independent({word("x"), word("x")}).passed);  // deduplicated

  try {
    nielsen_independent({word("x"), word("1")});
    FAIL("expected EmptyInputWord");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::EmptyInputWord);
  }
  CHECK_THROWS_AS(nielsen_independent({}), Error);
}

TEST_CASE("Nielsen reduction agrees with Stallings folding") {
  Rng rng(555);
  auto const a = test::xyz();
  int dependent = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t const count = 1 + uniform_below(rng, 4);
    std::vector<Word> words;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const len = 1 + uniform_below(rng, 5);
      words.push_back(random_word(trial % 2 ? a : xy(), len, rng,
                                  static_cast<GeneratorIndex>(a->size())));
    }
    IndependenceReport const r = nielsen_independent(words);
    bool const expected = oracle::stallings_independent(words);
    CAPTURE(trial);
    CHECK(r.passed == expected);
    if (r.passed) {
      CHECK(is_nielsen_reduced(r.reduced));
    } else {
      ++dependent;
    }
  }
  CHECK(dependent > 100);  // the corpus exercises both outcomes
}

TEST_CASE("Hall criterion: oracle agreement, soundness, permutation invariance") {
  Rng rng(77);
  int passes = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto const alphabet = trial % 2 ? test::xyz() : xy();
    std::vector<Element> s;
    std::size_t const count = 1 + uniform_below(rng, 4);
    for (std::size_t i = 0; i < count; ++i) {
      s.push_back(random_element(alphabet, 3, rng));
    }
    s = dedupe(s);
    IndependenceReport const r = check_significant_factors(s);
    CAPTURE(trial);
    CHECK(r.passed == oracle::brute_force_hall(s));
    if (r.passed) {
      ++passes;
      // Hall's criterion is sufficient for independence.
      CHECK(nielsen_independent(group_words(s)).passed);
      CHECK(oracle::stallings_independent(group_words(s)));
    }
    std::vector<Element> shuffled = s;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(check_significant_factors(shuffled).passed == r.passed);
  }
  CHECK(passes > 100);
}
