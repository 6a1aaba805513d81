#include <doctest.h>

#include <numeric>

#include "circsq/enumerate.hpp"
#include "circsq/errors.hpp"
#include "circsq/word.hpp"
#include "oracles.hpp"

using namespace circsq;
using oracle::L;
using oracle::text;

namespace {

std::vector<std::string> texts_of(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(text(w));
  return out;
}

}  // namespace

TEST_CASE("parse maps characters by sorted rank and keeps labels") {
  const Word w = Word::parse("cab");
  CHECK(w.size() == 3);
  CHECK(w[0] == 2);
  CHECK(w[1] == 0);
  CHECK(w.str() == "cab");
  CHECK(canonical_rotation(w).str() == "abc");
  CHECK(canonical_rotation(Word::parse("bab")).str() == "abb");

  const auto pair = Word::parse_many({"xy", "yz"});
  CHECK(pair[0][0] == 0);
  CHECK(pair[1][0] == 1);
  CHECK(pair[1].str() == "yz");

  CHECK_THROWS_AS(Word::parse("a b"), InvalidInput);
  CHECK_THROWS_AS(Word::parse("\xc3\xa9"), InvalidInput);
}

TEST_CASE("unlabelled words print as a<id>") {
  const Word w = Word::from_ids(std::vector<int>{0, 1, 0});
  CHECK(w.str() == "a0a1a0");
  CHECK_THROWS_AS(Word::from_ids(std::vector<int>{300}), InvalidInput);
  CHECK(w == L("aba"));
}

TEST_CASE("rotations") {
  CHECK(texts_of(rotations(L("ab"))) == std::vector<std::string>{"ab", "ba"});
  CHECK(texts_of(rotations(L("aa"))) == std::vector<std::string>{"aa", "aa"});
  CHECK(texts_of(rotations(L("bab"))) == std::vector<std::string>{"bab", "abb", "bba"});
  CHECK_THROWS_AS(rotations(Word{}), InvalidInput);
}

TEST_CASE("canonical_rotation") {
  CHECK(text(canonical_rotation(L("bab"))) == "abb");
  CHECK(text(canonical_rotation(L("aaaa"))) == "aaaa");
  CHECK(text(canonical_rotation(L("cab"))) == "abc");
  CHECK_THROWS_AS(canonical_rotation(Word{}), InvalidInput);

  SUBCASE("agrees with the naive minimum and is rotation invariant") {
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        const Word w = L(s);
        const Word c = canonical_rotation(w);
        REQUIRE(text(c) == oracle::min_rotation(s));
        CHECK(text(w.substr(least_rotation_index(w), n) + w.substr(0, least_rotation_index(w))) ==
              text(c));
        for (const Word& r : rotations(w)) REQUIRE(canonical_rotation(r) == c);
      }
    }
  }
}

TEST_CASE("is_primitive and primitive_root") {
  CHECK(is_primitive(L("aba")));
  CHECK_FALSE(is_primitive(L("abab")));
  CHECK(is_primitive(L("a")));

  auto r = primitive_root(L("aaaa"));
  CHECK(text(r.root) == "a");
  CHECK(r.exponent == 4);
  r = primitive_root(L("abab"));
  CHECK(text(r.root) == "ab");
  CHECK(r.exponent == 2);
  r = primitive_root(L("abac"));
  CHECK(text(r.root) == "abac");
  CHECK(r.exponent == 1);

  SUBCASE("three equivalent characterisations") {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        const Word w = L(s);
        const bool prim = is_primitive(w);
        REQUIRE(prim == oracle::primitive(s));
        const auto root = primitive_root(w);
        REQUIRE((root.exponent == 1) == prim);
        REQUIRE(root.root.power(root.exponent) == w);
        REQUIRE(is_primitive(root.root));
      }
    }
  }
}

TEST_CASE("factors") {
  CHECK(oracle::texts(factors(L("abacabacabac"), 1)) == std::set<std::string>{"a", "b", "c"});
  CHECK(oracle::texts(factors(L("abacabacabac"), 2)) ==
        std::set<std::string>{"ab", "ba", "ac", "ca"});
  CHECK(oracle::texts(factors(L("aa"), 2)) == std::set<std::string>{"aa"});
  CHECK_THROWS_AS(factors(L("ab"), 0), InvalidArgument);
  CHECK_THROWS_AS(factors(L("ab"), 3), InvalidArgument);
}

TEST_CASE("circular_factors") {
  CHECK(oracle::texts(circular_factors(L("abac"), 3)) ==
        std::set<std::string>{"aba", "bac", "aca", "cab"});
  CHECK(oracle::texts(circular_factors(L("ab"), 3)) == std::set<std::string>{"aba", "bab"});
  CHECK(oracle::texts(circular_factors(L("abac"), 1)) == std::set<std::string>{"a", "b", "c"});
  CHECK(circular_factors(L("aab"), 5).size() == 3);
  CHECK_THROWS_AS(circular_factors(Word{}, 1), InvalidInput);
  CHECK_THROWS_AS(circular_factors(L("ab"), 0), InvalidArgument);

  SUBCASE("equals the factors of ww for m <= |w|") {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        const Word w = L(s);
        for (std::size_t m = 1; m <= n; ++m) {
          REQUIRE(circular_factors(w, m) == factors(w + w, m));
        }
      }
    }
  }

  SUBCASE("matches the periodic extension and counts rotations beyond |w|") {
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        const Word w = L(s);
        for (std::size_t m = 1; m <= 3 * n + 2; ++m) {
          const auto got = circular_factors(w, m);
          REQUIRE(oracle::texts(got) == oracle::periodic_windows(s, m));
          REQUIRE(circular_factor_count(w, m) == got.size());
          if (m >= n) REQUIRE(got.size() == oracle::distinct_rotations(s));
        }
      }
    }
  }
}

TEST_CASE("smallest_period") {
  CHECK(smallest_period(L("ababa")) == 2);
  CHECK(smallest_period(L("abc")) == 3);
  CHECK(smallest_period(L("aaaa")) == 1);

  SUBCASE("agrees with a direct scan") {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const auto& s : oracle::all_words(2, n)) {
        std::size_t p = 1;
        while (!oracle::period(s, p)) ++p;
        REQUIRE(smallest_period(L(s)) == p);
        for (std::size_t q = 1; q <= n; ++q) REQUIRE(has_period(L(s), q) == oracle::period(s, q));
      }
    }
  }

  SUBCASE("primitive u has smallest period |u| in u^k for k >= 2") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& s : oracle::all_words(2, n)) {
        if (!oracle::primitive(s)) continue;
        for (std::size_t k = 2; k <= 4; ++k) REQUIRE(smallest_period(L(s).power(k)) == n);
      }
    }
  }
}

TEST_CASE("fine_wilf_check") {
  CHECK(fine_wilf_check(L("aaaa"), 2, 3));
  CHECK(fine_wilf_check(L("ababab"), 2, 4));
  CHECK_FALSE(oracle::period("abaab", 2));
  CHECK(fine_wilf_check(L("abaab"), 2, 3));

  SUBCASE("holds exhaustively up to length 12 over three letters") {
    std::size_t premise_met = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      for (const auto& s : oracle::all_words(3, n)) {
        std::vector<std::size_t> periods;
        for (std::size_t p = 1; p <= n; ++p) {
          if (oracle::period(s, p)) periods.push_back(p);
        }
        if (periods.size() < 2) continue;
        const Word w = L(s);
        for (std::size_t p : periods) {
          for (std::size_t q : periods) {
            REQUIRE(fine_wilf_check(w, p, q));
            if (n >= p + q - std::gcd(p, q)) ++premise_met;
          }
        }
      }
    }
    CHECK(premise_met > 0);
  }

  SUBCASE("the length bound is sharp") {
    // Periods 3 and 5 at length 3 + 5 - 1 - 1 = 6 without period 1.
    const std::string s = "abaaba";
    CHECK(oracle::period(s, 3));
    CHECK(oracle::period(s, 5));
    CHECK_FALSE(oracle::period(s, 1));
    CHECK(fine_wilf_check(L(s), 3, 5));
    CHECK(has_period(L(s), 3));
  }

  SUBCASE("a word without both periods passes vacuously") {
    CHECK(fine_wilf_check(L("abc"), 1, 2));
  }

  CHECK_THROWS_AS(fine_wilf_check(L("ab"), 0, 1), InvalidArgument);
  CHECK_THROWS_AS(fine_wilf_check(L("ab"), 1, 3), InvalidArgument);
}

TEST_CASE("rational_power") {
  CHECK(text(rational_power(L("ab"), 3)) == "aba");
  CHECK(text(rational_power(L("abac"), 4)) == "abac");
  std::string direct;
  while (direct.size() < 9) direct += "abac";
  direct.resize(9);
  CHECK(text(rational_power(L("abac"), 9)) == direct);
  CHECK(direct == "abacabaca");
  CHECK_THROWS_AS(rational_power(L("abac"), 3), InvalidArgument);
}

TEST_CASE("CircularWord holds the least rotation") {
  CHECK(text(CircularWord(L("bba")).canonical()) == "abb");
  CHECK(CircularWord(L("bab")) == CircularWord(L("abb")));
  CHECK_THROWS_AS(CircularWord(Word{}), InvalidInput);
}

TEST_CASE("word streams") {
  SUBCASE("all words in length-then-lexicographic order") {
    const auto ws = collect_words(2, 1, 3, WordFamily::kAll);
    CHECK(ws.size() == 2 + 4 + 8);
    CHECK(std::is_sorted(ws.begin(), ws.begin() + 2));
    CHECK(text(ws[2]) == "aa");
    CHECK(text(ws.back()) == "bbb");
  }

  SUBCASE("necklace family is one word per rotation x renaming class") {
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = 1; n <= 8; ++n) {
        std::set<std::string> classes;
        for (const auto& s : oracle::all_words(k, n)) {
          classes.insert(oracle::text(rotation_renaming_canonical(L(s))));
        }
        const auto ws = collect_words(k, n, n, WordFamily::kNecklaces);
        std::set<std::string> got;
        for (const auto& w : ws) got.insert(text(w));
        REQUIRE(got.size() == ws.size());
        REQUIRE(got == classes);

        std::size_t primitive_classes = 0;
        for (const auto& c : classes) primitive_classes += oracle::primitive(c);
        REQUIRE(collect_words(k, n, n, WordFamily::kNecklaces, true).size() == primitive_classes);
      }
    }
  }

  SUBCASE("renaming family is one word per alphabet permutation class") {
    for (std::size_t n = 1; n <= 7; ++n) {
      std::set<std::string> classes;
      for (const auto& s : oracle::all_words(3, n)) {
        classes.insert(text(relabel_first_occurrence(L(s))));
      }
      std::set<std::string> got;
      for (const auto& w : collect_words(3, n, n, WordFamily::kRenaming)) got.insert(text(w));
      REQUIRE(got == classes);
    }
  }

  SUBCASE("relabelling") {
    CHECK(text(relabel_first_occurrence(L("cbca"))) == "abac");
    CHECK(text(rotation_renaming_canonical(L("bba"))) == "aab");
  }
}
