#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgw/rational.hpp"
#include "sgw/word.hpp"

using namespace sgw;

TEST_CASE("compact form parses with lowercase +1 and uppercase -1") {
  const SignedWord w = parse_word("aBaB");
  REQUIRE(w.size() == 4);
  CHECK(w.letter_count() == 2);
  CHECK(w.letters()[0] == Letter{1, 1});
  CHECK(w.letters()[1] == Letter{2, -1});
  CHECK(w.letters()[2] == Letter{1, 1});
  CHECK(w.letters()[3] == Letter{2, -1});
  CHECK(format_word(w) == "aBaB");
}

TEST_CASE("token form accepts integers, single letters and identifiers") {
  CHECK(parse_word("1+ 2- 1+ 2-") == parse_word("aBaB"));
  CHECK(parse_word("  a+  B-\ta+ b- ") == parse_word("aBaB"));  // letter case carries no sign
  CHECK(are_isomorphic(parse_word("left+ right- left+ right-"), parse_word("aBaB")));
  CHECK(parse_word("") == SignedWord{});
  CHECK(parse_word("  \n ") == SignedWord{});

  const SignedWord big = parse_word("27+ 27+");
  CHECK(big.letters()[0].name == 27);
  CHECK(format_word(big) == "27+ 27+");  // no compact spelling above z
}

TEST_CASE("format and parse round-trip") {
  for (const char* text : {"", "aa", "AbbA", "aBaB", "aBcaBc"}) {
    const SignedWord w = parse_word(text);
    CHECK(parse_word(format_word(w)) == w);
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedWord w = oracles::random_word(static_cast<std::size_t>(rng() % 6), rng);
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_word("a*"), parse_error);       // bad sign character
  CHECK_THROWS_AS(parse_word("1+ 1"), parse_error);     // token without sign
  CHECK_THROWS_AS(parse_word("+ +"), parse_error);      // sign without name
  CHECK_THROWS_AS(parse_word("0+ 0+"), parse_error);    // names start at 1
}

TEST_CASE("parse rejects structural violations") {
  CHECK_THROWS_AS(parse_word("aba"), validation_error);           // odd occurrence count
  CHECK(parse_word(" abab ") == parse_word("abab"));              // surrounding space is fine
  CHECK_THROWS_AS(parse_word("aAbb"), validation_error);          // inconsistent signs
  CHECK_THROWS_AS(parse_word("E+ b+ b+ E-"), validation_error);   // inconsistent signs, token form
  CHECK_THROWS_AS(parse_word("aabbb"), validation_error);
}

TEST_CASE("canonical form relabels by first occurrence") {
  CHECK(canonical_form(parse_word("cAcA")) == parse_word("aBaB"));
  CHECK(canonical_form(parse_word("AbbA")) == parse_word("AbbA"));  // already canonical
  CHECK(canonical_form(SignedWord{}) == SignedWord{});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedWord w = oracles::random_word(1 + rng() % 4, rng);
    const SignedWord c = canonical_form(w);
    CHECK(canonical_form(c) == c);  // idempotent
    CHECK(are_isomorphic(w, c));
  }
}

TEST_CASE("isomorphism is relabeling only, signs fixed") {
  CHECK(are_isomorphic(parse_word("AbbA"), parse_word("5- 2+ 2+ 5-")));
  CHECK_FALSE(are_isomorphic(parse_word("AbbA"), parse_word("aBBa")));
  CHECK(indicator(parse_word("aa"), parse_word("bb")) == 1);
  CHECK(indicator(parse_word("aa"), parse_word("AA")) == 0);
  CHECK(indicator(parse_word("aa"), parse_word("abab")) == 0);  // length differs
}

TEST_CASE("word order: length, then names, then signs with +1 first") {
  const WordLess less;
  CHECK(less(SignedWord{}, parse_word("aa")));
  CHECK(less(parse_word("aa"), parse_word("AA")));
  CHECK(less(parse_word("aabb"), parse_word("abab")));
  CHECK_FALSE(less(parse_word("aa"), parse_word("aa")));

  const std::vector<SignedWord> words = all_words(2);
  CHECK(std::is_sorted(words.begin(), words.end(), less));
  for (std::size_t i = 0; i + 1 < words.size(); ++i) CHECK_FALSE(less(words[i + 1], words[i]));
}

TEST_CASE("enumeration matches the filter-everything oracle") {
  CHECK(all_words(0).size() == 1);
  CHECK(all_words(1).size() == 2);
  CHECK(all_words(2).size() == 12);
  CHECK(all_words(3).size() == 120);
  CHECK(all_words(4).size() == 1680);

  for (std::size_t n = 0; n <= 3; ++n) {
    const std::vector<SignedWord> fast = all_words(n);
    const std::set<SignedWord, WordLess> slow = oracles::naive_all_words(n);
    REQUIRE(fast.size() == slow.size());
    for (const SignedWord& w : fast) {
      CHECK(slow.count(w) == 1);
      CHECK(canonical_form(w) == w);
    }
  }
}

TEST_CASE("enumerator streams without materializing") {
  WordEnumerator en(2);
  std::size_t count = 0;
  while (en.next()) ++count;
  CHECK(count == 12);
}

TEST_CASE("subwords are canonical restrictions, one per name subset") {
  const SignedWord w = parse_word("aBcaBc");
  const std::size_t n = w.letter_count();
  for (std::size_t k = 0; k <= n; ++k) {
    const std::vector<SignedWord> subs = subwords_of_size(w, k);
    CHECK(Rational(static_cast<long long>(subs.size())) ==
          Rational::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    for (const SignedWord& s : subs) {
      CHECK(s.letter_count() == k);
      CHECK(canonical_form(s) == s);
    }
  }
}

TEST_CASE("pairing fixtures") {
  CHECK(pairing(SignedWord{}, parse_word("aBcaBc")) == 1);
  CHECK(pairing(parse_word("aa"), parse_word("aBaB")) == 1);    // the "BB" restriction has the wrong sign
  CHECK(pairing(parse_word("abab"), parse_word("aBaB")) == 0);  // signs differ
  CHECK(pairing(parse_word("abab"), parse_word("aa")) == 0);    // u larger than w
}

TEST_CASE("pairing equals the brute-force subset count") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 120; ++trial) {
    const SignedWord w = oracles::random_word(rng() % 5, rng);
    SignedWord u;
    if (trial % 3 == 0) {
      u = oracles::random_word(rng() % 3, rng);
    } else if (!w.empty()) {
      const auto subs = subwords_of_size(w, rng() % (w.letter_count() + 1));
      u = subs[rng() % subs.size()];
    }
    CHECK(static_cast<long long>(pairing(u, w)) == oracles::brute_pairing(u, w));
    CHECK(pairing(w, w) == 1);
  }
}
