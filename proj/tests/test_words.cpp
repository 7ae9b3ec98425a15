#include "girthlab/words.hpp"

#include <map>
#include <random>
#include <set>

#include "doctest.h"

using namespace girthlab;

namespace {

Word parse2(const std::string& s) { return letter_alphabet(2).parse(s); }

std::vector<Letter> random_raw(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> sym(0, rank - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i) raw.push_back({sym(rng), sgn(rng) ? 1 : -1});
  return raw;
}

}  // namespace

TEST_CASE("free reduction") {
  Alphabet ab = letter_alphabet(2);
  CHECK(ab.format(parse2("a b b^-1 a")) == "a a");
  CHECK(parse2("a a^-1").empty());
  CHECK(ab.format(parse2("b a a^-1 b^-1 a")) == "a");
  // nested cancellation collapses fully
  CHECK(parse2("a b b^-1 a^-1").empty());
}

TEST_CASE("free reduction is idempotent and kills w w^-1") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = random_raw(rng, 3, trial % 40);
    Word w = Word::reduce(raw);
    CHECK(Word::reduce(w.letters()) == w);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
  }
}

TEST_CASE("cyclic reduction") {
  Alphabet ab = letter_alphabet(2);
  auto cr = cyclic_reduce(parse2("a b a^-1"));
  CHECK(ab.format(cr.core) == "b");
  CHECK(ab.format(cr.conjugator) == "a");
  CHECK(cr.conjugator * cr.core * cr.conjugator.inverse() == parse2("a b a^-1"));

  cr = cyclic_reduce(parse2("a b"));
  CHECK(cr.core == parse2("a b"));
  CHECK(cr.conjugator.empty());

  cr = cyclic_reduce(parse2("b a b^-1 a b a^-1 b^-1"));
  CHECK(cr.conjugator * cr.core * cr.conjugator.inverse() ==
        parse2("b a b^-1 a b a^-1 b^-1"));
  CHECK(cr.core.cyclically_reduced());
}

TEST_CASE("enumeration counts match 2k(2k-1)^(len-1)") {
  for (int k = 1; k <= 3; ++k) {
    for (int maxlen = 1; maxlen <= (k == 3 ? 4 : 5); ++maxlen) {
      ReducedWordEnumerator en(k, maxlen);
      std::map<int, unsigned long long> per_len;
      std::set<std::vector<Letter>> seen;
      size_t prev_len = 0;
      std::vector<Letter> prev;
      while (auto w = en.next()) {
        // nondecreasing length, lexicographic within a length
        CHECK(w->size() >= prev_len);
        if (w->size() == prev_len && !prev.empty()) {
          CHECK(std::lexicographical_compare(
              prev.begin(), prev.end(), w->begin(), w->end(),
              [](const Letter& x, const Letter& y) {
                return x.code() < y.code();
              }));
        }
        prev_len = w->size();
        prev = w->letters();
        // freely reduced already
        CHECK(Word::reduce(w->letters()) == *w);
        CHECK(seen.insert(w->letters()).second);
        per_len[static_cast<int>(w->size())]++;
      }
      for (int len = 1; len <= maxlen; ++len)
        CHECK(per_len[len] == reduced_word_count(k, len));
    }
  }
}

TEST_CASE("enumeration per-spec small cases") {
  // rank 1, lengths up to 3: a, a^-1, aa, a^-1a^-1, aaa, ...
  ReducedWordEnumerator en(1, 3);
  std::vector<std::string> got;
  Alphabet a1 = letter_alphabet(1);
  while (auto w = en.next()) got.push_back(a1.format(*w));
  std::vector<std::string> want = {"a",     "a^-1",        "a a",
                                   "a^-1 a^-1", "a a a", "a^-1 a^-1 a^-1"};
  CHECK(got == want);
}

TEST_CASE("word parsing round trip and errors") {
  Alphabet ab = letter_alphabet(2);
  CHECK(ab.format(ab.parse("a^3 b^-2")) == "a a a b^-1 b^-1");
  CHECK(ab.parse("1").empty());
  CHECK(ab.parse("  ").empty());
  CHECK(ab.parse("a^0").empty());
  CHECK_THROWS_AS(ab.parse("c"), Error);
  try {
    ab.parse("a c");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less(parse2("a"), parse2("a a")));
  CHECK(shortlex_less(parse2("a"), parse2("a^-1")));
  CHECK(shortlex_less(parse2("a^-1"), parse2("b")));
  CHECK(shortlex_less(parse2("b"), parse2("b^-1")));
  CHECK(!shortlex_less(parse2("a a"), parse2("b")));
}

TEST_CASE("power helpers") {
  Alphabet ab = letter_alphabet(2);
  CHECK(ab.format(Word::power(0, -2)) == "a^-1 a^-1");
  CHECK(parse2("a b").pow(0).empty());
  CHECK(ab.format(parse2("a b").pow(2)) == "a b a b");
  CHECK(ab.format(parse2("a b").pow(-1)) == "b^-1 a^-1");
}
