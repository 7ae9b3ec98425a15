#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "girthlab/corpus.hpp"
#include "girthlab/errors.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"

using namespace girthlab;

namespace {

Word random_member(const std::vector<Word>& gens, std::mt19937& rng,
                   int factors) {
  Word w;
  for (int i = 0; i < factors; ++i) {
    const Word& g = gens[rng() % gens.size()];
    w = w * (rng() % 2 ? g : g.inverse());
  }
  return w;
}

}  // namespace

TEST_CASE("free subgroup wraps the folded automaton") {
  GroupOracle f2 = GroupOracle::free_group(2);
  const Alphabet& ab = f2.alphabet();
  auto h = make_subgroup(f2, {ab.parse("a a"), ab.parse("b")});
  CHECK(h->member(ab.parse("a a b a a")));
  CHECK(!h->member(ab.parse("a")));
  CHECK(h->is_proper());
  CHECK(!h->index().has_value());

  auto k = make_subgroup(f2, {ab.parse("a a"), ab.parse("b"), ab.parse("a b a^-1")});
  CHECK(k->index() == 2);
  CHECK(k->is_proper());

  auto whole = make_subgroup(f2, {ab.parse("a"), ab.parse("a b")});
  CHECK(whole->index() == 1);
  CHECK(!whole->is_proper());

  Word e = h->express(ab.parse("a a b"));
  CHECK(substitute(e, h->declared_gens()) == ab.parse("a a b"));
  CHECK(h->sub_alphabet().format(e) == "g1 g2");
}

TEST_CASE("lattice membership matches the closed form") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  const Alphabet& ab = z2.alphabet();
  // columns (2,1) and (1,2); v = (x,y) is in the lattice iff both Cramer
  // coordinates (2x-y)/3 and (2y-x)/3 are integers
  std::vector<Word> gens = {ab.parse("a a b"), ab.parse("a b b")};
  auto h = make_subgroup(z2, gens);
  CHECK(h->index() == 3);
  CHECK(h->is_proper());
  for (long long x = -10; x <= 10; ++x) {
    for (long long y = -10; y <= 10; ++y) {
      Word w = Word::power(0, x) * Word::power(1, y);
      bool expect = (2 * x - y) % 3 == 0 && (2 * y - x) % 3 == 0;
      CAPTURE(x);
      CAPTURE(y);
      REQUIRE(h->member(w) == expect);
      if (expect) {
        Word e = h->express(w);
        CHECK(z2.equal(substitute(e, gens), w));
      }
    }
  }
}

TEST_CASE("rank deficient lattice") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  const Alphabet& ab = z2.alphabet();
  auto h = make_subgroup(z2, {ab.parse("a a b b b b")});  // (2,4)
  CHECK(!h->index().has_value());
  CHECK(h->is_proper());
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y) {
      bool expect = x % 2 == 0 && y == 2 * x;
      CHECK(h->member(Word::power(0, x) * Word::power(1, y)) == expect);
    }
  CHECK_THROWS_AS(h->express(ab.parse("a")), Error);
}

TEST_CASE("lattice index is the determinant") {
  GroupOracle z3 = GroupOracle::free_abelian(3);
  const Alphabet& ab = z3.alphabet();
  // columns (2,3,5), (1,1,1), (0,0,15): determinant -15
  std::vector<Word> gens = {ab.parse("a^2 b^3 c^5"), ab.parse("a b c"),
                            ab.parse("c^15")};
  auto h = make_subgroup(z3, gens);
  CHECK(h->index() == 15);
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    Word w = random_member(gens, rng, 1 + static_cast<int>(rng() % 5));
    REQUIRE(h->member(w));
    CHECK(z3.equal(substitute(h->express(w), gens), w));
  }
  auto whole = make_subgroup(z3, {ab.parse("a"), ab.parse("b"), ab.parse("c")});
  CHECK(whole->index() == 1);
  CHECK(!whole->is_proper());
}

TEST_CASE("dihedral subgroup structure from mixed generators") {
  GroupOracle dinf = GroupOracle::dihedral(std::nullopt);
  const Alphabet& ab = dinf.alphabet();
  // r^6 and r^10 give translation gcd 2 after the euclidean walk
  auto h = make_subgroup(dinf, {(ab.parse("a b")).pow(6), (ab.parse("a b")).pow(10)});
  CHECK(h->index() == 4);  // translations 2Z only, no reflections
  CHECK(!h->member(ab.parse("a")));
  CHECK(h->member(ab.parse("a b").pow(2)));
  CHECK(!h->member(ab.parse("a b")));

  auto k = make_subgroup(dinf, {ab.parse("a"), ab.parse("b a b")});
  CHECK(k->index() == 2);
  CHECK(k->member(ab.parse("a b a b")));   // translation 2
  CHECK(!k->member(ab.parse("a b")));      // translation 1
  CHECK(k->member(ab.parse("b a b")));
  CHECK(!k->member(ab.parse("b")));

  auto whole = make_subgroup(dinf, {ab.parse("a"), ab.parse("b")});
  CHECK(whole->index() == 1);
  CHECK(!whole->is_proper());

  auto tiny = make_subgroup(dinf, {ab.parse("a")});
  CHECK(!tiny->index().has_value());  // order 2, infinite index
  CHECK(tiny->member(ab.parse("a")));
  CHECK(!tiny->member(ab.parse("b")));
  CHECK(!tiny->member(ab.parse("a b")));
}

TEST_CASE("dihedral express is constructive") {
  GroupOracle dinf = GroupOracle::dihedral(std::nullopt);
  std::vector<std::vector<Word>> cases = {
      {Word::letter(0, 1), Word::letter(1, 1) * Word::letter(0, 1) * Word::letter(1, 1)},
      {(Word::letter(0, 1) * Word::letter(1, 1)).pow(3), Word::letter(1, 1)},
      {(Word::letter(0, 1) * Word::letter(1, 1)).pow(6),
       (Word::letter(0, 1) * Word::letter(1, 1)).pow(10)},
  };
  std::mt19937 rng(99);
  for (const auto& gens : cases) {
    auto h = make_subgroup(dinf, gens);
    for (int it = 0; it < 300; ++it) {
      Word w = random_member(gens, rng, 1 + static_cast<int>(rng() % 6));
      CAPTURE(dinf.alphabet().format(w));
      REQUIRE(h->member(w));
      CHECK(dinf.equal(substitute(h->express(w), gens), w));
    }
  }
}

TEST_CASE("gmn subgroups of the infinite dihedral group") {
  GroupOracle dinf = GroupOracle::dihedral(std::nullopt);
  const Alphabet& ab = dinf.alphabet();
  auto K = gmn_subgroup(dinf, 0, 1);  // <a, bab>
  auto L = gmn_subgroup(dinf, 1, 0);  // <aba, b>
  CHECK(K->declared_gens()[0] == ab.parse("a"));
  CHECK(K->declared_gens()[1] == ab.parse("b a b"));
  CHECK(L->declared_gens()[0] == ab.parse("a b a"));
  CHECK(L->declared_gens()[1] == ab.parse("b"));
  CHECK(K->index() == 2);
  CHECK(L->index() == 2);
  CHECK(K->member(ab.parse("a")));
  CHECK(!K->member(ab.parse("b")));
  CHECK(L->member(ab.parse("b")));
  CHECK(!L->member(ab.parse("a")));

  // reflection offsets split by parity, so together the two subgroups absorb
  // every odd alternating word
  CHECK(odd_words_covered(*K, *L, 21));

  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(gmn_subgroup(dinf, m, n)->index() == m + n + 1);
}

TEST_CASE("gmn subgroup agrees with table closure in a finite quotient") {
  GroupOracle d6 = GroupOracle::dihedral(6);
  auto h = gmn_subgroup(d6, 1, 1);  // gcd(3, 6) = 3: index 3
  CHECK(h->index() == 3);

  GroupOracle fin = GroupOracle::finite(dihedral_table(6), {6, 11}, {"a", "b"});
  auto hf = make_subgroup(fin, h->declared_gens());
  CHECK(hf->index() == 3);

  ReducedWordEnumerator en(2, 5);
  while (auto w = en.next()) CHECK(h->member(*w) == hf->member(*w));
  CHECK(h->member(Word()) == hf->member(Word()));
}

TEST_CASE("finite subgroup matches closure on corpus tables") {
  std::mt19937 rng(2024);
  std::vector<CayleyTable> tables = {symmetric_table(4), alternating4_table(),
                                     quaternion8_table(), dihedral_table(6)};
  for (const auto& t : tables) {
    std::vector<int> all_gens;
    for (int e = 1; e < t.order(); ++e) all_gens.push_back(e);
    GroupOracle g = GroupOracle::finite(t, all_gens);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Word> gens;
      std::vector<int> gen_elems;
      int ngens = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < ngens; ++i) {
        int e = 1 + static_cast<int>(rng() % (t.order() - 1));
        gens.push_back(g.element_word(e));
        gen_elems.push_back(e);
      }
      auto h = make_subgroup(g, gens);
      std::vector<int> cl = closure(t, gen_elems);
      std::set<int> in_closure(cl.begin(), cl.end());
      for (int e = 0; e < t.order(); ++e) {
        Word w = g.element_word(e);
        CHECK(h->member(w) == (in_closure.count(e) > 0));
        if (in_closure.count(e)) {
          Word expr = h->express(w);
          CHECK(g.equal(substitute(expr, gens), w));
        }
      }
      CHECK(h->index() == t.order() / static_cast<long long>(cl.size()));
    }
  }
}

TEST_CASE("trivial subgroups across kinds") {
  auto free_triv = make_subgroup(GroupOracle::free_group(2), {});
  CHECK(free_triv->member(Word()));
  CHECK(!free_triv->member(Word::letter(0, 1)));
  CHECK(!free_triv->index().has_value());

  auto ab_triv = make_subgroup(GroupOracle::free_abelian(2), {});
  CHECK(ab_triv->member(Word()));
  CHECK(!ab_triv->member(Word::letter(0, 1)));
  CHECK(!ab_triv->index().has_value());

  auto dq_triv = make_subgroup(GroupOracle::dihedral(5), {});
  CHECK(dq_triv->index() == 10);

  GroupOracle z6 = GroupOracle::finite(cyclic_table(6), {1});
  auto fin_triv = make_subgroup(z6, {});
  CHECK(fin_triv->index() == 6);
  CHECK(fin_triv->member(Word()));
  CHECK(!fin_triv->member(Word::letter(0, 1)));
}

TEST_CASE("subgroup generator validation") {
  GroupOracle f2 = GroupOracle::free_group(2);
  CHECK_THROWS_AS(make_subgroup(f2, {Word::letter(5, 1)}), Error);
  CHECK_THROWS_AS(gmn_subgroup(f2, 1, 1), Error);
  CHECK_THROWS_AS(gmn_subgroup(GroupOracle::dihedral(std::nullopt), -1, 0), Error);
}
