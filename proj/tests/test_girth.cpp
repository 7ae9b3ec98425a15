#include <vector>

#include "doctest.h"
#include "girth_bfs.hpp"
#include "girthlab/amalgam.hpp"
#include "girthlab/cayley.hpp"
#include "girthlab/corpus.hpp"
#include "girthlab/errors.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/hnn.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/words.hpp"

using namespace girthlab;

namespace {

const Word wa = Word::letter(0, 1);
const Word wb = Word::letter(1, 1);

HnnExtension bs12() {
  GroupOracle z = GroupOracle::free_abelian(1);
  return HnnExtension(z, {wa}, {wa * wa}, {wa * wa});
}

HnnExtension f2_proper() {
  GroupOracle f2 = GroupOracle::free_group(2);
  return HnnExtension(f2, {wa}, {wb}, {wb});
}

AmalgamPresentation modular_amalgam() {
  GroupOracle z6 = GroupOracle::finite(cyclic_table(6), {1}, {"y"});
  GroupOracle z4 = GroupOracle::finite(cyclic_table(4), {1}, {"x"});
  return AmalgamPresentation(z6, z4, {wa.pow(3)}, {wa.pow(2)}, {wa.pow(2)});
}

std::vector<HnnElement> hnn_gens(const HnnExtension& h,
                                 const std::vector<std::string>& texts) {
  std::vector<HnnElement> out;
  for (const std::string& s : texts)
    out.push_back(h.to_element(h.ext_alphabet().parse(s)));
  return out;
}

}  // namespace

TEST_CASE("relation alphabet and suggested caps") {
  Alphabet r3 = relation_alphabet(3);
  CHECK(r3.size() == 3);
  CHECK(r3.name(0) == "s1");
  CHECK(r3.name(2) == "s3");

  CHECK(suggested_cap(2) == 11);
  CHECK(suggested_cap(26) == 3);
  CHECK(suggested_cap(1) == 64);  // the length clamp
  CHECK(suggested_cap(2, 16) == 2);
  CHECK(suggested_cap(2, 15) == 1);

  GroupOracle f2 = GroupOracle::free_group(2);
  GirthQuery q = GirthQuery::over_oracle(f2, {wa, wb});
  CHECK(q.max_len() == 11);
  CHECK(q.generation() == "verified");
  CHECK(q.genset_size() == 2);
}

TEST_CASE("exact girth on oracle targets") {
  GroupOracle d = GroupOracle::dihedral(std::nullopt);
  GirthCertificate cd =
      girth_exact(GirthQuery::over_oracle(d, {wa, wb}, 6));
  CHECK(cd.kind == GirthKind::Exact);
  CHECK(cd.value == 2);
  CHECK(*cd.witness == Word::power(0, 2));
  CHECK(relation_alphabet(2).format(*cd.witness) == "s1 s1");

  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthQuery qz = GirthQuery::over_oracle(z2, {wa, wb}, 6);
  GirthCertificate cz = girth_exact(qz);
  CHECK(cz.kind == GirthKind::Exact);
  CHECK(cz.value == 4);
  CHECK(*cz.witness == wa * wb * wa.inverse() * wb.inverse());
  CHECK(qz.relation_is_identity(*cz.witness));
  CHECK(!qz.relation_is_identity(wa));

  // free groups have no relations at all
  GroupOracle f2 = GroupOracle::free_group(2);
  GirthCertificate cf =
      girth_exact(GirthQuery::over_oracle(f2, {wa, wb}, 8));
  CHECK(cf.kind == GirthKind::LowerBound);
  CHECK(cf.value == 9);
  CHECK(cf.words_checked == 9856);  // cyclically reduced words of length <= 8

  GroupOracle z5 = GroupOracle::finite(cyclic_table(5), {1}, {"x"});
  GirthCertificate c5 =
      girth_exact(GirthQuery::over_oracle(z5, {wa}, 6));
  CHECK(c5.kind == GirthKind::Exact);
  CHECK(c5.value == 5);
  CHECK(*c5.witness == Word::power(0, 5));

  // a non-generating list still has a well-defined shortest relation
  GroupOracle z6 = GroupOracle::finite(cyclic_table(6), {1}, {"x"});
  GirthQuery q6 = GirthQuery::over_oracle(z6, {wa.pow(2)}, 6);
  CHECK(q6.generation() == "not-generating");
  GirthCertificate c6 = girth_exact(q6);
  CHECK(c6.kind == GirthKind::Exact);
  CHECK(c6.value == 3);
  CHECK(*c6.witness == Word::power(0, 3));
}

TEST_CASE("query validation") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  CHECK_THROWS_WITH_AS(GirthQuery::over_oracle(z2, {wa, wa}),
                       doctest::Contains("same element"), Error);
  CHECK_THROWS_WITH_AS(GirthQuery::over_oracle(z2, {}),
                       doctest::Contains("nonempty"), Error);
  CHECK_THROWS_WITH_AS(GirthQuery::over_oracle(z2, {wa}, -1),
                       doctest::Contains("nonnegative"), Error);

  HnnExtension h = bs12();
  try {
    GirthQuery::over_hnn(h, hnn_gens(h, {"t", "a", "a t t^-1"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateElement);
  }

  AmalgamPresentation p = modular_amalgam();
  AmalgamElement y = AmalgamElement::factor(AmalgamSide::Left, wa);
  AmalgamElement x2 =
      AmalgamElement::factor(AmalgamSide::Right, wa.pow(2));
  AmalgamElement y3 =
      AmalgamElement::factor(AmalgamSide::Left, wa.pow(3));
  // y^3 and x^2 are the same element across the core identification
  CHECK_THROWS_WITH_AS(GirthQuery::over_amalgam(p, {y, x2, y3}),
                       doctest::Contains("same element"), Error);
}

TEST_CASE("certification reports truncation honestly") {
  GroupOracle f2 = GroupOracle::free_group(2);
  GirthQuery q = GirthQuery::over_oracle(f2, {wa, wb}, 8);

  GirthCertificate trunc = certify_no_short_relation(q, 9, 4);
  CHECK(trunc.kind == GirthKind::LowerBound);
  CHECK(trunc.value == 5);
  CHECK(trunc.truncated);
  CHECK(trunc.requested_r == 9);
  CHECK(trunc.words_checked == 128);

  GirthCertificate full = certify_no_short_relation(q, 3, 8);
  CHECK(full.kind == GirthKind::LowerBound);
  CHECK(full.value == 3);
  CHECK(!full.truncated);
  CHECK(full.words_checked == 16);

  GirthCertificate empty = certify_no_short_relation(q, 1, 5);
  CHECK(empty.kind == GirthKind::LowerBound);
  CHECK(empty.value == 1);
  CHECK(empty.words_checked == 0);

  // a relation below the target turns into an Exact certificate
  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthQuery qz = GirthQuery::over_oracle(z2, {wa, wb}, 8);
  GirthCertificate bug = certify_no_short_relation(qz, 6, 6);
  CHECK(bug.kind == GirthKind::Exact);
  CHECK(bug.value == 4);
  CHECK(bug.note == "relation found below the certification target");
}

TEST_CASE("certificates are mutually consistent on a fixed query") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthQuery q = GirthQuery::over_oracle(z2, {wa, wb}, 8);
  GirthCertificate exact = girth_exact(q);
  REQUIRE(exact.kind == GirthKind::Exact);
  REQUIRE(exact.value == 4);
  for (long long r = 1; r <= exact.value; ++r) {
    GirthCertificate c = certify_no_short_relation(q, r, r);
    CHECK(c.kind == GirthKind::LowerBound);
    CHECK(c.value == r);
    CHECK(c.query_fingerprint == exact.query_fingerprint);
  }
  GirthCertificate beyond = certify_no_short_relation(q, 5, 5);
  CHECK(beyond.kind == GirthKind::Exact);
  CHECK(beyond.value == 4);
  CHECK(*beyond.witness == *exact.witness);
}

TEST_CASE("girth over hnn targets") {
  HnnExtension bs = bs12();
  GirthQuery q = GirthQuery::over_hnn(bs, hnn_gens(bs, {"a", "t"}), 6);
  CHECK(q.generation() == "assumed");
  GirthCertificate c = girth_exact(q);
  CHECK(c.kind == GirthKind::Exact);
  CHECK(c.value == 5);
  // lexicographically first form of the defining relation
  Word expect = Word::power(0, 2) * Word::letter(1, -1) *
                Word::letter(0, -1) * Word::letter(1, 1);
  CHECK(*c.witness == expect);
  CHECK(q.relation_is_identity(*c.witness));

  HnnExtension fp = f2_proper();
  GirthQuery qf = GirthQuery::over_hnn(fp, hnn_gens(fp, {"a", "t"}), 4);
  GirthCertificate cf = girth_exact(qf);
  CHECK(cf.kind == GirthKind::LowerBound);
  CHECK(cf.value == 5);
}

TEST_CASE("girth over amalgam targets") {
  AmalgamPresentation p = modular_amalgam();
  AmalgamElement y = AmalgamElement::factor(AmalgamSide::Left, wa);
  AmalgamElement x = AmalgamElement::factor(AmalgamSide::Right, wa);
  GirthQuery q = GirthQuery::over_amalgam(p, {y, x}, 6);
  CHECK(q.generation() == "assumed");
  GirthCertificate c = girth_exact(q);
  CHECK(c.kind == GirthKind::Exact);
  CHECK(c.value == 4);
  CHECK(*c.witness == Word::power(1, 4));  // x has order four
  CHECK(q.relation_is_identity(*c.witness));
  CHECK(!q.relation_is_identity(Word::power(0, 3)));  // y^3 = x^2 != 1
}

TEST_CASE("law upper bounds") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthQuery qz = GirthQuery::over_oracle(z2, {wa, wb}, 6);
  GirthCertificate ab = law_upper_bound(qz, law_abelian());
  CHECK(ab.kind == GirthKind::UpperBound);
  CHECK(ab.value == 4);
  CHECK(*ab.witness == law_abelian());  // variables map to s1, s2 in order

  GroupOracle f2 = GroupOracle::free_group(2);
  GirthQuery qf = GirthQuery::over_oracle(f2, {wa, wb}, 6);
  GirthCertificate no = law_upper_bound(qf, law_abelian());
  CHECK(no.kind == GirthKind::LawDoesNotHold);
  CHECK(no.note == "the law fails at this instantiation");

  // BS(1,2) is metabelian but not abelian
  HnnExtension bs = bs12();
  GirthQuery qb = GirthQuery::over_hnn(bs, hnn_gens(bs, {"a", "t"}), 6);
  std::vector<Word> inst = {wa, wb, wa.inverse(), wb.inverse()};
  GirthCertificate mb = law_upper_bound(qb, law_metabelian(), inst);
  CHECK(mb.kind == GirthKind::UpperBound);
  CHECK(mb.value == 16);
  CHECK(law_upper_bound(qb, law_abelian()).kind == GirthKind::LawDoesNotHold);

  // the infinite cyclic group satisfies the abelian law at distinct words
  GroupOracle z1 = GroupOracle::free_abelian(1);
  GirthQuery q1 = GirthQuery::over_oracle(z1, {wa, wa.pow(2)}, 6);
  GirthCertificate c1 = law_upper_bound(q1, law_abelian());
  CHECK(c1.kind == GirthKind::UpperBound);
  CHECK(c1.value == 4);

  GroupOracle q8 = GroupOracle::finite(quaternion8_table(), {2, 4}, {"i", "j"});
  GirthQuery qq = GirthQuery::over_oracle(q8, {wa, wb}, 6);
  GirthCertificate nil =
      law_upper_bound(qq, law_nilpotent2(), {wa, wb, wa});
  CHECK(nil.kind == GirthKind::UpperBound);
  CHECK(nil.value == 10);

  GroupOracle z5 = GroupOracle::finite(cyclic_table(5), {1}, {"x"});
  GirthQuery q5 = GirthQuery::over_oracle(z5, {wa}, 6);
  GirthCertificate bu = law_upper_bound(q5, law_burnside(5));
  CHECK(bu.kind == GirthKind::UpperBound);
  CHECK(bu.value == 5);
  CHECK(*bu.witness == Word::power(0, 5));
}

TEST_CASE("law edge cases") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthQuery q = GirthQuery::over_oracle(z2, {wa, wb}, 6);

  // four variables, two generators, no instantiation given
  CHECK_THROWS_WITH_AS(law_upper_bound(q, law_metabelian()),
                       doctest::Contains("distinct generators"), Error);
  try {
    law_upper_bound(q, law_metabelian(), {wa, wb, wa});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }

  // [[x,y],[x,y]] frees to nothing
  try {
    law_upper_bound(q, law_metabelian(), {wa, wb, wa, wb});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubstitutionCollapsed);
  }

  CHECK_THROWS_WITH_AS(law_upper_bound(q, law_abelian(),
                                       {wa, Word::letter(4, 1)}),
                       doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(law_upper_bound(q, Word{}),
                       doctest::Contains("empty"), Error);
  CHECK_THROWS_AS(law_burnside(0), Error);

  CHECK(law_abelian().size() == 4);
  CHECK(law_metabelian().size() == 16);
  CHECK(law_nilpotent2().size() == 10);
  CHECK(law_alphabet().format(law_nilpotent2()) ==
        "x y x^-1 y^-1 z y x y^-1 x^-1 z^-1");
}

TEST_CASE("exact girth agrees with the independent relation search") {
  struct Fixture {
    CayleyTable table;
    std::vector<int> gens;
  };
  std::vector<Fixture> fixtures = {
      {symmetric_table(3), {2, 3}},
      {symmetric_table(3), {1, 5}},
      {cyclic_table(6), {1}},
      {cyclic_table(6), {2, 3}},
      {dihedral_table(4), {1, 4}},
      {dihedral_table(4), {4, 5}},
      {quaternion8_table(), {2, 4}},
      {alternating4_table(), {1, 4}},  // three-cycles on different supports
      {dihedral_table(6), {1, 6}},
      {product_table(cyclic_table(2), cyclic_table(4)), {4, 1}},
  };
  for (const Fixture& f : fixtures) {
    GroupOracle g = GroupOracle::finite(f.table, f.gens);
    std::vector<Word> gens;
    for (size_t i = 0; i < f.gens.size(); ++i)
      gens.push_back(Word::letter(static_cast<int>(i), 1));
    GirthCertificate c = girth_exact(GirthQuery::over_oracle(g, gens, 12));
    long long bfs = bfs_girth(f.table, f.gens, 12);
    CHECK(c.value == bfs);
    if (bfs <= 12) {
      CHECK(c.kind == GirthKind::Exact);
      CHECK(c.witness->cyclically_reduced());
      CHECK(static_cast<long long>(c.witness->size()) == bfs);
    } else {
      CHECK(c.kind == GirthKind::LowerBound);
    }
  }
}

TEST_CASE("girth is invariant under renaming the generators") {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  GirthCertificate fwd =
      girth_exact(GirthQuery::over_oracle(z2, {wa, wb}, 6));
  GirthCertificate rev =
      girth_exact(GirthQuery::over_oracle(z2, {wb, wa}, 6));
  CHECK(fwd.value == rev.value);
  CHECK(*fwd.witness == *rev.witness);  // both the abstract commutator

  GroupOracle s3 = GroupOracle::finite(symmetric_table(3), {2, 3});
  GirthCertificate a =
      girth_exact(GirthQuery::over_oracle(s3, {wa, wb}, 12));
  GirthCertificate b =
      girth_exact(GirthQuery::over_oracle(s3, {wb, wa}, 12));
  CHECK(a.value == b.value);

  // fingerprints separate the two orderings but are stable per query
  GirthQuery q1 = GirthQuery::over_oracle(z2, {wa, wb}, 6);
  GirthQuery q2 = GirthQuery::over_oracle(z2, {wa, wb}, 6);
  GirthQuery q3 = GirthQuery::over_oracle(z2, {wb, wa}, 6);
  CHECK(q1.fingerprint() == q2.fingerprint());
  CHECK(q1.fingerprint() != q3.fingerprint());
  CHECK(girth_exact(q1).query_fingerprint == q1.fingerprint());
}
