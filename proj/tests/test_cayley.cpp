#include "girthlab/cayley.hpp"
#include "girthlab/corpus.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace girthlab;

TEST_CASE("table validation catches corrupt input") {
  CHECK_THROWS_AS(CayleyTable::parse_text("2\n0 1\n1 1\n"), Error);
  CHECK_THROWS_AS(CayleyTable::parse_text("2\n0 1\n"), Error);
  CHECK_THROWS_AS(CayleyTable::parse_text("3\n0 1 2\n1 2 0\n2 1 0\n"), Error);
  CHECK_THROWS_AS(CayleyTable::parse_text("nonsense"), Error);
  // Z3 is fine
  CayleyTable z3 = CayleyTable::parse_text("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(z3.order() == 3);
  CHECK(z3.inv(1) == 2);
  CHECK(z3.element_order(1) == 3);
}

TEST_CASE("file round trip") {
  CayleyTable d4 = dihedral_table(4);
  std::string path = "d4_roundtrip.cayley";
  d4.save(path);
  CayleyTable back = CayleyTable::load(path);
  CHECK(back == d4);
  std::remove(path.c_str());
}

TEST_CASE("corpus group orders and structure") {
  CHECK(cyclic_table(5).order() == 5);
  CHECK(dihedral_table(6).order() == 12);
  CHECK(symmetric_table(4).order() == 24);
  CHECK(alternating4_table().order() == 12);
  CHECK(quaternion8_table().order() == 8);
  CHECK(product_table(cyclic_table(2), cyclic_table(4)).order() == 8);

  // Q8: every element of order 4 squares to -1 (the unique involution)
  CayleyTable q8 = quaternion8_table();
  int involutions = 0;
  for (int i = 1; i < 8; ++i)
    if (q8.mul(i, i) == 0) ++involutions;
  CHECK(involutions == 1);

  // dihedral: reflections square to identity, rotation has order q
  CayleyTable d5 = dihedral_table(5);
  CHECK(d5.element_order(5) == 2);   // a
  CHECK(d5.element_order(9) == 2);   // b
  CHECK(d5.element_order(1) == 5);   // r
}

TEST_CASE("corpus generators generate") {
  for (const CorpusGroup& g : bundled_corpus()) {
    CHECK(static_cast<int>(closure(g.table, g.gens).size()) == g.table.order());
    CHECK(g.table.order() <= 24);
  }
  CHECK(bundled_corpus().size() == 23 + 11 + 6);
}

TEST_CASE("subgroup enumeration") {
  // classical counts: S4 has 30 subgroups, A4 has 10, Q8 has 6, Z12 has 6
  CHECK(all_subgroups(symmetric_table(4)).size() == 30);
  CHECK(all_subgroups(alternating4_table()).size() == 10);
  CHECK(all_subgroups(quaternion8_table()).size() == 6);
  CHECK(all_subgroups(cyclic_table(12)).size() == 6);
  // every reported subgroup is closed
  for (const auto& h : all_subgroups(symmetric_table(3))) {
    CHECK(closure(symmetric_table(3), h) == h);
  }
}

TEST_CASE("SL2(F5) closure") {
  std::vector<int> xi, yi;
  CayleyTable t = sl2_table(5, &xi, &yi);
  CHECK(t.order() == 120);
  CHECK(t.element_order(xi[0]) == 4);
  CHECK(t.element_order(yi[0]) == 6);
  // x^2 = y^3 = -1
  int x2 = t.mul(xi[0], xi[0]);
  int y3 = t.mul(t.mul(yi[0], yi[0]), yi[0]);
  CHECK(x2 == y3);
  CHECK(t.element_order(x2) == 2);
}
