#include "doctest.h"

#include "girthlab/checks.hpp"
#include "girthlab/errors.hpp"

using namespace girthlab;

TEST_CASE("manifest round-trips through json") {
  RunManifest m;
  m.command = "girth";
  m.inputs = {{"target", "dihedral q=inf"}, {"gens", "a; b"}};
  m.results = {{"kind", "exact"}, {"value", 2}};
  m.corpus_checksum = fingerprint_hex(0x1234abcd);
  m.elapsed_ms = 1.5;

  nlohmann::json j = manifest_json(m);
  CHECK(manifest_parse(j) == m);

  // serialization is deterministic byte for byte
  CHECK(j.dump() == manifest_json(m).dump());

  // a copy that differs only in elapsed time parses back as itself
  RunManifest m2 = m;
  m2.elapsed_ms = 99.0;
  CHECK(manifest_parse(manifest_json(m2)) == m2);
  CHECK(!(manifest_parse(manifest_json(m2)) == m));
}

TEST_CASE("manifest parse validates shape") {
  nlohmann::json j = manifest_json(RunManifest{});
  j.erase("command");
  CHECK_THROWS_WITH_AS(manifest_parse(j), doctest::Contains("misses field"),
                       Error);

  nlohmann::json bad = manifest_json(RunManifest{});
  bad["elapsed_ms"] = "fast";
  CHECK_THROWS_WITH_AS(manifest_parse(bad), doctest::Contains("wrong type"),
                       Error);

  nlohmann::json nover = manifest_json(RunManifest{});
  nover["versions"].erase("corpus");
  CHECK_THROWS_WITH_AS(manifest_parse(nover),
                       doctest::Contains("misses field 'corpus'"), Error);
}

TEST_CASE("check suite shape and filtering") {
  const auto& checks = corpus_checks();
  REQUIRE(checks.size() == 12);
  const char* expected[] = {
      "dihedral-girth",        "dihedral-cover",
      "hnn-avoiding-witness",  "hnn-one-sided-witness",
      "hnn-dihedral-witness",  "z2-hnn-genset",
      "laws-vs-exact",         "corpus-genset-klein",
      "corpus-squares-normality", "corpus-separated-pairs",
      "amalgam-witness",       "girth-bfs-agreement",
  };
  for (size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].name == expected[i]);
    CHECK(!checks[i].detail.empty());
    CHECK(checks[i].budget_ms > 0);
  }

  auto corpus = bundled_corpus();
  auto one = run_checks(corpus, {"dihedral-girth"});
  REQUIRE(one.size() == 1);
  CHECK(one[0].name == "dihedral-girth");
  CHECK(one[0].passed);
  CHECK(one[0].message.empty());
  CHECK(one[0].elapsed_ms >= 0);

  // order follows the suite, not the filter
  auto two = run_checks(corpus, {"dihedral-cover", "dihedral-girth"});
  REQUIRE(two.size() == 2);
  CHECK(two[0].name == "dihedral-girth");
  CHECK(two[1].name == "dihedral-cover");

  // substring selection: one token can pick a family of checks
  auto fam = run_checks(corpus, {"genset"});
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].name == "z2-hnn-genset");
  CHECK(fam[1].name == "corpus-genset-klein");

  CHECK_THROWS_WITH_AS(run_checks(corpus, {"no-such-check"}),
                       doctest::Contains("no check named"), Error);
}

TEST_CASE("corpus sweep reports a missing group") {
  auto corpus = bundled_corpus();
  std::erase_if(corpus, [](const CorpusGroup& g) { return g.name == "Z24"; });
  auto out = run_checks(corpus, {"corpus-genset-klein"});
  REQUIRE(out.size() == 1);
  CHECK(!out[0].passed);
  CHECK(out[0].message.find("corpus lacks group Z24") != std::string::npos);
}

TEST_CASE("fingerprint formatting is fixed width hex") {
  CHECK(fingerprint_hex(0) == "0000000000000000");
  CHECK(fingerprint_hex(0x1234abcd) == "000000001234abcd");
  CHECK(fingerprint_hex(~0ull) == "ffffffffffffffff");
}
