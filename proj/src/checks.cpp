#include "girthlab/checks.hpp"

#include <chrono>
#include <deque>
#include <sstream>

#include "girthlab/amalgam.hpp"
#include "girthlab/errors.hpp"
#include "girthlab/genset.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/hnn.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"

namespace girthlab {
namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorCode::Internal, msg);
}

const CorpusGroup& need(const std::vector<CorpusGroup>& corpus,
                        const std::string& name) {
  for (const CorpusGroup& g : corpus)
    if (g.name == name) return g;
  fail(ErrorCode::CorpusMissing, "corpus lacks group " + name);
}

std::vector<Word> subgroup_words(const GroupOracle& g,
                                 const std::vector<int>& elems) {
  std::vector<Word> out;
  for (int e : elems)
    if (e != 0) out.push_back(g.element_word(e));
  return out;
}

// Breadth-first girth over the multiplication table, counting freely
// reduced words only. Written against the table directly so it shares no
// code with the word enumerator it cross-checks.
long long bfs_girth(const CayleyTable& t, const std::vector<int>& gens,
                    long long cap) {
  const int k = static_cast<int>(gens.size());
  const int codes = 2 * k;
  auto elem = [&](int c) {
    int g = gens[c >> 1];
    return (c & 1) ? t.inv(g) : g;
  };
  for (int c = 0; c < codes; ++c)
    if (elem(c) == 0) return 1;
  std::vector<int> dist(static_cast<size_t>(t.order()) * codes, -1);
  std::deque<std::pair<int, int>> queue;
  for (int c = 0; c < codes; ++c) {
    int h = elem(c);
    if (dist[static_cast<size_t>(h) * codes + c] < 0) {
      dist[static_cast<size_t>(h) * codes + c] = 1;
      queue.emplace_back(h, c);
    }
  }
  while (!queue.empty()) {
    auto [h, last] = queue.front();
    queue.pop_front();
    int d = dist[static_cast<size_t>(h) * codes + last];
    if (d >= cap) break;
    for (int c = 0; c < codes; ++c) {
      if ((c >> 1) == (last >> 1) && ((c ^ last) & 1)) continue;  // cancels
      int nh = t.mul(h, elem(c));
      if (nh == 0) return d + 1;
      size_t key = static_cast<size_t>(nh) * codes + c;
      if (dist[key] < 0) {
        dist[key] = d + 1;
        queue.emplace_back(nh, c);
      }
    }
  }
  return cap + 1;
}

// Fixed extensions and presentations the witness checks run against.

HnnExtension f2_proper() {
  GroupOracle f = GroupOracle::free_group(2);
  Word a = Word::letter(0), b = Word::letter(1);
  return HnnExtension(f, {a}, {b}, {b});
}

HnnExtension bs12() {
  GroupOracle z = GroupOracle::free_abelian(1);
  Word a = Word::letter(0);
  return HnnExtension(z, {a}, {a * a}, {a * a});
}

HnnExtension dihedral_hnn() {
  GroupOracle d = GroupOracle::dihedral(std::nullopt);
  Word a = Word::letter(0), b = Word::letter(1);
  return HnnExtension(d, {a, b * a * b}, {a * b * a, b}, {a * b * a, b});
}

HnnExtension z2_hnn() {
  GroupOracle z2 = GroupOracle::free_abelian(2);
  Word a = Word::letter(0), b = Word::letter(1);
  return HnnExtension(z2, {b.inverse()}, {a * b.inverse()}, {a * b.inverse()});
}

AmalgamPresentation modular_amalgam() {
  GroupOracle z6 = GroupOracle::finite(cyclic_table(6), {1}, {"y"});
  GroupOracle z4 = GroupOracle::finite(cyclic_table(4), {1}, {"x"});
  Word y = Word::letter(0), x = Word::letter(0);
  return AmalgamPresentation(z6, z4, {y.pow(3)}, {x.pow(2)}, {x.pow(2)});
}

void check_dihedral_girth(const std::vector<CorpusGroup>&) {
  GroupOracle d = GroupOracle::dihedral(std::nullopt);
  auto q = GirthQuery::over_oracle(d, {Word::letter(0), Word::letter(1)});
  GirthCertificate cert = girth_exact(q);
  expect(cert.kind == GirthKind::Exact, "girth of D_inf was not decided");
  expect(cert.value == 2, "girth of D_inf is " + std::to_string(cert.value) +
                              ", expected 2");
  expect(cert.witness && *cert.witness == Word::power(0, 2),
         "expected the relation a^2 as witness");
}

void check_dihedral_cover(const std::vector<CorpusGroup>&) {
  GroupOracle d = GroupOracle::dihedral(std::nullopt);
  auto K = gmn_subgroup(d, 0, 1);  // <a, bab>
  auto L = gmn_subgroup(d, 1, 0);  // <aba, b>
  expect(odd_words_covered(*K, *L, 15),
         "an odd alternating word escapes both subgroups");
}

void check_hnn_avoiding_witness(const std::vector<CorpusGroup>&) {
  HnnExtension h = f2_proper();
  const Alphabet& base = h.base().alphabet();
  std::vector<Word> S = {base.parse("a b"), base.parse("b a^-1")};
  for (long long r = 2; r <= 4; ++r) {
    auto fam = build_witness_avoiding(h, S, r);
    auto q = GirthQuery::over_hnn(h, fam);
    GirthCertificate cert =
        certify_no_short_relation(q, r, std::min<long long>(r - 1, 5));
    expect(cert.kind == GirthKind::LowerBound,
           "witness family r=" + std::to_string(r) + " has a short relation");
    expect(cert.value == r && !cert.truncated,
           "witness family r=" + std::to_string(r) + " was not fully checked");
  }
}

void check_hnn_one_sided_witness(const std::vector<CorpusGroup>&) {
  HnnExtension h = f2_proper();
  const Alphabet& base = h.base().alphabet();
  // last entry lies in A and avoids B; the rest avoid both
  auto fam = build_witness_one_sided(h, {base.parse("a b"), base.parse("a")}, 3);
  auto q = GirthQuery::over_hnn(h, fam);
  GirthCertificate cert = certify_no_short_relation(q, 4, 3);
  expect(cert.kind == GirthKind::LowerBound && cert.value == 4,
         "one-sided witness family has a relation of length at most 3");
  expect(!cert.truncated, "one-sided certification was cut off early");
}

void check_hnn_dihedral_witness(const std::vector<CorpusGroup>&) {
  HnnExtension h = dihedral_hnn();
  expect(h.classify() == HnnClass::Proper,
         "dihedral extension should be proper on both sides");
  auto fam = build_witness_dihedral(h, 2);
  expect(fam.size() == 3 && fam[0].t_length() == 1,
         "dihedral witness family should be {t, t^2 a t^-4, t^-2 b t^4}");
  auto q = GirthQuery::over_hnn(h, fam);
  GirthCertificate cert = certify_no_short_relation(q, 4, 3);
  expect(cert.kind == GirthKind::LowerBound && cert.value == 4 &&
             !cert.truncated,
         "dihedral witness family has a relation of length at most 3");
}

void check_z2_hnn_genset(const std::vector<CorpusGroup>&) {
  HnnExtension h = z2_hnn();
  expect(h.classify() == HnnClass::Proper,
         "the rank-2 abelian extension should be proper");
  GroupOracle g = h.base();
  auto A = make_subgroup(g, h.A().declared_gens());
  auto B = make_subgroup(g, h.B().declared_gens());
  std::vector<Word> S = find_nearly_avoiding_genset(g, *A, *B);
  GensetProfile prof = profile(g, *A, *B, S);
  expect(prof.in_union() == 0,
         "search should land every generator outside A and B");
  auto fam = build_witness_avoiding(h, S, 4);
  auto q = GirthQuery::over_hnn(h, fam);
  GirthCertificate cert = certify_no_short_relation(q, 5, 4);
  expect(cert.kind == GirthKind::LowerBound && cert.value == 5 &&
             !cert.truncated,
         "abelian witness family has a relation of length at most 4");
}

void check_laws_vs_exact(const std::vector<CorpusGroup>&) {
  // rank-2 abelian: the commutator law meets the exact search
  GroupOracle z2 = GroupOracle::free_abelian(2);
  auto q1 = GirthQuery::over_oracle(z2, {Word::letter(0), Word::letter(1)});
  GirthCertificate law1 = law_upper_bound(q1, law_abelian());
  GirthCertificate exact1 = girth_exact(q1);
  expect(law1.kind == GirthKind::UpperBound && law1.value == 4,
         "the commutator law should bound girth(Z^2) by 4");
  expect(exact1.kind == GirthKind::Exact && exact1.value == 4,
         "girth(Z^2, {a,b}) should be exactly 4");

  // BS(1,2): metabelian law holds, exact girth is 5 with a frozen witness
  HnnExtension h = bs12();
  const Alphabet& ext = h.ext_alphabet();
  auto q2 = GirthQuery::over_hnn(
      h, {h.to_element(ext.parse("a")), h.to_element(ext.parse("t"))}, 6);
  GirthCertificate law2 = law_upper_bound(
      q2, law_metabelian(),
      {Word::letter(0), Word::letter(1), Word::letter(0, -1),
       Word::letter(1, -1)});
  expect(law2.kind == GirthKind::UpperBound && law2.value == 16,
         "the metabelian law should hold in BS(1,2)");
  GirthCertificate exact2 = girth_exact(q2);
  expect(exact2.kind == GirthKind::Exact && exact2.value == 5,
         "girth(BS(1,2), {a,t}) should be exactly 5");
  Word frozen = Word::power(0, 2) * Word::letter(1, -1) * Word::letter(0, -1) *
                Word::letter(1, 1);
  expect(exact2.witness && *exact2.witness == frozen,
         "shortest BS(1,2) relation drifted from the frozen witness");
  expect(exact2.value <= law2.value,
         "exact girth exceeds the law upper bound");
}

void check_corpus_genset_klein(const std::vector<CorpusGroup>& corpus) {
  // the sweep needs the full small-order table to mean anything
  for (int n = 2; n <= 24; ++n) need(corpus, "Z" + std::to_string(n));
  for (int qq = 2; qq <= 12; ++qq) need(corpus, "D" + std::to_string(qq));
  for (const char* nm : {"S3", "S4", "A4", "Q8", "Z2xZ2", "Z2xZ4"})
    need(corpus, nm);

  for (const CorpusGroup& cg : corpus) {
    GroupOracle g = GroupOracle::finite(cg.table, cg.gens);
    auto subs = all_subgroups(cg.table);
    bool all_ok = true;
    for (const auto& ae : subs) {
      if (ae.size() == static_cast<size_t>(cg.table.order())) continue;
      auto A = make_subgroup(g, subgroup_words(g, ae));
      for (const auto& be : subs) {
        if (be.size() == static_cast<size_t>(cg.table.order())) continue;
        auto B = make_subgroup(g, subgroup_words(g, be));
        auto S = find_avoiding_genset(g, *A, *B);
        if (!S) {
          all_ok = false;
          continue;
        }
        GensetProfile prof = profile(g, *A, *B, *S);
        expect(prof.in_union() == 0,
               cg.name + ": an avoiding generator landed in A or B");
        expect(make_subgroup(g, *S)->index() == 1,
               cg.name + ": avoiding set fails to generate");
      }
    }
    expect(all_ok == has_avoidance_property(g),
           cg.name + ": avoiding-set search disagrees with the Klein "
                     "four-group criterion");
  }
}

void check_corpus_squares_normality(const std::vector<CorpusGroup>& corpus) {
  for (const CorpusGroup& cg : corpus) {
    GroupOracle g = GroupOracle::finite(cg.table, cg.gens);
    for (const auto& elems : all_subgroups(cg.table)) {
      auto h = make_subgroup(g, subgroup_words(g, elems));
      expect(check_squares_force_normality(g, *h),
             cg.name + ": a subgroup containing all squares is not normal");
    }
  }
}

void check_corpus_separated_pairs(const std::vector<CorpusGroup>& corpus) {
  for (const CorpusGroup& cg : corpus) {
    GroupOracle g = GroupOracle::finite(cg.table, cg.gens);
    for (const auto& elems : all_subgroups(cg.table)) {
      if (static_cast<size_t>(cg.table.order()) < 3 * elems.size()) continue;
      auto c = make_subgroup(g, subgroup_words(g, elems));
      auto [a1, a2] = find_separated_pair(g, *c);
      auto violation = separated_pair_violation(g, *c, a1, a2);
      expect(!violation, cg.name + ": separated pair fails: " +
                             (violation ? *violation : ""));
    }
  }
}

void check_amalgam_witness(const std::vector<CorpusGroup>&) {
  AmalgamPresentation p = modular_amalgam();
  Word y = Word::letter(0), x = Word::letter(0);
  auto fam = build_amalgam_witness(p, {y, y.pow(2)}, {x}, 2);
  auto q = GirthQuery::over_amalgam(p, fam);
  GirthCertificate cert = certify_no_short_relation(q, 3, 2);
  expect(cert.kind == GirthKind::LowerBound && cert.value == 3 &&
             !cert.truncated,
         "amalgam witness family has a relation of length at most 2");
}

void check_girth_bfs_agreement(const std::vector<CorpusGroup>& corpus) {
  long long pairs = 0;
  auto compare = [&](const CorpusGroup& cg, const std::vector<int>& gens) {
    GroupOracle g = GroupOracle::finite(cg.table, cg.gens);
    std::vector<Word> qgens;
    for (int e : gens) {
      for (size_t i = 0; i < cg.gens.size(); ++i)
        if (cg.gens[i] == e) qgens.push_back(Word::letter(static_cast<int>(i)));
    }
    long long cap = qgens.size() == 1 ? 26 : 12;
    auto q = GirthQuery::over_oracle(g, qgens, cap);
    GirthCertificate cert = girth_exact(q);
    long long reference = bfs_girth(cg.table, gens, cap);
    expect(cert.kind == GirthKind::Exact,
           cg.name + ": table girth exceeded the search cap");
    expect(cert.value == reference,
           cg.name + ": enumerator and table search disagree (" +
               std::to_string(cert.value) + " vs " +
               std::to_string(reference) + ")");
    ++pairs;
  };
  for (const CorpusGroup& cg : corpus) compare(cg, cg.gens);
  for (size_t i = 0; i < corpus.size() && pairs < 50; ++i)
    if (corpus[i].gens.size() > 1) compare(corpus[i], {corpus[i].gens[0]});
  expect(pairs == 50, "expected exactly 50 cross-checked pairs, got " +
                          std::to_string(pairs));
}

}  // namespace

std::string fingerprint_hex(uint64_t fp) {
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((fp >> shift) & 0xf);
  return os.str();
}

const std::vector<CorpusCheck>& corpus_checks() {
  static const std::vector<CorpusCheck> checks = {
      {"dihedral-girth", "girth(D_inf, {a,b}) is exactly 2", 1000,
       check_dihedral_girth},
      {"dihedral-cover",
       "odd alternating words up to length 15 lie in <a,bab> or <b,aba>", 1000,
       check_dihedral_cover},
      {"hnn-avoiding-witness",
       "avoiding witness families over F2 have no short relations", 10000,
       check_hnn_avoiding_witness},
      {"hnn-one-sided-witness",
       "a one-sided witness family over F2 has no relation below 4", 10000,
       check_hnn_one_sided_witness},
      {"hnn-dihedral-witness",
       "the dihedral-base witness family has no relation below 4", 10000,
       check_hnn_dihedral_witness},
      {"z2-hnn-genset",
       "rank-2 abelian extension: avoiding set found and witness certified",
       30000, check_z2_hnn_genset},
      {"laws-vs-exact",
       "law upper bounds agree with exact girth on Z^2 and BS(1,2)", 30000,
       check_laws_vs_exact},
      {"corpus-genset-klein",
       "avoiding sets exist for all proper pairs iff no Klein quotient",
       300000, check_corpus_genset_klein},
      {"corpus-squares-normality",
       "subgroups containing all squares are normal across the corpus", 60000,
       check_corpus_squares_normality},
      {"corpus-separated-pairs",
       "separated pairs pass all eight conditions at index >= 3", 60000,
       check_corpus_separated_pairs},
      {"amalgam-witness",
       "the modular amalgam witness family has no relation below 3", 30000,
       check_amalgam_witness},
      {"girth-bfs-agreement",
       "enumerator girth matches table breadth-first search on 50 pairs",
       60000, check_girth_bfs_agreement},
  };
  return checks;
}

std::vector<CheckOutcome> run_checks(const std::vector<CorpusGroup>& corpus,
                                     const std::vector<std::string>& only) {
  const auto& checks = corpus_checks();
  auto matches = [](const std::string& pat, const std::string& name) {
    return name.find(pat) != std::string::npos;
  };
  for (const std::string& pat : only) {
    bool known = false;
    for (const CorpusCheck& c : checks) known = known || matches(pat, c.name);
    if (!known)
      fail(ErrorCode::ValidationError, "no check named '" + pat + "'");
  }
  std::vector<CheckOutcome> out;
  for (const CorpusCheck& c : checks) {
    if (!only.empty()) {
      bool wanted = false;
      for (const std::string& pat : only) wanted = wanted || matches(pat, c.name);
      if (!wanted) continue;
    }
    CheckOutcome o;
    o.name = c.name;
    o.budget_ms = c.budget_ms;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(corpus);
      o.passed = true;
    } catch (const std::exception& e) {
      o.passed = false;
      o.message = e.what();
    }
    o.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (o.passed && o.elapsed_ms > o.budget_ms) {
      o.passed = false;
      o.message = "budget exceeded: " + std::to_string(o.elapsed_ms) +
                  "ms > " + std::to_string(o.budget_ms) + "ms";
    }
    out.push_back(std::move(o));
  }
  return out;
}

nlohmann::json manifest_json(const RunManifest& m) {
  nlohmann::json j;
  j["command"] = m.command;
  j["inputs"] = m.inputs;
  j["results"] = m.results;
  j["versions"] = {{"tool", m.tool}, {"corpus", m.corpus_checksum}};
  j["elapsed_ms"] = m.elapsed_ms;
  return j;
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorCode::ValidationError,
         std::string("manifest misses field '") + key + "'");
  return *it;
}

}  // namespace

RunManifest manifest_parse(const nlohmann::json& j) {
  RunManifest m;
  try {
    m.command = field(j, "command").get<std::string>();
    m.inputs = field(j, "inputs").get<std::map<std::string, std::string>>();
    m.results = field(j, "results");
    const nlohmann::json& v = field(j, "versions");
    m.tool = field(v, "tool").get<std::string>();
    m.corpus_checksum = field(v, "corpus").get<std::string>();
    m.elapsed_ms = field(j, "elapsed_ms").get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ValidationError,
         std::string("manifest field has the wrong type: ") + e.what());
  }
  return m;
}

}  // namespace girthlab
