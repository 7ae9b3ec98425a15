#include "girthlab/girth.hpp"

#include <algorithm>
#include <sstream>

#include "girthlab/cayley.hpp"
#include "girthlab/errors.hpp"

namespace girthlab {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string oracle_desc(const GroupOracle& g) {
  std::ostringstream out;
  switch (g.kind()) {
    case GroupKind::Free:
      out << "free rank=" << g.rank();
      break;
    case GroupKind::FreeAbelian:
      out << "free-abelian rank=" << g.rank();
      break;
    case GroupKind::Dihedral:
      out << "dihedral q=";
      if (g.dihedral_q())
        out << *g.dihedral_q();
      else
        out << "inf";
      break;
    case GroupKind::FiniteCayley:
      out << "finite order=" << g.table().order() << " table=" << std::hex
          << g.table().fingerprint() << std::dec << " gens=";
      for (size_t i = 0; i < g.table_gens().size(); ++i)
        out << (i ? "," : "") << g.table_gens()[i];
      break;
  }
  return out.str();
}

std::string join_words(const Alphabet& ab, const std::vector<Word>& ws) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += "; ";
    out += ab.format(ws[i]);
  }
  return out;
}

}  // namespace

Alphabet relation_alphabet(int k) {
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
  return Alphabet(std::move(names));
}

long long suggested_cap(int k, unsigned long long budget) {
  if (k < 1) fail(ErrorCode::ValidationError, "need at least one symbol");
  unsigned long long m = 2ull * k - 1;
  unsigned long long per = 2ull * k;
  if (per > budget) return 1;
  unsigned long long total = per;
  long long len = 1;
  while (len < 64) {
    if (m > 1 && per > budget / m) break;
    per *= m;
    if (total + per > budget) break;
    total += per;
    ++len;
  }
  return len;
}

int GirthQuery::genset_size() const {
  return std::visit(
      [](const auto& t) { return static_cast<int>(t.gens.size()); }, target_);
}

void GirthQuery::seal(long long max_len) {
  if (max_len < 0)
    fail(ErrorCode::ValidationError, "search cap must be nonnegative");
  max_len_ = max_len > 0 ? max_len : suggested_cap(genset_size());
  fingerprint_ = fnv1a(description_);
}

GirthQuery GirthQuery::over_oracle(const GroupOracle& g, std::vector<Word> gens,
                                   long long max_len) {
  if (gens.empty())
    fail(ErrorCode::ValidationError, "girth needs a nonempty generating list");
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (g.equal(gens[i], gens[j]))
        fail(ErrorCode::DuplicateElement,
             "entries " + std::to_string(i + 1) + " and " +
                 std::to_string(j + 1) + " are the same element");
  GirthQuery q;
  std::vector<Word> proper_gens;
  for (const Word& w : gens)
    if (!g.is_identity(w)) proper_gens.push_back(w);
  if (proper_gens.empty()) {
    q.generation_ =
        (g.order() && *g.order() == 1) ? "verified" : "not-generating";
  } else {
    auto idx = make_subgroup(g, proper_gens)->index();
    q.generation_ = (idx && *idx == 1) ? "verified" : "not-generating";
  }
  q.description_ = "target{" + oracle_desc(g) + "} gens=[" +
                   join_words(g.alphabet(), gens) + "]";
  q.target_ = OracleTarget{&g, std::move(gens)};
  q.seal(max_len);
  return q;
}

GirthQuery GirthQuery::over_hnn(const HnnExtension& h,
                                std::vector<HnnElement> gens,
                                long long max_len) {
  if (gens.empty())
    fail(ErrorCode::ValidationError, "girth needs a nonempty generating list");
  std::vector<Word> ws;
  for (const HnnElement& e : gens) ws.push_back(h.to_word(e));
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i + 1; j < ws.size(); ++j)
      if (h.is_identity(ws[i] * ws[j].inverse()))
        fail(ErrorCode::DuplicateElement,
             "entries " + std::to_string(i + 1) + " and " +
                 std::to_string(j + 1) + " are the same element");
  GirthQuery q;
  q.generation_ = "assumed";
  const Alphabet& ea = h.ext_alphabet();
  const Alphabet& ba = h.base().alphabet();
  q.description_ = "target{hnn stable=" + ea.name(h.stable_sym()) + " base{" +
                   oracle_desc(h.base()) + "} A=[" +
                   join_words(ba, h.A().declared_gens()) + "] B=[" +
                   join_words(ba, h.B().declared_gens()) + "] phi=[" +
                   join_words(ba, h.phi_images()) + "]} gens=[" +
                   join_words(ea, ws) + "]";
  q.target_ = HnnTarget{&h, std::move(ws)};
  q.seal(max_len);
  return q;
}

GirthQuery GirthQuery::over_amalgam(const AmalgamPresentation& p,
                                    std::vector<AmalgamElement> gens,
                                    long long max_len) {
  if (gens.empty())
    fail(ErrorCode::ValidationError, "girth needs a nonempty generating list");
  std::vector<AmalgamElement> norm, inv;
  for (const AmalgamElement& e : gens) {
    norm.push_back(p.normalize(e));
    inv.push_back(p.inverse(e));
  }
  for (size_t i = 0; i < norm.size(); ++i)
    for (size_t j = i + 1; j < norm.size(); ++j)
      if (p.is_identity(p.mul(norm[i], inv[j])))
        fail(ErrorCode::DuplicateElement,
             "entries " + std::to_string(i + 1) + " and " +
                 std::to_string(j + 1) + " are the same element");
  GirthQuery q;
  q.generation_ = "assumed";
  std::string gens_desc;
  for (size_t i = 0; i < norm.size(); ++i) {
    if (i) gens_desc += "; ";
    gens_desc += p.format(norm[i]);
  }
  q.description_ =
      "target{amalgam left{" + oracle_desc(p.left()) + "} right{" +
      oracle_desc(p.right()) + "} C_left=[" +
      join_words(p.left().alphabet(), p.core_left().declared_gens()) +
      "] C_right=[" +
      join_words(p.right().alphabet(), p.core_right().declared_gens()) +
      "] iso=[" + join_words(p.right().alphabet(), p.iso_images()) +
      "]} gens=[" + gens_desc + "]";
  q.target_ = AmalgamTarget{&p, std::move(norm), std::move(inv)};
  q.seal(max_len);
  return q;
}

bool GirthQuery::relation_is_identity(const Word& rel) const {
  return std::visit(
      [&](const auto& t) -> bool {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, OracleTarget>) {
          return t.g->is_identity(substitute(rel, t.gens));
        } else if constexpr (std::is_same_v<T, HnnTarget>) {
          return t.h->is_identity(substitute(rel, t.gens));
        } else {
          AmalgamElement acc;
          for (const Letter& l : rel) {
            if (l.sym < 0 || l.sym >= static_cast<int>(t.gens.size()))
              fail(ErrorCode::UnknownSymbol,
                   "relation symbol " + std::to_string(l.sym) +
                       " has no generator");
            acc = t.p->mul(acc, l.sign > 0 ? t.gens[l.sym] : t.inv[l.sym]);
          }
          return t.p->is_identity(acc);
        }
      },
      target_);
}

GirthCertificate girth_exact(const GirthQuery& q) {
  GirthCertificate c;
  c.query_fingerprint = q.fingerprint();
  c.note = "freely reduced relation convention; generation " + q.generation();
  ReducedWordEnumerator en(q.genset_size(), static_cast<int>(q.max_len()));
  unsigned long long checked = 0;
  while (auto w = en.next()) {
    if (!w->cyclically_reduced()) continue;
    ++checked;
    if (q.relation_is_identity(*w)) {
      c.kind = GirthKind::Exact;
      c.value = static_cast<long long>(w->size());
      c.witness = *w;
      c.words_checked = checked;
      return c;
    }
  }
  c.kind = GirthKind::LowerBound;
  c.value = q.max_len() + 1;
  c.words_checked = checked;
  return c;
}

GirthCertificate certify_no_short_relation(const GirthQuery& q, long long r,
                                           long long cap) {
  if (r < 1)
    fail(ErrorCode::ValidationError, "certification target must be positive");
  if (cap < 0) fail(ErrorCode::ValidationError, "cap must be nonnegative");
  long long effective = std::min(cap, r - 1);
  GirthCertificate c;
  c.query_fingerprint = q.fingerprint();
  c.requested_r = r;
  c.truncated = effective < r - 1;
  unsigned long long checked = 0;
  if (effective >= 1) {
    ReducedWordEnumerator en(q.genset_size(), static_cast<int>(effective));
    while (auto w = en.next()) {
      if (!w->cyclically_reduced()) continue;
      ++checked;
      if (q.relation_is_identity(*w)) {
        c.kind = GirthKind::Exact;
        c.value = static_cast<long long>(w->size());
        c.witness = *w;
        c.words_checked = checked;
        c.note = "relation found below the certification target";
        return c;
      }
    }
  }
  c.kind = GirthKind::LowerBound;
  c.value = effective + 1;
  c.words_checked = checked;
  c.note = c.truncated ? "cap stopped short of the certification target"
                       : "exhaustive below the certification target";
  return c;
}

GirthCertificate law_upper_bound(const GirthQuery& q, const Word& law,
                                 std::vector<Word> instantiation) {
  if (law.empty()) fail(ErrorCode::ValidationError, "law word is empty");
  int nvars = 0;
  for (const Letter& l : law) nvars = std::max(nvars, l.sym + 1);
  int k = q.genset_size();
  if (instantiation.empty()) {
    if (k < nvars)
      fail(ErrorCode::PreconditionViolated,
           "law needs " + std::to_string(nvars) +
               " distinct generators, list has " + std::to_string(k));
    for (int i = 0; i < nvars; ++i) instantiation.push_back(Word::letter(i));
  } else if (static_cast<int>(instantiation.size()) < nvars) {
    fail(ErrorCode::PreconditionViolated,
         "instantiation misses a law variable");
  }
  for (const Word& w : instantiation)
    for (const Letter& l : w)
      if (l.sym < 0 || l.sym >= k)
        fail(ErrorCode::UnknownSymbol, "instantiation symbol out of range");
  Word sub = substitute(law, instantiation);
  GirthCertificate c;
  c.query_fingerprint = q.fingerprint();
  c.words_checked = 1;
  if (sub.empty())
    fail(ErrorCode::SubstitutionCollapsed,
         "law collapses under this instantiation");
  if (q.relation_is_identity(sub)) {
    c.kind = GirthKind::UpperBound;
    c.value = static_cast<long long>(sub.size());
    c.witness = sub;
  } else {
    c.kind = GirthKind::LawDoesNotHold;
    c.note = "the law fails at this instantiation";
  }
  return c;
}

Alphabet law_alphabet() { return Alphabet({"x", "y", "z", "w"}); }

namespace {
Word comm(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}
}  // namespace

Word law_abelian() { return comm(Word::letter(0), Word::letter(1)); }

Word law_metabelian() {
  return comm(comm(Word::letter(0), Word::letter(1)),
              comm(Word::letter(2), Word::letter(3)));
}

Word law_nilpotent2() {
  return comm(comm(Word::letter(0), Word::letter(1)), Word::letter(2));
}

Word law_burnside(int n) {
  if (n < 1) fail(ErrorCode::ValidationError, "exponent must be positive");
  return Word::power(0, n);
}

}  // namespace girthlab
