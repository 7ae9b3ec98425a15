#include "girthlab/genset.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "girthlab/cayley.hpp"
#include "girthlab/errors.hpp"

namespace girthlab {

namespace {

// Greedy generating subset of cands: high element order first, ties by
// index, then a prune pass. Returns whatever it reached; the caller
// checks whether that is the whole group.
std::vector<int> greedy_genset(const CayleyTable& t, std::vector<int> cands) {
  std::stable_sort(cands.begin(), cands.end(), [&](int x, int y) {
    return t.element_order(x) > t.element_order(y);
  });
  std::vector<int> s;
  size_t reach = 1;
  for (int c : cands) {
    if (reach == static_cast<size_t>(t.order())) break;
    std::vector<int> trial = s;
    trial.push_back(c);
    size_t got = closure(t, trial).size();
    if (got > reach) {
      s = std::move(trial);
      reach = got;
    }
  }
  for (size_t i = 0; i < s.size();) {
    std::vector<int> rest;
    for (size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    if (closure(t, rest).size() == reach)
      s = std::move(rest);
    else
      ++i;
  }
  return s;
}

}  // namespace

GensetProfile profile(const GroupOracle& g, const Subgroup& a,
                      const Subgroup& b, const std::vector<Word>& s) {
  GensetProfile p;
  std::set<std::string> seen;
  for (const Word& w : s) {
    std::string key = g.normal_form_string(w);
    if (!seen.insert(key).second)
      fail(ErrorCode::DuplicateElement,
           "generating set repeats the element " + key);
    bool in_a = a.member(w);
    bool in_b = b.member(w);
    if (in_a && in_b)
      ++p.gamma;
    else if (in_a)
      ++p.alpha;
    else if (in_b)
      ++p.beta;
    else
      ++p.delta;
  }
  return p;
}

MoveResult product_move(const GroupOracle& g, const Subgroup& a,
                        const Subgroup& b, const std::vector<Word>& s,
                        const Word& s1, const Word& s2) {
  if (!a.member(s1) || b.member(s1))
    fail(ErrorCode::PreconditionViolated,
         "s1 must lie in the first subgroup only");
  if (!b.member(s2) || a.member(s2))
    fail(ErrorCode::PreconditionViolated,
         "s2 must lie in the second subgroup only");
  auto find = [&](const Word& w) {
    for (size_t i = 0; i < s.size(); ++i)
      if (g.equal(s[i], w)) return static_cast<long long>(i);
    return -1LL;
  };
  long long i1 = find(s1);
  long long i2 = find(s2);
  if (i1 < 0)
    fail(ErrorCode::PreconditionViolated, "s1 is not in the generating set");
  if (i2 < 0)
    fail(ErrorCode::PreconditionViolated, "s2 is not in the generating set");
  Word prod = g.canonical_word(s1 * s2);
  MoveResult out;
  out.escaped = !a.member(prod) && !b.member(prod);
  bool dup = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (static_cast<long long>(i) == i1) continue;
    if (g.equal(s[i], prod)) dup = true;
    out.genset.push_back(s[i]);
  }
  if (!dup) out.genset.push_back(prod);
  return out;
}

std::optional<std::vector<Word>> find_avoiding_genset(const GroupOracle& g,
                                                      const Subgroup& a,
                                                      const Subgroup& b) {
  if (g.kind() != GroupKind::FiniteCayley)
    fail(ErrorCode::Unsupported,
         "avoiding-set search needs a finite multiplication table");
  if (!a.is_proper() || !b.is_proper())
    fail(ErrorCode::SubgroupNotProper,
         "both subgroups must be proper for an avoiding set to exist");
  const CayleyTable& t = g.table();
  int n = t.order();
  std::vector<int> complement;
  for (int i = 1; i < n; ++i) {
    Word w = g.element_word(i);
    if (!a.member(w) && !b.member(w)) complement.push_back(i);
  }
  if (closure(t, complement).size() != static_cast<size_t>(n)) {
    // The complement of two proper subgroups generates unless the group
    // has a Klein four-group quotient, so the obstruction must show up.
    if (!g.klein_four_quotient_exists())
      fail(ErrorCode::Internal,
           "complement fails to generate but no Klein four-group quotient");
    return std::nullopt;
  }
  std::vector<int> s = greedy_genset(t, complement);
  std::vector<Word> out;
  for (int i : s) out.push_back(g.element_word(i));
  return out;
}

std::vector<Word> find_nearly_avoiding_genset(const GroupOracle& g,
                                              const Subgroup& a,
                                              const Subgroup& b) {
  if (g.kind() == GroupKind::FiniteCayley) {
    if (auto s = find_avoiding_genset(g, a, b)) return *s;
    const CayleyTable& t = g.table();
    int n = t.order();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (int i = 0; i < n; ++i) {
      Word w = g.element_word(i);
      in_a[i] = a.member(w);
      in_b[i] = b.member(w);
    }
    std::vector<int> all;
    for (int i = 1; i < n; ++i) all.push_back(i);
    std::vector<int> s = greedy_genset(t, all);
    // Shrink the overlap with A and B by product moves. Each move keeps
    // generation (the replaced element is product * partner^-1) and
    // pushes some element out of A union B within two steps.
    long long budget = static_cast<long long>(n) * n;
    while (budget-- > 0) {
      std::vector<int> only_a, only_b, core, outside;
      for (int e : s) {
        if (in_a[e] && in_b[e])
          core.push_back(e);
        else if (in_a[e])
          only_a.push_back(e);
        else if (in_b[e])
          only_b.push_back(e);
        else
          outside.push_back(e);
      }
      if (only_a.size() + only_b.size() + core.size() <= 1) break;
      int victim, partner;
      if (!only_a.empty() && !only_b.empty()) {
        victim = only_a[0];
        partner = only_b[0];
      } else if (!core.empty() && !outside.empty()) {
        victim = core[0];
        partner = outside[0];
      } else if (only_a.size() >= 2 && !outside.empty()) {
        victim = only_a[0];
        partner = outside[0];
      } else if (only_b.size() >= 2 && !outside.empty()) {
        victim = only_b[0];
        partner = outside[0];
      } else {
        fail(ErrorCode::SearchExhausted,
             "no product move applies to the current generating set");
      }
      int prod = t.mul(victim, partner);
      if (prod == 0)
        fail(ErrorCode::Internal, "product move collapsed to the identity");
      std::vector<int> next;
      bool dup = false;
      for (int e : s) {
        if (e == victim) continue;
        if (e == prod) dup = true;
        next.push_back(e);
      }
      if (!dup) next.push_back(prod);
      s = std::move(next);
    }
    if (budget < 0)
      fail(ErrorCode::SearchExhausted, "product move budget exhausted");
    if (closure(t, s).size() != static_cast<size_t>(n))
      fail(ErrorCode::Internal, "product moves broke generation");
    std::vector<Word> out;
    for (int i : s) out.push_back(g.element_word(i));
    return out;
  }
  if (g.kind() != GroupKind::Dihedral &&
      !(g.kind() == GroupKind::FreeAbelian && g.rank() == 2))
    fail(ErrorCode::Unsupported,
         "infinite search supports the dihedral and rank-2 abelian oracles");
  if (!a.is_proper() || !b.is_proper())
    fail(ErrorCode::SubgroupNotProper,
         "both subgroups must be proper for a nearly avoiding set to exist");
  std::vector<Word> cands = g.enumerate_elements(6);
  auto generates = [&](const Word& x, const Word& y) {
    auto h = make_subgroup(g, {x, y});
    auto idx = h->index();
    return idx && *idx == 1;
  };
  // Fully avoiding pairs first, then pairs meeting A union B once.
  std::vector<const Word*> outside;
  for (const Word& w : cands)
    if (!a.member(w) && !b.member(w)) outside.push_back(&w);
  for (size_t i = 0; i < outside.size(); ++i)
    for (size_t j = i + 1; j < outside.size(); ++j)
      if (generates(*outside[i], *outside[j]))
        return {*outside[i], *outside[j]};
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = i + 1; j < cands.size(); ++j) {
      int hits = 0;
      for (const Word* w : {&cands[i], &cands[j]})
        if (a.member(*w) || b.member(*w)) ++hits;
      if (hits > 1) continue;
      if (generates(cands[i], cands[j])) return {cands[i], cands[j]};
    }
  fail(ErrorCode::SearchExhausted,
       "no nearly avoiding pair within the word length bound");
}

bool has_avoidance_property(const GroupOracle& g) {
  return !g.klein_four_quotient_exists();
}

}  // namespace girthlab
