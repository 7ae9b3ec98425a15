#include "girthlab/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace girthlab {

bool normal_form_is_identity(const NormalForm& nf) {
  if (const Word* w = std::get_if<Word>(&nf)) return w->empty();
  if (const auto* v = std::get_if<std::vector<long long>>(&nf))
    return std::all_of(v->begin(), v->end(), [](long long x) { return x == 0; });
  if (const auto* d = std::get_if<DihedralNormal>(&nf))
    return d->translation == 0 && d->flip == 0;
  return std::get<int>(nf) == 0;
}

GroupOracle GroupOracle::free_group(int rank) {
  if (rank < 1) fail(ErrorCode::ValidationError, "free group rank must be >= 1");
  GroupOracle g;
  g.kind_ = GroupKind::Free;
  g.alphabet_ = letter_alphabet(rank);
  return g;
}

GroupOracle GroupOracle::free_abelian(int rank) {
  if (rank < 1)
    fail(ErrorCode::ValidationError, "free abelian rank must be >= 1");
  GroupOracle g;
  g.kind_ = GroupKind::FreeAbelian;
  g.alphabet_ = letter_alphabet(rank);
  return g;
}

GroupOracle GroupOracle::dihedral(std::optional<int> q) {
  if (q && *q < 2)
    fail(ErrorCode::ValidationError, "dihedral parameter must be >= 2 or inf");
  GroupOracle g;
  g.kind_ = GroupKind::Dihedral;
  g.alphabet_ = letter_alphabet(2);
  g.q_ = q;
  return g;
}

GroupOracle GroupOracle::finite(CayleyTable table, std::vector<int> gens,
                                std::vector<std::string> names) {
  GroupOracle g;
  g.kind_ = GroupKind::FiniteCayley;
  if (gens.empty())
    fail(ErrorCode::ValidationError, "finite oracle needs generators");
  for (int e : gens)
    if (e < 0 || e >= table.order())
      fail(ErrorCode::ValidationError, "generator index out of range");
  if (static_cast<int>(closure(table, gens).size()) != table.order())
    fail(ErrorCode::ValidationError,
         "chosen generators do not generate the table's group");
  if (names.empty())
    for (int e : gens) names.push_back("g" + std::to_string(e));
  if (names.size() != gens.size())
    fail(ErrorCode::ValidationError, "generator name count mismatch");
  g.alphabet_ = Alphabet(std::move(names));
  g.table_ = std::make_shared<CayleyTable>(std::move(table));
  g.table_gens_ = std::move(gens);
  g.build_canonical_table();
  return g;
}

void GroupOracle::build_canonical_table() {
  const CayleyTable& t = *table_;
  canonical_.assign(t.order(), Word());
  std::vector<bool> seen(t.order(), false);
  seen[0] = true;
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop_front();
    for (size_t gi = 0; gi < table_gens_.size(); ++gi) {
      for (int sign : {1, -1}) {
        int g = table_gens_[gi];
        int y = t.mul(x, sign > 0 ? g : t.inv(g));
        if (!seen[y]) {
          seen[y] = true;
          canonical_[y] = canonical_[x] * Word::letter(static_cast<int>(gi), sign);
          frontier.push_back(y);
        }
      }
    }
  }
}

std::optional<long long> GroupOracle::order() const {
  switch (kind_) {
    case GroupKind::FiniteCayley: return table_->order();
    case GroupKind::Dihedral:
      if (q_) return 2ll * *q_;
      return std::nullopt;
    default: return std::nullopt;
  }
}

const CayleyTable& GroupOracle::table() const {
  if (!table_) fail(ErrorCode::Unsupported, "oracle has no Cayley table");
  return *table_;
}

int GroupOracle::eval_element(const Word& w) const {
  const CayleyTable& t = table();
  int x = 0;
  for (const Letter& l : w) {
    if (l.sym < 0 || l.sym >= rank())
      fail(ErrorCode::UnknownSymbol, "letter outside oracle alphabet");
    int g = table_gens_[l.sym];
    x = t.mul(x, l.sign > 0 ? g : t.inv(g));
  }
  return x;
}

Word GroupOracle::element_word(int index) const {
  const CayleyTable& t = table();
  if (index < 0 || index >= t.order())
    fail(ErrorCode::ValidationError, "element index out of range");
  return canonical_[index];
}

long long GroupOracle::element_order(const Word& w) const {
  if (kind_ == GroupKind::FiniteCayley) return table_->element_order(eval_element(w));
  if (kind_ == GroupKind::Dihedral) {
    DihedralNormal d = dihedral_eval(w);
    if (d.flip == 1) return 2;
    if (d.translation == 0) return 1;
    if (!q_) fail(ErrorCode::Unsupported, "infinite element order");
    int q = *q_;
    long long k = ((d.translation % q) + q) % q;
    return q / std::gcd(static_cast<long long>(q), k);
  }
  fail(ErrorCode::Unsupported, "element order only for finite groups");
}

DihedralNormal GroupOracle::dihedral_eval(const Word& w) const {
  long long k = 0;
  int f = 0;
  for (const Letter& l : w) {
    if (l.sym == 0) {  // a, an involution: sign is irrelevant
      f ^= 1;
    } else if (l.sym == 1) {  // b = r^-1 a
      if (f == 0) {
        k -= 1;
        f = 1;
      } else {
        k += 1;
        f = 0;
      }
    } else {
      fail(ErrorCode::UnknownSymbol, "letter outside dihedral alphabet");
    }
  }
  if (q_) k = ((k % *q_) + *q_) % *q_;
  return {k, f};
}

Word GroupOracle::dihedral_word(const DihedralNormal& e) const {
  long long k = e.translation;
  if (q_) k = ((k % *q_) + *q_) % *q_;
  std::vector<Letter> ls;
  if (k >= 0) {
    for (long long i = 0; i < k; ++i) {
      ls.push_back({0, 1});
      ls.push_back({1, 1});
    }
    if (e.flip) ls.push_back({0, 1});
  } else {
    // r^k a^f with k < 0: (ba)^{|k|} a^f, trailing aa collapses
    long long m = -k;
    for (long long i = 0; i < m; ++i) {
      ls.push_back({1, 1});
      ls.push_back({0, 1});
    }
    if (e.flip)
      ls.pop_back();  // ...ba * a = ...b
  }
  Word w;
  for (const Letter& l : ls) w = w * Word::letter(l.sym, l.sign);
  return w;
}

std::vector<long long> GroupOracle::abelian_eval(const Word& w) const {
  std::vector<long long> v(rank(), 0);
  for (const Letter& l : w) {
    if (l.sym < 0 || l.sym >= rank())
      fail(ErrorCode::UnknownSymbol, "letter outside oracle alphabet");
    v[l.sym] += l.sign;
  }
  return v;
}

NormalForm GroupOracle::normal_form(const Word& w) const {
  switch (kind_) {
    case GroupKind::Free: {
      for (const Letter& l : w)
        if (l.sym < 0 || l.sym >= rank())
          fail(ErrorCode::UnknownSymbol, "letter outside oracle alphabet");
      return w;
    }
    case GroupKind::FreeAbelian: return abelian_eval(w);
    case GroupKind::Dihedral: return dihedral_eval(w);
    case GroupKind::FiniteCayley: return eval_element(w);
  }
  fail(ErrorCode::Internal, "bad oracle kind");
}

bool GroupOracle::is_identity(const Word& w) const {
  return normal_form_is_identity(normal_form(w));
}

bool GroupOracle::equal(const Word& a, const Word& b) const {
  return normal_form(a) == normal_form(b);
}

Word GroupOracle::canonical_word(const Word& w) const {
  switch (kind_) {
    case GroupKind::Free: return w;
    case GroupKind::FreeAbelian: {
      auto v = abelian_eval(w);
      Word out;
      for (int i = 0; i < rank(); ++i) out = out * Word::power(i, v[i]);
      return out;
    }
    case GroupKind::Dihedral: return dihedral_word(dihedral_eval(w));
    case GroupKind::FiniteCayley: return canonical_[eval_element(w)];
  }
  fail(ErrorCode::Internal, "bad oracle kind");
}

std::string GroupOracle::normal_form_string(const Word& w) const {
  switch (kind_) {
    case GroupKind::Free: return alphabet_.format(w);
    case GroupKind::FreeAbelian: {
      auto v = abelian_eval(w);
      std::ostringstream os;
      os << '(';
      for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << v[i];
      os << ')';
      return os.str();
    }
    case GroupKind::Dihedral: {
      DihedralNormal d = dihedral_eval(w);
      std::ostringstream os;
      os << "(translation " << d.translation << ", flip " << d.flip << ')';
      return os.str();
    }
    case GroupKind::FiniteCayley:
      return "#" + std::to_string(eval_element(w));
  }
  fail(ErrorCode::Internal, "bad oracle kind");
}

bool GroupOracle::klein_four_quotient_exists() const {
  switch (kind_) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian:
      return rank() >= 2;
    case GroupKind::Dihedral:
      return !q_ || (*q_ % 2 == 0);
    case GroupKind::FiniteCayley: {
      // quotient by the subgroup generated by all squares and commutators is
      // the largest elementary abelian 2-quotient; Klein four sits inside it
      // exactly when its order is at least 4
      const CayleyTable& t = *table_;
      std::vector<int> gens;
      for (int a = 0; a < t.order(); ++a) gens.push_back(t.mul(a, a));
      for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b)
          gens.push_back(
              t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b))));
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      size_t k = closure(t, gens).size();
      return t.order() / static_cast<int>(k) >= 4;
    }
  }
  fail(ErrorCode::Internal, "bad oracle kind");
}

std::vector<Word> GroupOracle::enumerate_elements(int max_len) const {
  std::vector<Word> out;
  if (kind_ == GroupKind::FiniteCayley) {
    // BFS discovery order of the canonical table, identity excluded
    std::vector<int> order_ids;
    for (int i = 1; i < table_->order(); ++i) order_ids.push_back(i);
    std::stable_sort(order_ids.begin(), order_ids.end(), [this](int a, int b) {
      return shortlex_less(canonical_[a], canonical_[b]);
    });
    for (int i : order_ids) out.push_back(canonical_[i]);
    return out;
  }
  std::set<std::string> seen;
  ReducedWordEnumerator en(rank(), max_len);
  while (auto w = en.next()) {
    if (is_identity(*w)) continue;
    std::string key = normal_form_string(*w);
    if (seen.insert(key).second) out.push_back(canonical_word(*w));
  }
  return out;
}

}  // namespace girthlab
