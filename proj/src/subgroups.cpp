#include "girthlab/subgroups.hpp"

#include <algorithm>
#include <cstdlib>

#include "girthlab/errors.hpp"

namespace girthlab {

Subgroup::Subgroup(GroupOracle ambient, std::vector<Word> gens)
    : ambient_(std::move(ambient)), gens_(std::move(gens)) {
  for (const Word& g : gens_)
    for (const Letter& l : g.letters())
      if (l.sym < 0 || l.sym >= ambient_.rank())
        fail(ErrorCode::UnknownSymbol,
             "subgroup generator uses a symbol outside the base alphabet");
  std::vector<std::string> names;
  for (size_t i = 0; i < gens_.size(); ++i)
    names.push_back("g" + std::to_string(i + 1));
  sub_alphabet_ = Alphabet(std::move(names));
}

bool Subgroup::is_proper() const {
  auto ix = index();
  return !(ix && *ix == 1);
}

namespace {

class FreeSubgroup final : public Subgroup {
 public:
  FreeSubgroup(GroupOracle ambient, std::vector<Word> gens)
      : Subgroup(std::move(ambient), std::move(gens)),
        aut_(StallingsAutomaton::build(ambient_.rank(), gens_)) {}

  bool member(const Word& w) const override { return aut_.contains(w); }
  Word express(const Word& w) const override { return aut_.express(w); }
  std::optional<long long> index() const override {
    if (aut_.complete()) return aut_.num_states();
    return std::nullopt;
  }

 private:
  StallingsAutomaton aut_;
};

// Column echelon form over the integers with tracked expressions: column t of
// basis_ equals the image of expr_[t] in the ambient lattice, so solving a
// membership query also yields a generator expression.
class LatticeSubgroup final : public Subgroup {
 public:
  LatticeSubgroup(GroupOracle ambient, std::vector<Word> gens)
      : Subgroup(std::move(ambient), std::move(gens)) {
    int n = ambient_.rank();
    std::vector<std::vector<long long>> cols, exprs;
    for (size_t i = 0; i < gens_.size(); ++i) {
      cols.push_back(ambient_.abelian_eval(gens_[i]));
      std::vector<long long> e(gens_.size(), 0);
      e[i] = 1;
      exprs.push_back(std::move(e));
    }
    size_t npiv = 0;
    for (int row = 0; row < n && npiv < cols.size(); ++row) {
      // Euclid across the not-yet-pivoted columns until one nonzero remains
      // in this row; every step is a unimodular column operation.
      while (true) {
        size_t best = npiv;
        int live = 0;
        for (size_t c = npiv; c < cols.size(); ++c)
          if (cols[c][static_cast<size_t>(row)] != 0) {
            ++live;
            if (cols[best][static_cast<size_t>(row)] == 0 ||
                std::llabs(cols[c][static_cast<size_t>(row)]) <
                    std::llabs(cols[best][static_cast<size_t>(row)]))
              best = c;
          }
        if (live == 0) break;
        if (live == 1) {
          std::swap(cols[npiv], cols[best]);
          std::swap(exprs[npiv], exprs[best]);
          if (cols[npiv][static_cast<size_t>(row)] < 0) {
            for (auto& x : cols[npiv]) x = -x;
            for (auto& x : exprs[npiv]) x = -x;
          }
          pivot_row_.push_back(row);
          ++npiv;
          break;
        }
        long long p = cols[best][static_cast<size_t>(row)];
        for (size_t c = npiv; c < cols.size(); ++c) {
          if (c == best || cols[c][static_cast<size_t>(row)] == 0) continue;
          long long q = cols[c][static_cast<size_t>(row)] / p;
          for (int r = 0; r < n; ++r)
            cols[c][static_cast<size_t>(r)] -= q * cols[best][static_cast<size_t>(r)];
          for (size_t g = 0; g < gens_.size(); ++g)
            exprs[c][g] -= q * exprs[best][g];
        }
      }
    }
    cols.resize(npiv);
    exprs.resize(npiv);
    basis_ = std::move(cols);
    expr_ = std::move(exprs);
  }

  bool member(const Word& w) const override { return solve(w) != nullptr; }

  Word express(const Word& w) const override {
    auto coeffs = solve(w);
    if (!coeffs) fail(ErrorCode::NotMember, "element is not in the subgroup");
    std::vector<long long> e(gens_.size(), 0);
    for (size_t t = 0; t < basis_.size(); ++t)
      for (size_t g = 0; g < gens_.size(); ++g)
        e[g] += (*coeffs)[t] * expr_[t][g];
    Word out;
    for (size_t g = 0; g < gens_.size(); ++g)
      if (e[g] != 0) out = out * Word::power(static_cast<int>(g), e[g]);
    return out;
  }

  std::optional<long long> index() const override {
    if (static_cast<int>(basis_.size()) != ambient_.rank()) return std::nullopt;
    long long det = 1;
    for (size_t t = 0; t < basis_.size(); ++t)
      det *= basis_[t][static_cast<size_t>(pivot_row_[t])];
    return det;
  }

 private:
  // pivot-order forward substitution; null when not solvable over Z
  std::unique_ptr<std::vector<long long>> solve(const Word& w) const {
    std::vector<long long> v = ambient_.abelian_eval(w);
    auto coeffs = std::make_unique<std::vector<long long>>(basis_.size(), 0);
    for (size_t t = 0; t < basis_.size(); ++t) {
      size_t p = static_cast<size_t>(pivot_row_[t]);
      long long piv = basis_[t][p];
      if (v[p] % piv != 0) return nullptr;
      long long q = v[p] / piv;
      (*coeffs)[t] = q;
      for (size_t r = 0; r < v.size(); ++r) v[r] -= q * basis_[t][r];
    }
    for (long long x : v)
      if (x != 0) return nullptr;
    return coeffs;
  }

  std::vector<std::vector<long long>> basis_;  // column per pivot
  std::vector<std::vector<long long>> expr_;   // same columns over gens
  std::vector<int> pivot_row_;
};

// Translations form dZ (taken together with q in the finite case) and
// reflection offsets form ref_offset + dZ; the extended gcd keeps a witness
// word alongside each value so express is constructive.
class DihedralSubgroup final : public Subgroup {
 public:
  DihedralSubgroup(GroupOracle ambient, std::vector<Word> gens)
      : Subgroup(std::move(ambient), std::move(gens)) {
    std::vector<std::pair<long long, Word>> pairs;
    std::optional<std::pair<long long, Word>> ref;
    for (size_t i = 0; i < gens_.size(); ++i) {
      DihedralNormal nf = ambient_.dihedral_eval(gens_[i]);
      Word gi = Word::letter(static_cast<int>(i), +1);
      if (nf.flip == 0) {
        if (nf.translation != 0) pairs.emplace_back(nf.translation, gi);
      } else if (!ref) {
        ref = {nf.translation, gi};
      } else {
        // product of two reflections is the translation by the offset gap
        pairs.emplace_back(nf.translation - ref->first, gi * ref->second);
      }
    }
    if (auto q = ambient_.dihedral_q()) pairs.emplace_back(*q, Word());
    long long d = 0;
    Word wd;
    for (auto [v, wv] : pairs) {
      while (v != 0) {
        long long quo = d / v;
        Word next_w = wd * wv.pow(-quo);
        long long next_v = d - quo * v;
        wd = std::move(wv);
        d = v;
        wv = std::move(next_w);
        v = next_v;
      }
    }
    if (d < 0) {
      d = -d;
      wd = wd.inverse();
    }
    d_ = d;
    d_word_ = std::move(wd);
    if (ref) {
      has_ref_ = true;
      ref_offset_ = ref->first;
      ref_word_ = ref->second;
    }
  }

  bool member(const Word& w) const override {
    DihedralNormal nf = ambient_.dihedral_eval(w);
    long long k = nf.translation - (nf.flip ? ref_offset_ : 0);
    if (nf.flip && !has_ref_) return false;
    return d_ ? k % d_ == 0 : k == 0;
  }

  Word express(const Word& w) const override {
    if (!member(w)) fail(ErrorCode::NotMember, "element is not in the subgroup");
    DihedralNormal nf = ambient_.dihedral_eval(w);
    long long k = nf.translation - (nf.flip ? ref_offset_ : 0);
    Word out = d_ ? d_word_.pow(k / d_) : Word();
    if (nf.flip) out = out * ref_word_;
    return out;
  }

  std::optional<long long> index() const override {
    if (d_ == 0) return std::nullopt;  // trivial or order-2, always infinite
    return has_ref_ ? d_ : 2 * d_;
  }

 private:
  long long d_ = 0;
  bool has_ref_ = false;
  long long ref_offset_ = 0;
  Word d_word_;
  Word ref_word_;
};

class FiniteSubgroup final : public Subgroup {
 public:
  FiniteSubgroup(GroupOracle ambient, std::vector<Word> gens)
      : Subgroup(std::move(ambient), std::move(gens)) {
    const CayleyTable& t = ambient_.table();
    witness_.assign(static_cast<size_t>(t.order()), std::nullopt);
    witness_[0] = Word();
    std::vector<int> queue{0};
    std::vector<int> gen_elems;
    for (const Word& g : gens_) gen_elems.push_back(ambient_.eval_element(g));
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int cur = queue[qi];
      for (size_t i = 0; i < gen_elems.size(); ++i) {
        for (int sign : {+1, -1}) {
          int ge = sign > 0 ? gen_elems[i] : t.inv(gen_elems[i]);
          int nxt = t.mul(cur, ge);
          if (witness_[static_cast<size_t>(nxt)]) continue;
          witness_[static_cast<size_t>(nxt)] =
              *witness_[static_cast<size_t>(cur)] *
              Word::letter(static_cast<int>(i), sign);
          queue.push_back(nxt);
        }
      }
    }
    size_ = static_cast<long long>(queue.size());
  }

  bool member(const Word& w) const override {
    return witness_[static_cast<size_t>(ambient_.eval_element(w))].has_value();
  }

  Word express(const Word& w) const override {
    const auto& wit = witness_[static_cast<size_t>(ambient_.eval_element(w))];
    if (!wit) fail(ErrorCode::NotMember, "element is not in the subgroup");
    return *wit;
  }

  std::optional<long long> index() const override {
    return ambient_.table().order() / size_;
  }

 private:
  std::vector<std::optional<Word>> witness_;
  long long size_ = 0;
};

}  // namespace

std::unique_ptr<Subgroup> make_subgroup(const GroupOracle& ambient,
                                        std::vector<Word> gens) {
  switch (ambient.kind()) {
    case GroupKind::Free:
      return std::make_unique<FreeSubgroup>(ambient, std::move(gens));
    case GroupKind::FreeAbelian:
      return std::make_unique<LatticeSubgroup>(ambient, std::move(gens));
    case GroupKind::Dihedral:
      return std::make_unique<DihedralSubgroup>(ambient, std::move(gens));
    case GroupKind::FiniteCayley:
      return std::make_unique<FiniteSubgroup>(ambient, std::move(gens));
  }
  fail(ErrorCode::Internal, "unhandled group kind");
}

std::unique_ptr<Subgroup> gmn_subgroup(const GroupOracle& ambient, int m,
                                       int n) {
  if (ambient.kind() != GroupKind::Dihedral)
    fail(ErrorCode::ValidationError, "gmn subgroups live in dihedral groups");
  if (m < 0 || n < 0)
    fail(ErrorCode::ValidationError, "gmn subgroup parameters must be nonnegative");
  Word a = Word::letter(0, +1), b = Word::letter(1, +1);
  Word u = a * (b * a).pow(m);
  Word v = b * (a * b).pow(n);
  return make_subgroup(ambient, {u, v});
}

bool odd_words_covered(const Subgroup& K, const Subgroup& L, int max_len) {
  for (int len = 1; len <= max_len; len += 2) {
    for (int first : {0, 1}) {
      Word w;
      for (int i = 0; i < len; ++i)
        w = w * Word::letter((first + i) % 2, +1);
      if (!K.member(w) && !L.member(w)) return false;
    }
  }
  return true;
}

size_t lattice_rank(std::vector<std::vector<long long>> cols) {
  if (cols.empty()) return 0;
  size_t nrows = cols[0].size(), rank = 0;
  for (size_t row = 0; row < nrows && rank < cols.size(); ++row) {
    while (true) {
      size_t best = cols.size();
      int live = 0;
      for (size_t c = rank; c < cols.size(); ++c)
        if (cols[c][row] != 0) {
          ++live;
          if (best == cols.size() ||
              std::llabs(cols[c][row]) < std::llabs(cols[best][row]))
            best = c;
        }
      if (live == 0) break;
      if (live == 1) {
        std::swap(cols[rank], cols[best]);
        ++rank;
        break;
      }
      for (size_t c = rank; c < cols.size(); ++c) {
        if (c == best || cols[c][row] == 0) continue;
        long long q = cols[c][row] / cols[best][row];
        for (size_t r = 0; r < nrows; ++r) cols[c][r] -= q * cols[best][r];
      }
    }
  }
  return rank;
}

}  // namespace girthlab
