#include "girthlab/stallings.hpp"

#include <algorithm>
#include <numeric>

#include "girthlab/errors.hpp"

namespace girthlab {

namespace {

struct BuildEdge {
  int src = 0;
  int dst = 0;
  int sym = 0;  // positive orientation: src --sym--> dst
  Word label;   // eval(label) = theta(src) * sym * theta(dst)^-1
  bool alive = true;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // absorbs `gone` into `keep`
  void unite(int keep, int gone) { parent[gone] = keep; }
};

// dart = directed view of an edge leaving `state`
struct DartView {
  size_t edge;
  int code;     // sym*2 + (sign<0)
  int target;
  bool forward; // true if the edge is stored in this direction
};

}  // namespace

StallingsAutomaton StallingsAutomaton::build(int ambient_rank,
                                             const std::vector<Word>& gens) {
  if (ambient_rank <= 0) fail(ErrorCode::ValidationError, "ambient rank must be positive");
  for (const Word& g : gens) {
    if (g.empty())
      fail(ErrorCode::IdentityGenerator, "subgroup generator words must be nonempty");
    for (const Letter& l : g.letters())
      if (l.sym < 0 || l.sym >= ambient_rank)
        fail(ErrorCode::UnknownSymbol, "generator word uses a symbol outside the ambient alphabet");
  }

  // Bouquet of petals around the base state. State j on petal i represents
  // the length-j prefix of gens[i]; labels stay empty except on the petal's
  // last dart, which closes the loop and contributes one subgroup letter.
  int nstates = 1;
  std::vector<BuildEdge> edges;
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& ls = gens[i].letters();
    int prev = 0;
    for (size_t j = 0; j < ls.size(); ++j) {
      int next = (j + 1 == ls.size()) ? 0 : nstates++;
      Word dart_label = (j + 1 == ls.size())
                            ? Word::letter(static_cast<int>(i), +1)
                            : Word();
      BuildEdge e;
      e.sym = ls[j].sym;
      if (ls[j].sign > 0) {
        e.src = prev;
        e.dst = next;
        e.label = dart_label;
      } else {
        e.src = next;
        e.dst = prev;
        e.label = dart_label.inverse();
      }
      edges.push_back(std::move(e));
      prev = next;
    }
  }

  UnionFind uf(static_cast<size_t>(nstates));

  // Fold until deterministic. Merging q2 into q1 conjugates the labels of
  // darts at q2 by delta = l1^-1 l2 so that theta(q2) := theta(q1) keeps the
  // label invariant intact; each round removes one edge, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<DartView>> at(static_cast<size_t>(nstates));
    for (size_t ei = 0; ei < edges.size(); ++ei) {
      if (!edges[ei].alive) continue;
      int s = uf.find(edges[ei].src);
      int d = uf.find(edges[ei].dst);
      at[static_cast<size_t>(s)].push_back({ei, edges[ei].sym * 2, d, true});
      at[static_cast<size_t>(d)].push_back({ei, edges[ei].sym * 2 + 1, s, false});
    }
    for (int p = 0; p < nstates && !changed; ++p) {
      if (uf.find(p) != p) continue;
      auto& ds = at[static_cast<size_t>(p)];
      std::sort(ds.begin(), ds.end(),
                [](const DartView& a, const DartView& b) { return a.code < b.code; });
      for (size_t k = 0; k + 1 < ds.size(); ++k) {
        if (ds[k].code != ds[k + 1].code) continue;
        DartView d1 = ds[k], d2 = ds[k + 1];
        Word l1 = d1.forward ? edges[d1.edge].label : edges[d1.edge].label.inverse();
        Word l2 = d2.forward ? edges[d2.edge].label : edges[d2.edge].label.inverse();
        if (d1.target == d2.target) {
          // parallel duplicate: drop one edge, keep the first label
          edges[d2.edge].alive = false;
        } else {
          int keep = d1.target, gone = d2.target;
          if (gone == uf.find(0)) {  // never rename the base state
            std::swap(keep, gone);
            std::swap(l1, l2);
            std::swap(d1, d2);
          }
          Word delta = l1.inverse() * l2;
          edges[d2.edge].alive = false;
          for (auto& g : edges) {
            if (!g.alive) continue;
            bool out = uf.find(g.src) == gone;
            bool in = uf.find(g.dst) == gone;
            if (out && in)
              g.label = delta * g.label * delta.inverse();
            else if (out)
              g.label = delta * g.label;
            else if (in)
              g.label = g.label * delta.inverse();
          }
          uf.unite(keep, gone);
        }
        changed = true;
        break;
      }
    }
  }

  // compact live classes; base first
  std::vector<int> remap(static_cast<size_t>(nstates), -1);
  remap[static_cast<size_t>(uf.find(0))] = 0;
  int live = 1;
  for (int s = 0; s < nstates; ++s) {
    int r = uf.find(s);
    if (remap[static_cast<size_t>(r)] < 0) remap[static_cast<size_t>(r)] = live++;
  }

  StallingsAutomaton a;
  a.ambient_rank_ = ambient_rank;
  a.ngens_ = gens.size();
  a.base_ = 0;
  a.trans_.assign(static_cast<size_t>(live),
                  std::vector<Dart>(static_cast<size_t>(ambient_rank) * 2));
  int nedges = 0;
  for (const auto& e : edges) {
    if (!e.alive) continue;
    ++nedges;
    int s = remap[static_cast<size_t>(uf.find(e.src))];
    int d = remap[static_cast<size_t>(uf.find(e.dst))];
    Dart& fwd = a.trans_[static_cast<size_t>(s)][static_cast<size_t>(e.sym * 2)];
    Dart& bwd = a.trans_[static_cast<size_t>(d)][static_cast<size_t>(e.sym * 2 + 1)];
    if (fwd.target >= 0 || bwd.target >= 0)
      fail(ErrorCode::Internal, "folding left a nondeterministic transition");
    fwd.target = d;
    fwd.label = e.label;
    bwd.target = s;
    bwd.label = e.label.inverse();
  }
  a.nedges_ = nedges;
  return a;
}

const StallingsAutomaton::Dart* StallingsAutomaton::dart(int state, int sym,
                                                         int sign) const {
  if (sym < 0 || sym >= ambient_rank_)
    fail(ErrorCode::UnknownSymbol, "symbol outside the ambient alphabet");
  const Dart& d = trans_[static_cast<size_t>(state)]
                        [static_cast<size_t>(sym * 2 + (sign < 0))];
  return d.target >= 0 ? &d : nullptr;
}

bool StallingsAutomaton::contains(const Word& w) const {
  int state = base_;
  for (const Letter& l : w.letters()) {
    const Dart* d = dart(state, l.sym, l.sign);
    if (!d) return false;
    state = d->target;
  }
  return state == base_;
}

Word StallingsAutomaton::express(const Word& w) const {
  int state = base_;
  Word out;
  for (const Letter& l : w.letters()) {
    const Dart* d = dart(state, l.sym, l.sign);
    if (!d) fail(ErrorCode::NotMember, "word is not in the subgroup");
    out = out * d->label;
    state = d->target;
  }
  if (state != base_) fail(ErrorCode::NotMember, "word is not in the subgroup");
  return out;
}

bool StallingsAutomaton::complete() const {
  for (const auto& row : trans_)
    for (const auto& d : row)
      if (d.target < 0) return false;
  return true;
}

bool StallingsAutomaton::is_whole_group() const {
  return num_states() == 1 && complete();
}

bool StallingsAutomaton::same_subgroup(const StallingsAutomaton& other) const {
  if (ambient_rank_ != other.ambient_rank_) return false;
  if (num_states() != other.num_states() || nedges_ != other.nedges_)
    return false;
  std::vector<int> pair_of(trans_.size(), -1);
  std::vector<int> seen_other(other.trans_.size(), 0);
  pair_of[static_cast<size_t>(base_)] = other.base_;
  seen_other[static_cast<size_t>(other.base_)] = 1;
  std::vector<int> queue{base_};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int s = queue[qi];
    int t = pair_of[static_cast<size_t>(s)];
    for (size_t c = 0; c < trans_[static_cast<size_t>(s)].size(); ++c) {
      const Dart& da = trans_[static_cast<size_t>(s)][c];
      const Dart& db = other.trans_[static_cast<size_t>(t)][c];
      if ((da.target < 0) != (db.target < 0)) return false;
      if (da.target < 0) continue;
      int& p = pair_of[static_cast<size_t>(da.target)];
      if (p < 0) {
        if (seen_other[static_cast<size_t>(db.target)]) return false;
        p = db.target;
        seen_other[static_cast<size_t>(db.target)] = 1;
        queue.push_back(da.target);
      } else if (p != db.target) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace girthlab
