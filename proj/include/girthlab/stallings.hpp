#pragma once

#include <vector>

#include "girthlab/words.hpp"

namespace girthlab {

// Folded Stallings automaton for a finitely generated subgroup of a free
// group. Each transition carries a word over the subgroup's declared
// generator alphabet; concatenating those labels along an accepting path
// yields an expression of the traced word in the declared generators, for
// redundant generator lists as well as bases.
class StallingsAutomaton {
 public:
  static StallingsAutomaton build(int ambient_rank,
                                  const std::vector<Word>& gens);

  int ambient_rank() const { return ambient_rank_; }
  size_t generator_count() const { return ngens_; }
  int num_states() const { return static_cast<int>(trans_.size()); }
  int num_edges() const { return nedges_; }
  // first Betti number of the folded core graph == free rank of the subgroup
  int rank() const { return nedges_ - num_states() + 1; }

  bool contains(const Word& w) const;
  // Expression of w over the declared generator alphabet; NotMember if the
  // automaton rejects w. Soundness: substituting the generators back and
  // freely reducing reproduces w.
  Word express(const Word& w) const;

  // every (state, signed letter) transition defined <=> finite index,
  // in which case the index equals num_states()
  bool complete() const;
  // accepts exactly the whole ambient free group
  bool is_whole_group() const;
  // same subgroup of the same ambient free group; folded core automata are
  // canonical, so this is a rooted labeled-graph isomorphism walk
  bool same_subgroup(const StallingsAutomaton& other) const;

 private:
  struct Dart {
    int target = -1;
    Word label;
  };
  const Dart* dart(int state, int sym, int sign) const;

  int ambient_rank_ = 0;
  size_t ngens_ = 0;
  int nedges_ = 0;
  int base_ = 0;
  std::vector<std::vector<Dart>> trans_;
};

}  // namespace girthlab
