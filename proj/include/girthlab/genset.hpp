#pragma once

#include <optional>
#include <vector>

#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

// How a generating set S meets a pair of subgroups A, B:
//   alpha = |S in A only|, beta = |S in B only|,
//   gamma = |S in both|,  delta = |S outside both|.
struct GensetProfile {
  long long alpha = 0;
  long long beta = 0;
  long long gamma = 0;
  long long delta = 0;

  long long in_union() const { return alpha + beta + gamma; }
  friend bool operator==(const GensetProfile&, const GensetProfile&) = default;
};

// Counts each element of s against membership in a and b. Elements must be
// pairwise distinct in g (DuplicateElement otherwise).
GensetProfile profile(const GroupOracle& g, const Subgroup& a,
                      const Subgroup& b, const std::vector<Word>& s);

struct MoveResult {
  std::vector<Word> genset;
  bool escaped;  // the product landed outside both subgroups
};

// Replace s1 by s1*s2 in s. Requires s1 in A only, s2 in B only, both
// elements of s. Generation is preserved: s1 = (s1*s2)*s2^-1.
MoveResult product_move(const GroupOracle& g, const Subgroup& a,
                        const Subgroup& b, const std::vector<Word>& s,
                        const Word& s1, const Word& s2);

// Generating set disjoint from A and B, or nullopt when the complement of
// A and B fails to generate. In the nullopt case G surjects onto the
// Klein four-group (checked; Internal if the dichotomy breaks).
// Finite G only; A and B must be proper.
std::optional<std::vector<Word>> find_avoiding_genset(const GroupOracle& g,
                                                      const Subgroup& a,
                                                      const Subgroup& b);

// Generating set with at most one element inside A union B (so in
// particular min(alpha, beta) = 0). Finite G: avoiding search first, then
// a bounded sequence of product moves. Infinite G: supported for the
// dihedral and rank-2 free abelian oracles via a bounded word search.
std::vector<Word> find_nearly_avoiding_genset(const GroupOracle& g,
                                              const Subgroup& a,
                                              const Subgroup& b);

// True when every pair of proper subgroups admits an avoiding generating
// set, equivalently when G has no Klein four-group quotient.
bool has_avoidance_property(const GroupOracle& g);

}  // namespace girthlab
