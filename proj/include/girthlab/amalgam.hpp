#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

enum class AmalgamSide { Left, Right };

struct AmalgamSyllable {
  AmalgamSide side = AmalgamSide::Left;
  Word g;  // over the factor's own alphabet
  bool operator==(const AmalgamSyllable&) const = default;
};

// Product g0 g1 ... gn of factor elements. Normalization keeps syllables
// nontrivial, side-alternating and outside the amalgamated subgroup, which
// makes nontriviality of the whole product decidable by inspection.
struct AmalgamElement {
  std::vector<AmalgamSyllable> syllables;

  static AmalgamElement factor(AmalgamSide side, Word g);
  size_t length() const { return syllables.size(); }
  friend bool operator==(const AmalgamElement&, const AmalgamElement&) = default;
};

// A *_C B given by the two factor oracles, the generators of C inside each
// factor, and the identification c_i -> iso_images[i] of the left copy with
// the right copy. The identification is validated to be an isomorphism onto
// the right copy (exactly for finite factors, by bounded relation checks
// otherwise).
class AmalgamPresentation {
 public:
  AmalgamPresentation(GroupOracle left, GroupOracle right,
                      std::vector<Word> c_left_gens,
                      std::vector<Word> c_right_gens,
                      std::vector<Word> iso_images);

  const GroupOracle& left() const { return left_; }
  const GroupOracle& right() const { return right_; }
  const GroupOracle& factor(AmalgamSide side) const {
    return side == AmalgamSide::Left ? left_ : right_;
  }
  const Subgroup& core_left() const { return *c_left_; }
  const Subgroup& core_right() const { return *c_right_; }
  const std::vector<Word>& iso_images() const { return iso_images_; }

  // C proper on both sides
  bool is_proper() const;

  bool in_core(AmalgamSide side, const Word& g) const;
  // the same element of C written in the opposite factor
  Word transport(AmalgamSide from, const Word& g) const;

  AmalgamElement normalize(const AmalgamElement& e) const;
  AmalgamElement mul(const AmalgamElement& a, const AmalgamElement& b) const;
  AmalgamElement inverse(const AmalgamElement& e) const;
  bool is_identity(const AmalgamElement& e) const;
  std::string format(const AmalgamElement& e) const;

 private:
  void validate();

  GroupOracle left_;
  GroupOracle right_;
  std::unique_ptr<Subgroup> c_left_;
  std::unique_ptr<Subgroup> c_right_;
  std::unique_ptr<Subgroup> iso_image_;  // subgroup of right_ on the images
  std::vector<Word> iso_images_;
};

// True iff "every element outside H squares into H" forces H normal in G;
// vacuously true when the hypothesis fails. G must be finite.
bool check_squares_force_normality(const GroupOracle& g, const Subgroup& h);

// First failed condition for the pair (a1, a2): both outside C, distinct,
// with a1^-1 a2, a2 a1^-1 and the four mutual conjugates all outside C.
std::optional<std::string> separated_pair_violation(const GroupOracle& a,
                                                    const Subgroup& c,
                                                    const Word& a1,
                                                    const Word& a2);

// A pair passing separated_pair_violation; needs index of C in A >= 3.
// Tries (x, x^2) first, then scans pairs of short elements.
std::pair<Word, Word> find_separated_pair(const GroupOracle& a,
                                          const Subgroup& c);

// Deterministic conjugator words over the formal alphabet {X, Y, Z}: pre[i]
// ends with Y, post[j] starts with Y^-1, both have 2p letters and are words
// of length p in XY and ZY, and every signed product pre^e post^d stays
// longer than 3p/2 after free reduction.
struct ConjugatorScheme {
  int p = 0;
  Alphabet formal;
  std::vector<Word> pre;
  std::vector<Word> post;
};
ConjugatorScheme amalgam_conjugator_words(int count, long long r);

// Witness set from factor generating sets S1, S2 disjoint from C with the
// first two elements of S1 a separated pair: the conjugated generators
// pre_k(u,v,w) mid_k post_k(u,v,w) for mid ranging over S1 and over
// a1 s a1 (s in S2), then the two conjugator seeds uv and wv, where
// u = a1 b1 a1^-1, v = a2 b1 a2^-1, w = a1 a2 b1 a2^-1 a1^-1.
std::vector<AmalgamElement> build_amalgam_witness(const AmalgamPresentation& p,
                                                  const std::vector<Word>& s1,
                                                  const std::vector<Word>& s2,
                                                  long long r);

}  // namespace girthlab
