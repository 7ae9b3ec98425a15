#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "girthlab/oracles.hpp"
#include "girthlab/stallings.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

// Finitely generated subgroup of a base group, with membership and witness
// expressions over the declared generators. Implementations exist per
// GroupKind; construct through make_subgroup.
class Subgroup {
 public:
  virtual ~Subgroup() = default;

  const GroupOracle& ambient() const { return ambient_; }
  const std::vector<Word>& declared_gens() const { return gens_; }
  // names g1..gk for formatting expressions
  const Alphabet& sub_alphabet() const { return sub_alphabet_; }

  virtual bool member(const Word& w) const = 0;
  // Expression of w's element over the declared generators (NotMember if
  // outside). Substituting generators back reproduces w's element.
  virtual Word express(const Word& w) const = 0;
  virtual std::optional<long long> index() const = 0;  // nullopt = infinite
  bool is_proper() const;

 protected:
  Subgroup(GroupOracle ambient, std::vector<Word> gens);

  GroupOracle ambient_;
  std::vector<Word> gens_;
  Alphabet sub_alphabet_;
};

std::unique_ptr<Subgroup> make_subgroup(const GroupOracle& ambient,
                                        std::vector<Word> gens);

// Subgroup of the infinite dihedral group generated by the images of
// a(ba)^m and b(ab)^n; also meaningful in finite dihedral quotients.
std::unique_ptr<Subgroup> gmn_subgroup(const GroupOracle& ambient, int m,
                                       int n);

// True when every odd-length alternating word over {a, b} up to max_len lies
// in K or in L.
bool odd_words_covered(const Subgroup& K, const Subgroup& L, int max_len);

// Rank of the integer column span.
size_t lattice_rank(std::vector<std::vector<long long>> cols);

}  // namespace girthlab
