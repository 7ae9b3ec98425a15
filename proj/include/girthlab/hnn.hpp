#pragma once

#include <memory>
#include <string>
#include <vector>

#include "girthlab/oracles.hpp"
#include "girthlab/subgroups.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

enum class HnnClass { Proper, SemiProper, Full };

// g0 t^{eps_1} g1 ... t^{eps_n} gn with base words in canonical form.
struct HnnSyllable {
  int eps = 0;  // +1 or -1
  Word g;
  bool operator==(const HnnSyllable&) const = default;
};

struct HnnElement {
  Word head;
  std::vector<HnnSyllable> tail;

  int t_length() const { return static_cast<int>(tail.size()); }
  friend bool operator==(const HnnElement&, const HnnElement&) = default;
};

struct AscendingForm {
  long long p = 0;
  Word g;
  long long q = 0;
};

// HNN extension <base, t | t^-1 a t = phi(a), a in A>. phi is given by images
// of A's declared generators and is validated to land in B and to extend to
// an isomorphism A -> B (exactly for free/lattice/finite kinds, by bounded
// relation checks for dihedral kinds).
class HnnExtension {
 public:
  HnnExtension(GroupOracle base, std::vector<Word> a_gens,
               std::vector<Word> b_gens, std::vector<Word> phi_images,
               std::string stable_name = "t");

  const GroupOracle& base() const { return base_; }
  const Subgroup& A() const { return *A_; }
  const Subgroup& B() const { return *B_; }
  const std::vector<Word>& phi_images() const { return phi_images_; }

  // base alphabet plus the stable letter as the last symbol
  const Alphabet& ext_alphabet() const { return ext_alphabet_; }
  int stable_sym() const { return base_.rank(); }

  HnnClass classify() const;

  Word apply_phi(const Word& g) const;          // g in A, result in B
  Word apply_phi_inverse(const Word& g) const;  // g in phi(A), result in A

  // word over ext_alphabet -> syllable form (unreduced)
  HnnElement to_element(const Word& w) const;
  Word to_word(const HnnElement& e) const;

  HnnElement britton_reduce(const HnnElement& e) const;
  bool is_identity(const HnnElement& e) const;
  bool is_identity(const Word& w) const;

  // t^p g t^-q for ascending extensions (A whole); NotAscending otherwise
  AscendingForm ascending_normal_form(const HnnElement& e) const;
  AscendingForm ascending_normal_form(const Word& w) const;

 private:
  void validate();

  GroupOracle base_;
  std::unique_ptr<Subgroup> A_;
  std::unique_ptr<Subgroup> B_;
  std::unique_ptr<Subgroup> phi_image_;  // subgroup generated by the images
  std::vector<Word> phi_images_;
  Alphabet ext_alphabet_;
};

// Witness generating sets; elements are returned in syllable form and the
// first element is always the bare stable letter.

// {t, t^r s1 t^-2r, t^3r s2 t^-4r, ...}; every s must avoid A and B.
std::vector<HnnElement> build_witness_avoiding(const HnnExtension& h,
                                               const std::vector<Word>& S,
                                               long long r);

// {t, t^-r s1 t^2r, ..., t^-(2n-3)r s_{n-1} t^(2n-2)r, u^r s_n u^-2r} with
// u the last middle element; s_1..s_{n-1} avoid A and B, s_n only avoids B.
std::vector<HnnElement> build_witness_one_sided(const HnnExtension& h,
                                                const std::vector<Word>& S,
                                                long long r);

// {t, t^r a t^-2r, t^-r b t^2r} over a dihedral base with a in A, b in B.
std::vector<HnnElement> build_witness_dihedral(const HnnExtension& h,
                                               long long r);

}  // namespace girthlab
