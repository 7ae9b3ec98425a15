#pragma once

#include <memory>
#include <optional>
#include <variant>

#include "girthlab/cayley.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

enum class GroupKind { Free, FreeAbelian, Dihedral, FiniteCayley };

// r^translation a^flip with r = ab; translation is taken mod q when finite.
struct DihedralNormal {
  long long translation = 0;
  int flip = 0;
  friend bool operator==(const DihedralNormal&, const DihedralNormal&) = default;
};

// Canonical element representation; the active alternative matches the kind.
using NormalForm =
    std::variant<Word, std::vector<long long>, DihedralNormal, int>;

bool normal_form_is_identity(const NormalForm& nf);

// Decides the word problem for one base group. Immutable after construction.
class GroupOracle {
 public:
  static GroupOracle free_group(int rank);
  static GroupOracle free_abelian(int rank);
  static GroupOracle dihedral(std::optional<int> q);  // nullopt = infinite
  static GroupOracle finite(CayleyTable table, std::vector<int> gens,
                            std::vector<std::string> names = {});

  GroupKind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int rank() const { return alphabet_.size(); }
  std::optional<int> dihedral_q() const { return q_; }
  std::optional<long long> order() const;

  bool is_identity(const Word& w) const;
  NormalForm normal_form(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  // Unique word representative of w's element.
  Word canonical_word(const Word& w) const;
  std::string normal_form_string(const Word& w) const;

  bool klein_four_quotient_exists() const;

  // FiniteCayley access
  const CayleyTable& table() const;
  const std::vector<int>& table_gens() const { return table_gens_; }
  int eval_element(const Word& w) const;       // finite kinds only
  Word element_word(int index) const;          // shortest canonical word
  long long element_order(const Word& w) const;  // finite groups only

  DihedralNormal dihedral_eval(const Word& w) const;
  Word dihedral_word(const DihedralNormal& e) const;

  std::vector<long long> abelian_eval(const Word& w) const;

  // Canonical words of distinct nontrivial elements reachable by words of
  // length <= max_len, deterministic order. Finite kinds list every element.
  std::vector<Word> enumerate_elements(int max_len) const;

 private:
  GroupOracle() = default;
  void build_canonical_table();

  GroupKind kind_ = GroupKind::Free;
  Alphabet alphabet_;
  std::optional<int> q_;
  std::shared_ptr<const CayleyTable> table_;
  std::vector<int> table_gens_;
  std::vector<Word> canonical_;  // per element, finite kind
};

}  // namespace girthlab
