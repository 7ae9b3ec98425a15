#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "girthlab/errors.hpp"

namespace girthlab {

// Finite group as a multiplication table. Element 0 is the identity.
// Files: first line the order n, then n rows of n space-separated 0-based
// indices. Tables of order <= 128 are associativity-checked on load.
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(std::vector<std::vector<int>> rows);

  int order() const { return n_; }
  int mul(int a, int b) const { return rows_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const;

  static CayleyTable load(const std::string& path);
  void save(const std::string& path) const;
  static CayleyTable parse_text(const std::string& text);

  uint64_t fingerprint() const;  // FNV-1a over the row data

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  void validate();
  int n_ = 0;
  std::vector<std::vector<int>> rows_;
  std::vector<int> inv_;
};

// Closure of a generator set inside the table, sorted element indices.
std::vector<int> closure(const CayleyTable& t, const std::vector<int>& gens);

// Every subgroup of the table's group, each as sorted element indices,
// deterministic order. Meant for small orders (corpus scale).
std::vector<std::vector<int>> all_subgroups(const CayleyTable& t);

}  // namespace girthlab
