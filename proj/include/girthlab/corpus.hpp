#pragma once

#include <string>
#include <vector>

#include "girthlab/cayley.hpp"

namespace girthlab {

// One bundled finite group: its table plus a canonical generating set.
struct CorpusGroup {
  std::string name;
  CayleyTable table;
  std::vector<int> gens;
};

CayleyTable cyclic_table(int n);
CayleyTable dihedral_table(int q);  // order 2q
CayleyTable symmetric_table(int n); // n <= 4
CayleyTable alternating4_table();
CayleyTable quaternion8_table();
CayleyTable product_table(const CayleyTable& a, const CayleyTable& b);

// SL(2, p) from its generators; used as an independent finite quotient.
CayleyTable sl2_table(int p, std::vector<int>* x_index = nullptr,
                      std::vector<int>* y_index = nullptr);

// All bundled groups of order <= 24: cyclic 2..24, dihedral D2..D12,
// S3, S4, A4, Q8, Z2xZ2, Z2xZ4. Deterministic order.
std::vector<CorpusGroup> bundled_corpus();

// When dir is nonempty, loads <name>.cayley for every bundled group name from
// that directory instead of building tables in-process.
std::vector<CorpusGroup> load_corpus(const std::string& dir);

// Writes every bundled group to <dir>/<name>.cayley.
void write_corpus(const std::string& dir);

uint64_t corpus_fingerprint(const std::vector<CorpusGroup>& corpus);

}  // namespace girthlab
