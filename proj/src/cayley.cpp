#include "girthlab/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace girthlab {

CayleyTable::CayleyTable(std::vector<std::vector<int>> rows)
    : n_(static_cast<int>(rows.size())), rows_(std::move(rows)) {
  validate();
}

void CayleyTable::validate() {
  if (n_ == 0) fail(ErrorCode::ValidationError, "empty Cayley table");
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n_)
      fail(ErrorCode::ValidationError, "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n_)
        fail(ErrorCode::ValidationError, "Cayley table entry out of range");
  }
  for (int i = 0; i < n_; ++i) {
    if (rows_[0][i] != i || rows_[i][0] != i)
      fail(ErrorCode::ValidationError, "element 0 is not an identity");
  }
  inv_.assign(n_, -1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (rows_[i][j] == 0) {
        if (rows_[j][i] != 0)
          fail(ErrorCode::ValidationError, "one-sided inverse in table");
        inv_[i] = j;
      }
    }
    if (inv_[i] < 0)
      fail(ErrorCode::ValidationError, "element without inverse");
  }
  if (n_ <= 128) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (rows_[rows_[a][b]][c] != rows_[a][rows_[b][c]])
            fail(ErrorCode::ValidationError, "table is not associative");
  }
}

int CayleyTable::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
    if (k > n_) fail(ErrorCode::Internal, "element order exceeds group order");
  }
  return k;
}

CayleyTable CayleyTable::parse_text(const std::string& text) {
  std::istringstream is(text);
  long long n = 0;
  if (!(is >> n) || n <= 0 || n > 100000)
    fail(ErrorCode::ValidationError, "bad order line in Cayley file");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      if (!(is >> rows[i][j]))
        fail(ErrorCode::ValidationError, "truncated Cayley file");
  return CayleyTable(std::move(rows));
}

CayleyTable CayleyTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::CorpusMissing, "cannot open Cayley file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

void CayleyTable::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) fail(ErrorCode::ValidationError, "cannot write Cayley file " + path);
  f << n_ << '\n';
  for (const auto& row : rows_) {
    for (int j = 0; j < n_; ++j) f << row[j] << (j + 1 == n_ ? '\n' : ' ');
  }
}

uint64_t CayleyTable::fingerprint() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(n_));
  for (const auto& row : rows_)
    for (int v : row) mix(static_cast<uint64_t>(v));
  return h;
}

std::vector<int> closure(const CayleyTable& t, const std::vector<int>& gens) {
  std::vector<bool> in(t.order(), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int g : gens) {
      for (int y : {t.mul(x, g), t.mul(x, t.inv(g))}) {
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < t.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> all_subgroups(const CayleyTable& t) {
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> queue;
  std::vector<int> triv{0};
  known.insert(triv);
  queue.push_back(triv);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> h = queue[qi];
    for (int g = 1; g < t.order(); ++g) {
      if (std::binary_search(h.begin(), h.end(), g)) continue;
      std::vector<int> gens = h;
      gens.push_back(g);
      std::vector<int> bigger = closure(t, gens);
      if (known.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return std::vector<std::vector<int>>(known.begin(), known.end());
}

}  // namespace girthlab
