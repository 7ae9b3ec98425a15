#include "girthlab/corpus.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <numeric>

namespace girthlab {

CayleyTable cyclic_table(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return CayleyTable(std::move(rows));
}

// Elements (k, f) = r^k a^f with index k + q*f; r the rotation, a, b = r^-1 a
// the standard reflections.
CayleyTable dihedral_table(int q) {
  int n = 2 * q;
  auto idx = [q](int k, int f) { return ((k % q) + q) % q + q * f; };
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int k1 = 0; k1 < q; ++k1)
    for (int f1 = 0; f1 < 2; ++f1)
      for (int k2 = 0; k2 < q; ++k2)
        for (int f2 = 0; f2 < 2; ++f2)
          rows[idx(k1, f1)][idx(k2, f2)] =
              idx(f1 ? k1 - k2 : k1 + k2, f1 ^ f2);
  return CayleyTable(std::move(rows));
}

namespace {

std::vector<std::vector<int>> perms_of(int n, bool even_only) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CayleyTable perm_table(const std::vector<std::vector<int>>& elems) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(elems[i].size());
      // (p * q)(x) = p(q(x)); evaluation order is fixed once and for all
      for (size_t x = 0; x < c.size(); ++x) c[x] = elems[i][elems[j][x]];
      rows[i][j] = index.at(c);
    }
  }
  return CayleyTable(std::move(rows));
}

int perm_index(const std::vector<std::vector<int>>& elems,
               const std::vector<int>& p) {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == p) return static_cast<int>(i);
  fail(ErrorCode::Internal, "permutation not in element list");
}

}  // namespace

CayleyTable symmetric_table(int n) {
  if (n < 2 || n > 4)
    fail(ErrorCode::ValidationError, "symmetric_table supports n in [2,4]");
  return perm_table(perms_of(n, false));
}

CayleyTable alternating4_table() { return perm_table(perms_of(4, true)); }

CayleyTable quaternion8_table() {
  // elements 1,-1,i,-i,j,-j,k,-k as (unit, sign), index = 2*unit + (sign<0)
  auto idx = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  auto unit_mul = [](int u, int v, int& sign) -> int {
    if (u == 0) return v;
    if (v == 0) return u;
    if (u == v) {
      sign = -sign;
      return 0;
    }
    // i=1, j=2, k=3: cyclic products
    static const int prod[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int psign[4][4] = {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
    sign *= psign[u][v];
    return prod[u][v];
  };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int u1 = 0; u1 < 4; ++u1)
    for (int s1 : {1, -1})
      for (int u2 = 0; u2 < 4; ++u2)
        for (int s2 : {1, -1}) {
          int sign = s1 * s2;
          int unit = unit_mul(u1, u2, sign);
          rows[idx(u1, s1)][idx(u2, s2)] = idx(unit, sign);
        }
  return CayleyTable(std::move(rows));
}

CayleyTable product_table(const CayleyTable& a, const CayleyTable& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2)
      for (int j1 = 0; j1 < na; ++j1)
        for (int j2 = 0; j2 < nb; ++j2)
          rows[i1 * nb + i2][j1 * nb + j2] = a.mul(i1, j1) * nb + b.mul(i2, j2);
  return CayleyTable(std::move(rows));
}

CayleyTable sl2_table(int p, std::vector<int>* x_index,
                      std::vector<int>* y_index) {
  using Mat = std::array<int, 4>;
  auto mul = [p](const Mat& m, const Mat& n) -> Mat {
    return {(m[0] * n[0] + m[1] * n[2]) % p, (m[0] * n[1] + m[1] * n[3]) % p,
            (m[2] * n[0] + m[3] * n[2]) % p, (m[2] * n[1] + m[3] * n[3]) % p};
  };
  Mat id{1, 0, 0, 1};
  Mat s{0, p - 1, 1, 0};           // [[0,-1],[1,0]], order 4
  Mat st{0, p - 1, 1, 1};          // [[0,-1],[1,1]], order 6
  std::map<Mat, int> index;
  std::vector<Mat> elems{id};
  index[id] = 0;
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const Mat& g : {s, st}) {
      Mat h = mul(elems[qi], g);
      if (!index.count(h)) {
        index[h] = static_cast<int>(elems.size());
        elems.push_back(h);
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = index.at(mul(elems[i], elems[j]));
  if (x_index) *x_index = {index.at(s)};
  if (y_index) *y_index = {index.at(st)};
  return CayleyTable(std::move(rows));
}

std::vector<CorpusGroup> bundled_corpus() {
  std::vector<CorpusGroup> out;
  for (int n = 2; n <= 24; ++n)
    out.push_back({"Z" + std::to_string(n), cyclic_table(n), {1}});
  for (int q = 2; q <= 12; ++q)
    out.push_back({"D" + std::to_string(q), dihedral_table(q), {q, 2 * q - 1}});
  {
    auto elems3 = perms_of(3, false);
    out.push_back({"S3", symmetric_table(3),
                   {perm_index(elems3, {1, 0, 2}), perm_index(elems3, {1, 2, 0})}});
    auto elems4 = perms_of(4, false);
    out.push_back({"S4", symmetric_table(4),
                   {perm_index(elems4, {1, 0, 2, 3}),
                    perm_index(elems4, {1, 2, 3, 0})}});
    auto elemsA = perms_of(4, true);
    out.push_back({"A4", alternating4_table(),
                   {perm_index(elemsA, {1, 2, 0, 3}),
                    perm_index(elemsA, {1, 0, 3, 2})}});
  }
  out.push_back({"Q8", quaternion8_table(), {2, 4}});  // i and j
  out.push_back({"Z2xZ2", product_table(cyclic_table(2), cyclic_table(2)), {2, 1}});
  out.push_back({"Z2xZ4", product_table(cyclic_table(2), cyclic_table(4)), {4, 1}});
  return out;
}

std::vector<CorpusGroup> load_corpus(const std::string& dir) {
  std::vector<CorpusGroup> out = bundled_corpus();
  for (CorpusGroup& g : out) {
    CayleyTable t = CayleyTable::load(dir + "/" + g.name + ".cayley");
    if (t.order() != g.table.order())
      fail(ErrorCode::ValidationError,
           "corpus file " + g.name + ".cayley has wrong order");
    g.table = std::move(t);
  }
  return out;
}

void write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const CorpusGroup& g : bundled_corpus())
    g.table.save(dir + "/" + g.name + ".cayley");
}

uint64_t corpus_fingerprint(const std::vector<CorpusGroup>& corpus) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const CorpusGroup& g : corpus) {
    for (char c : g.name) mix(static_cast<uint64_t>(c));
    mix(g.table.fingerprint());
  }
  return h;
}

}  // namespace girthlab
