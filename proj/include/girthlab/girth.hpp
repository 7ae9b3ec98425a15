#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "girthlab/amalgam.hpp"
#include "girthlab/hnn.hpp"
#include "girthlab/oracles.hpp"
#include "girthlab/words.hpp"

namespace girthlab {

// Abstract symbols s1..sk that relation words are written over.
Alphabet relation_alphabet(int k);

// Largest length whose cumulative freely-reduced word count over k symbols
// stays within budget, clamped to [1, 64].
long long suggested_cap(int k, unsigned long long budget = 1000000);

// A girth question: a target with decidable identity plus a list of its
// elements. A relation is a freely reduced nonempty word over the abstract
// alphabet of the list that evaluates to the identity. The target is held
// by reference and must outlive the query.
class GirthQuery {
 public:
  static GirthQuery over_oracle(const GroupOracle& g, std::vector<Word> gens,
                                long long max_len = 0);
  static GirthQuery over_hnn(const HnnExtension& h,
                             std::vector<HnnElement> gens,
                             long long max_len = 0);
  static GirthQuery over_amalgam(const AmalgamPresentation& p,
                                 std::vector<AmalgamElement> gens,
                                 long long max_len = 0);

  int genset_size() const;
  long long max_len() const { return max_len_; }
  // "verified" when a subgroup index certifies generation, "not-generating"
  // when it refutes it, "assumed" where generation is undecidable here.
  const std::string& generation() const { return generation_; }
  const std::string& description() const { return description_; }
  uint64_t fingerprint() const { return fingerprint_; }

  // rel is a word over the abstract alphabet
  bool relation_is_identity(const Word& rel) const;

 private:
  GirthQuery() = default;
  void seal(long long max_len);  // description hash, cap default, validation

  struct OracleTarget {
    const GroupOracle* g;
    std::vector<Word> gens;
  };
  struct HnnTarget {
    const HnnExtension* h;
    std::vector<Word> gens;  // words over the extension alphabet
  };
  struct AmalgamTarget {
    const AmalgamPresentation* p;
    std::vector<AmalgamElement> gens;
    std::vector<AmalgamElement> inv;
  };
  std::variant<OracleTarget, HnnTarget, AmalgamTarget> target_;
  long long max_len_ = 0;
  std::string generation_;
  std::string description_;
  uint64_t fingerprint_ = 0;
};

enum class GirthKind { Exact, LowerBound, UpperBound, LawDoesNotHold };

struct GirthCertificate {
  GirthKind kind = GirthKind::LowerBound;
  long long value = 0;          // Exact/UpperBound length, LowerBound r
  std::optional<Word> witness;  // relation over the abstract alphabet
  unsigned long long words_checked = 0;
  uint64_t query_fingerprint = 0;
  long long requested_r = 0;  // certification target, 0 elsewhere
  bool truncated = false;     // the cap stopped short of requested_r - 1
  std::string note;
};

// Shortest relation search in length order, lexicographic within a length
// (only cyclically reduced words are evaluated; the minimum is unchanged).
// Exact(value, witness) on a hit, LowerBound(max_len + 1) otherwise.
GirthCertificate girth_exact(const GirthQuery& q);

// Verify that no relation of length <= min(cap, r - 1) exists, yielding
// LowerBound(min(r, cap + 1)). A relation found instead yields its Exact
// certificate, signalling a broken construction upstream.
GirthCertificate certify_no_short_relation(const GirthQuery& q, long long r,
                                           long long cap);

// Substitute the law's variables (default: the first generators in order;
// or explicit words over the abstract alphabet) and test the result in the
// target: UpperBound(length, word) when it holds, LawDoesNotHold when not.
GirthCertificate law_upper_bound(const GirthQuery& q, const Word& law,
                                 std::vector<Word> instantiation = {});

// Laws over the variable alphabet x, y, z, w.
Alphabet law_alphabet();
Word law_abelian();        // [x,y]
Word law_metabelian();     // [[x,y],[z,w]]
Word law_nilpotent2();     // [[x,y],z]
Word law_burnside(int n);  // x^n

}  // namespace girthlab
