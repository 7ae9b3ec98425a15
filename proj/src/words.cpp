#include "girthlab/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace girthlab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NonBasis: return "NonBasis";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::IdentityGenerator: return "IdentityGenerator";
    case ErrorCode::GeneratorInSubgroup: return "GeneratorInSubgroup";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PhiInverseUnavailable: return "PhiInverseUnavailable";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::SubgroupNotProper: return "SubgroupNotProper";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NoPairFound: return "NoPairFound";
    case ErrorCode::SubstitutionCollapsed: return "SubstitutionCollapsed";
    case ErrorCode::CorpusMissing: return "CorpusMissing";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Word Word::reduce(const std::vector<Letter>& raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!w.letters_.empty() && w.letters_.back().sym == l.sym &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::letter(int sym, int sign) {
  Word w;
  w.letters_.push_back({sym, sign > 0 ? 1 : -1});
  return w;
}

Word Word::power(int sym, long long exp) {
  Word w;
  int sign = exp >= 0 ? 1 : -1;
  for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i)
    w.letters_.push_back({sym, sign});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  for (const Letter& l : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back().sym == l.sym &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::pow(long long k) const {
  Word base = k >= 0 ? *this : inverse();
  long long n = k >= 0 ? k : -k;
  Word out;
  for (long long i = 0; i < n; ++i) out = out * base;
  return out;
}

bool Word::cyclically_reduced() const {
  if (letters_.size() < 2) return true;
  const Letter& first = letters_.front();
  const Letter& last = letters_.back();
  return !(first.sym == last.sym && first.sign == -last.sign);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Letter& x, const Letter& y) { return x.code() < y.code(); });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    for (size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j])
        fail(ErrorCode::ValidationError,
             "duplicate generator name '" + names_[i] + "'");
    }
  }
}

const std::string& Alphabet::name(int sym) const {
  if (sym < 0 || sym >= size())
    fail(ErrorCode::UnknownSymbol, "symbol id out of range");
  return names_[sym];
}

std::optional<int> Alphabet::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << name(w[i].sym);
    if (w[i].sign < 0) os << "^-1";
  }
  return os.str();
}

Word Alphabet::parse(const std::string& text) const {
  std::vector<Letter> raw;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '1' &&
        (i + 1 == n || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;  // explicit identity token
      continue;
    }
    size_t start = i;
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                     text[i] == '_'))
      ++i;
    if (i == start)
      fail(ErrorCode::ParseError, "unexpected character '" +
                                      std::string(1, text[i]) +
                                      "' at offset " + std::to_string(i));
    std::string nm = text.substr(start, i - start);
    auto sym = find(nm);
    if (!sym)
      fail(ErrorCode::UnknownSymbol, "unknown generator '" + nm + "'");
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      size_t estart = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart]))))
        fail(ErrorCode::ParseError,
             "expected integer exponent at offset " + std::to_string(estart));
      exp = std::stoll(text.substr(estart, i - estart));
    }
    int sign = exp >= 0 ? 1 : -1;
    for (long long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
      raw.push_back({*sym, sign});
  }
  return Word::reduce(raw);
}

Word substitute(const Word& expr, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : expr.letters()) {
    if (l.sym < 0 || static_cast<size_t>(l.sym) >= images.size())
      fail(ErrorCode::UnknownSymbol, "substitution symbol out of range");
    const Word& g = images[static_cast<size_t>(l.sym)];
    out = out * (l.sign > 0 ? g : g.inverse());
  }
  return out;
}

Alphabet letter_alphabet(int rank) {
  if (rank < 0 || rank > 26)
    fail(ErrorCode::ValidationError, "rank must be between 0 and 26");
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back(std::string(1, char('a' + i)));
  return Alphabet(std::move(names));
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> conj;
  std::vector<Letter> core(w.begin(), w.end());
  while (core.size() >= 2 && core.front().sym == core.back().sym &&
         core.front().sign == -core.back().sign) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {Word::reduce(core), Word::reduce(conj)};
}

ReducedWordEnumerator::ReducedWordEnumerator(int rank, int max_len)
    : rank_(rank), max_len_(max_len) {
  if (rank < 1) fail(ErrorCode::ValidationError, "enumeration needs rank >= 1");
}

// codes_ holds letter codes; adjacent codes c, d conflict when d is the
// inverse of c, i.e. they share a symbol and differ in sign bit.
static bool cancels(int prev, int next) {
  return (prev >> 1) == (next >> 1) && ((prev ^ next) & 1) != 0;
}

bool ReducedWordEnumerator::grow() {
  if (len_ >= max_len_) return false;
  ++len_;
  codes_.assign(len_, 0);
  // first letter is code 0, each later slot the smallest non-cancelling code
  for (int i = 1; i < len_; ++i) {
    int c = 0;
    while (cancels(codes_[i - 1], c)) ++c;
    codes_[i] = c;
  }
  return true;
}

bool ReducedWordEnumerator::advance() {
  // odometer with the no-cancellation constraint
  int i = len_ - 1;
  while (i >= 0) {
    int c = codes_[i] + 1;
    while (c < 2 * rank_ && i > 0 && cancels(codes_[i - 1], c)) ++c;
    if (c < 2 * rank_) {
      codes_[i] = c;
      for (int j = i + 1; j < len_; ++j) {
        int d = 0;
        while (cancels(codes_[j - 1], d)) ++d;
        codes_[j] = d;
      }
      return true;
    }
    --i;
  }
  return grow();
}

std::optional<Word> ReducedWordEnumerator::next() {
  if (fresh_) {
    fresh_ = false;
    if (!grow()) return std::nullopt;
  } else if (!advance()) {
    return std::nullopt;
  }
  std::vector<Letter> ls;
  ls.reserve(codes_.size());
  for (int c : codes_) ls.push_back({c >> 1, (c & 1) ? -1 : 1});
  Word w = Word::reduce(ls);
  return w;
}

unsigned long long reduced_word_count(int k, int len) {
  if (len <= 0 || k <= 0) return 0;
  unsigned long long total = 2ull * k;
  for (int i = 1; i < len; ++i) total *= (2ull * k - 1);
  return total;
}

}  // namespace girthlab
