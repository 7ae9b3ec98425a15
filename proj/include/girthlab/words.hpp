#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthlab/errors.hpp"

namespace girthlab {

// One signed letter of a word. sign is +1 or -1.
struct Letter {
  int sym = 0;
  int sign = 1;

  Letter inverse() const { return {sym, -sign}; }
  // Total order used everywhere enumeration order matters:
  // symbol id ascending, positive before negative.
  int code() const { return sym * 2 + (sign < 0 ? 1 : 0); }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) {
    return a.code() <=> b.code();
  }
};

// A freely reduced word. The constructor-free factories are the only way to
// build one, so the no-adjacent-cancellation invariant always holds.
class Word {
 public:
  Word() = default;

  static Word reduce(const std::vector<Letter>& raw);
  static Word letter(int sym, int sign = 1);
  static Word power(int sym, long long exp);  // sym^exp

  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  const Letter& operator[](size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenate, then reduce
  Word pow(long long k) const;

  bool cyclically_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: length first, then letter codes.
  friend bool shortlex_less(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// Named generator alphabet. Symbol ids are positions.
struct GeneratorSymbol {
  int id;
  std::string name;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int sym) const;
  std::optional<int> find(const std::string& name) const;
  GeneratorSymbol symbol_at(int i) const { return {i, name(i)}; }
  const std::vector<std::string>& names() const { return names_; }

  // "a b^-1 a" style round-trip.
  std::string format(const Word& w) const;
  Word parse(const std::string& text) const;

 private:
  std::vector<std::string> names_;
};

// Letters a..z for small ranks.
Alphabet letter_alphabet(int rank);

// Replace symbol i of expr by images[i] (inverted for negative letters).
Word substitute(const Word& expr, const std::vector<Word>& images);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // original == conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

// Streams every freely reduced nonempty word over an alphabet of `rank`
// symbols, lengths 1..max_len, nondecreasing length, lexicographic by letter
// code within a length.
class ReducedWordEnumerator {
 public:
  ReducedWordEnumerator(int rank, int max_len);
  std::optional<Word> next();

 private:
  bool advance();
  bool grow();
  int rank_;
  int max_len_;
  int len_ = 0;
  bool fresh_ = true;
  std::vector<int> codes_;  // current word as letter codes
};

// 2k(2k-1)^(len-1): freely reduced words of exactly `len` over `k` symbols.
unsigned long long reduced_word_count(int k, int len);

}  // namespace girthlab
