#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fibcube {

/// Binary string b_1...b_k with 1 <= k <= 32, packed big-endian into one
/// 32-bit code: position 1 is the most significant of the k used bits, so
/// numeric order of codes equals lexicographic order at equal length.
class Word {
public:
  static constexpr int kMaxLength = 32;

  Word(std::uint32_t code, int length);

  /// Parses ASCII '0'/'1' text. Throws std::invalid_argument on anything else.
  static Word parse(std::string_view text);
  static Word zeros(int length);
  static Word ones(int length);

  int length() const { return length_; }
  std::uint32_t code() const { return code_; }

  /// Bit at 1-indexed position i.
  int bit(int i) const { return static_cast<int>((code_ >> (length_ - i)) & 1u); }

  std::string str() const;

  /// Concatenation; the combined length must stay within kMaxLength.
  Word operator+(const Word& tail) const;
  Word append(int b) const;
  Word prepend(int b) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shorter words first, then lexicographic.
  friend bool operator<(const Word& a, const Word& b) {
    return a.length_ != b.length_ ? a.length_ < b.length_ : a.code_ < b.code_;
  }

private:
  std::uint32_t code_;
  int length_;
};

/// Coefficients c_0..c_{k-1} of the autocorrelation polynomial, index = exponent.
struct CorrelationPolynomial {
  std::vector<int> coeffs;

  int degree() const;
  /// Sum of c_i * z^i. Throws std::overflow_error when the value leaves 64 bits.
  std::uint64_t evaluate(std::uint64_t z) const;

  friend bool operator==(const CorrelationPolynomial&,
                         const CorrelationPolynomial&) = default;
};

Word complement(const Word& f);
Word reverse(const Word& f);

/// {f, rev f, comp f, comp rev f} without duplicates, sorted.
std::vector<Word> orbit(const Word& f);
/// Lexicographically least member of orbit(f).
Word canonical_rep(const Word& f);
bool is_trivial_pair(const Word& f, const Word& g);

/// Number of maximal constant runs minus one.
int nu(const Word& f);
/// Positions t >= 2 (1-indexed) with f_{t-1} != f_t, ascending.
std::vector<int> bit_change_indices(const Word& f);

CorrelationPolynomial autocorrelation(const Word& f);
std::uint64_t eval_at_two(const CorrelationPolynomial& p);
bool is_prime_word(const Word& f);

/// One word per orbit of {id, rev, comp, rev∘comp}, each its own
/// canonical_rep, in ascending order.
std::vector<Word> representatives(int k);

/// Naive scan; false whenever |f| > |w|.
bool contains_factor(const Word& w, const Word& f);

} // namespace fibcube
