#include "fibcube/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibcube {

namespace {

std::uint32_t low_mask(int length) {
  return length >= 32 ? 0xFFFFFFFFu : ((1u << length) - 1u);
}

} // namespace

Word::Word(std::uint32_t code, int length) : code_(code), length_(length) {
  if (length < 1 || length > kMaxLength)
    throw std::invalid_argument("word length must be in [1, 32], got " +
                                std::to_string(length));
  if ((code & ~low_mask(length)) != 0)
    throw std::invalid_argument("word code has bits beyond its length");
}

Word Word::parse(std::string_view text) {
  if (text.empty() || text.size() > static_cast<std::size_t>(kMaxLength))
    throw std::invalid_argument("word must have 1..32 binary digits: '" +
                                std::string(text) + "'");
  std::uint32_t code = 0;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("word must consist of 0/1 digits: '" +
                                  std::string(text) + "'");
    code = (code << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Word(code, static_cast<int>(text.size()));
}

Word Word::zeros(int length) { return Word(0, length); }
Word Word::ones(int length) { return Word(low_mask(length), length); }

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

Word Word::operator+(const Word& tail) const {
  const int n = length_ + tail.length_;
  if (n > kMaxLength) throw std::invalid_argument("concatenation exceeds 32 bits");
  const std::uint64_t code =
      (static_cast<std::uint64_t>(code_) << tail.length_) | tail.code_;
  return Word(static_cast<std::uint32_t>(code), n);
}

Word Word::append(int b) const { return *this + Word(b ? 1u : 0u, 1); }
Word Word::prepend(int b) const { return Word(b ? 1u : 0u, 1) + *this; }

int CorrelationPolynomial::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

std::uint64_t CorrelationPolynomial::evaluate(std::uint64_t z) const {
  // Horner from the top coefficient.
  unsigned __int128 acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + static_cast<unsigned>(*it);
    if (acc > UINT64_MAX) throw std::overflow_error("polynomial value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

Word complement(const Word& f) {
  return Word(~f.code() & low_mask(f.length()), f.length());
}

Word reverse(const Word& f) {
  std::uint32_t out = 0;
  std::uint32_t in = f.code();
  for (int i = 0; i < f.length(); ++i) {
    out = (out << 1) | (in & 1u);
    in >>= 1;
  }
  return Word(out, f.length());
}

std::vector<Word> orbit(const Word& f) {
  const Word r = reverse(f);
  std::vector<Word> out{f, r, complement(f), complement(r)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word canonical_rep(const Word& f) { return orbit(f).front(); }

bool is_trivial_pair(const Word& f, const Word& g) {
  if (f.length() != g.length()) return false;
  const auto o = orbit(f);
  return std::find(o.begin(), o.end(), g) != o.end();
}

int nu(const Word& f) { return static_cast<int>(bit_change_indices(f).size()); }

std::vector<int> bit_change_indices(const Word& f) {
  std::vector<int> out;
  for (int t = 2; t <= f.length(); ++t)
    if (f.bit(t - 1) != f.bit(t)) out.push_back(t);
  return out;
}

CorrelationPolynomial autocorrelation(const Word& f) {
  const int k = f.length();
  CorrelationPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    // suffix f_{i+1..k} against prefix f_{1..k-i}
    const std::uint32_t suffix = f.code() & low_mask(k - i);
    const std::uint32_t prefix = f.code() >> i;
    p.coeffs[static_cast<std::size_t>(i)] = suffix == prefix ? 1 : 0;
  }
  return p;
}

std::uint64_t eval_at_two(const CorrelationPolynomial& p) { return p.evaluate(2); }

bool is_prime_word(const Word& f) {
  const auto p = autocorrelation(f);
  return std::all_of(p.coeffs.begin() + 1, p.coeffs.end(),
                     [](int c) { return c == 0; });
}

std::vector<Word> representatives(int k) {
  if (k < 1 || k > Word::kMaxLength)
    throw std::invalid_argument("representatives: k must be in [1, 32]");
  std::vector<Word> out;
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t c = 0; c < limit; ++c) {
    const Word w(static_cast<std::uint32_t>(c), k);
    if (canonical_rep(w) == w) out.push_back(w);
  }
  return out;
}

bool contains_factor(const Word& w, const Word& f) {
  const int n = w.length();
  const int m = f.length();
  if (m > n) return false;
  for (int start = 1; start + m - 1 <= n; ++start) {
    bool match = true;
    for (int j = 1; j <= m && match; ++j) match = w.bit(start + j - 1) == f.bit(j);
    if (match) return true;
  }
  return false;
}

} // namespace fibcube
