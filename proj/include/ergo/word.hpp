#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

// Fixed-precision 2-adic words: every value is a residue modulo 2^n that
// carries its precision n with it.  All operations wrap modulo 2^n, so a
// Word2 behaves exactly like an n-bit machine register.

namespace ergo {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class eval_error : public error {
public:
  using error::error;
};

inline constexpr uint64_t mask_bits(unsigned n) {
  return n >= 64 ? ~0ull : ((1ull << n) - 1);
}

struct Word2 {
  uint64_t v = 0;  // invariant: v < 2^n
  unsigned n = 1;  // precision in bits, 1..64
};

inline Word2 word(uint64_t v, unsigned n) {
  if (n < 1 || n > 64) throw error("precision must be in 1..64, got " + std::to_string(n));
  return Word2{v & mask_bits(n), n};
}

// Wraparound embedding of a signed integer (two's complement truncation).
inline Word2 word_from_int(int64_t x, unsigned n) {
  return word(static_cast<uint64_t>(x), n);
}

inline void require_same(const Word2& a, const Word2& b) {
  if (a.n != b.n)
    throw error("precision mismatch: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
}

inline bool operator==(const Word2& a, const Word2& b) { return a.n == b.n && a.v == b.v; }
inline bool operator!=(const Word2& a, const Word2& b) { return !(a == b); }

inline Word2 add(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{(a.v + b.v) & mask_bits(a.n), a.n};
}

inline Word2 sub(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{(a.v - b.v) & mask_bits(a.n), a.n};
}

inline Word2 mul(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{(a.v * b.v) & mask_bits(a.n), a.n};
}

inline Word2 band(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{a.v & b.v, a.n};
}

inline Word2 bor(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{a.v | b.v, a.n};
}

inline Word2 bxor(Word2 a, Word2 b) {
  require_same(a, b);
  return Word2{a.v ^ b.v, a.n};
}

inline Word2 bnot(Word2 a) { return Word2{~a.v & mask_bits(a.n), a.n}; }

// Shift towards more significant bits (multiply by 2^m).
inline Word2 shl(Word2 a, unsigned m) {
  if (m >= a.n) return Word2{0, a.n};
  return Word2{(a.v << m) & mask_bits(a.n), a.n};
}

// Shift towards less significant bits (floor divide by 2^m).  The dropped
// bits are lost; this is the one basic operation that is not compatible.
inline Word2 shr(Word2 a, unsigned m) {
  if (m >= 64) return Word2{0, a.n};
  return Word2{a.v >> m, a.n};
}

// j-th base-2 digit.
inline unsigned digit(Word2 a, unsigned j) {
  if (j >= a.n) throw error("digit index " + std::to_string(j) + " out of range for precision " + std::to_string(a.n));
  return (a.v >> j) & 1u;
}

// 2-adic valuation.  At finite precision, a zero word only certifies
// ord >= n, which we report as INFINITE at this precision.
struct Valuation {
  bool infinite = false;
  unsigned ord = 0;
};

inline Valuation ord2(Word2 a) {
  if (a.v == 0) return Valuation{true, 0};
#if defined(__GNUC__) || defined(__clang__)
  return Valuation{false, static_cast<unsigned>(__builtin_ctzll(a.v))};
#else
  unsigned k = 0;
  uint64_t v = a.v;
  while (!(v & 1)) { v >>= 1; ++k; }
  return Valuation{false, k};
#endif
}

// Multiplicative inverse of an odd residue by Hensel/Newton lifting:
// b <- b * (2 - a*b) doubles the number of correct low bits each round.
inline Word2 inv_odd(Word2 a) {
  if (!(a.v & 1)) throw error("inv_odd: argument is even");
  uint64_t x = a.v;                // correct mod 2^3 already (x*x == 1 mod 8)
  uint64_t b = x;
  for (int i = 0; i < 5; ++i) b *= 2 - x * b;
  return Word2{b & mask_bits(a.n), a.n};
}

// (1 + 2u)^v mod 2^n by square-and-multiply.  The exponent is the plain
// integer value of v: the multiplicative order of any 1+2u divides 2^(n-1)
// modulo 2^n, so reducing the exponent at precision n loses nothing (this
// also fixes the meaning of "negative" exponents given as wrapped words).
inline Word2 exp1p2(Word2 u, Word2 v) {
  require_same(u, v);
  const uint64_t m = mask_bits(u.n);
  uint64_t base = (1 + 2 * u.v) & m;
  uint64_t e = v.v;
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = (r * base) & m;
    base = (base * base) & m;
    e >>= 1;
  }
  return Word2{r, u.n};
}

// Monna map: Sum digit(a,i) * 2^(-i-1), as the exact dyadic rational
// bitrev(v)/2^n.
struct Dyadic {
  uint64_t num = 0;
  unsigned log2_den = 0;  // value = num / 2^log2_den

  // Reduced form (num odd or zero).
  Dyadic reduced() const {
    Dyadic d = *this;
    while (d.num && !(d.num & 1) && d.log2_den > 0) { d.num >>= 1; --d.log2_den; }
    if (d.num == 0) d.log2_den = 0;
    return d;
  }
  double to_double() const {
    double r = static_cast<double>(num);
    for (unsigned i = 0; i < log2_den; ++i) r /= 2.0;
    return r;
  }
};

inline bool operator==(const Dyadic& a, const Dyadic& b) {
  Dyadic x = a.reduced(), y = b.reduced();
  return x.num == y.num && x.log2_den == y.log2_den;
}

inline Dyadic monna(Word2 a) {
  uint64_t r = 0;
  for (unsigned i = 0; i < a.n; ++i)
    if ((a.v >> i) & 1) r |= 1ull << (a.n - 1 - i);
  return Dyadic{r, a.n};
}

}  // namespace ergo
