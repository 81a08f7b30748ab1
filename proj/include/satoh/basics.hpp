#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace satoh {

using Int = mpz_class;
using Rat = mpq_class;

// A word over the symplectic basis of H.  Letter i in {0, ..., 2g-1}:
// even indices are a_{i/2+1}, odd indices are b_{i/2+1}.  Words are stored
// as raw byte strings so that lexicographic order is plain string order.
using Word = std::string;
using Letter = unsigned char;

inline Letter letter_a(int i) { return static_cast<Letter>(2 * i); }
inline Letter letter_b(int i) { return static_cast<Letter>(2 * i + 1); }
inline bool is_a(Letter x) { return (x & 1) == 0; }
inline int pair_index(Letter x) { return x >> 1; }

// The symplectically paired letter: a_i <-> b_i.
inline Letter bar(Letter x) { return static_cast<Letter>(x ^ 1); }

// Intersection pairing omega(x, y) on basis letters.
inline int omega_pairing(Letter x, Letter y) {
  if (bar(x) != y) return 0;
  return is_a(x) ? 1 : -1;
}

inline std::string letter_name(Letter x) {
  return std::string(is_a(x) ? "a" : "b") + std::to_string(pair_index(x) + 1);
}

// Parses "a3" / "b1"; throws on malformed input or index out of range.
inline Letter parse_letter(const std::string& s, int genus) {
  if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b'))
    throw std::invalid_argument("bad generator name: " + s);
  int idx = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad generator name: " + s);
    idx = idx * 10 + (s[i] - '0');
  }
  if (idx < 1 || idx > genus)
    throw std::invalid_argument("generator index out of range: " + s);
  return s[0] == 'a' ? letter_a(idx - 1) : letter_b(idx - 1);
}

inline std::string word_name(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(static_cast<Letter>(w[i]));
  }
  return out;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

}  // namespace satoh
