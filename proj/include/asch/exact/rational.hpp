#pragma once

#include <gmpxx.h>

#include <string>

namespace asch {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero_value(const Rational& q) { return sgn(q) == 0; }
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }
// a/b in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Squarefree kernel: q = r^2 * s with r rational, s a squarefree integer
// (sign carried by s). Trial division bounded by `limit`; any cofactor beyond
// the bound is kept in s unless it is a perfect square.
struct SquareExtraction {
  Rational root;  // r > 0
  Integer kernel; // s
};
SquareExtraction extract_square(const Rational& q, unsigned long limit = 1000000);

}  // namespace asch
