#include "asch/exact/rational.hpp"

#include "asch/error.hpp"

namespace asch {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorKind::parse, "not a rational number: '" + s + "'");
  require(q.get_den() != 0, ErrorKind::parse, "zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

namespace {

// Splits |z| = a^2 * b with b squarefree as far as trial division by primes
// below `limit` can tell.
void square_split(const Integer& z, unsigned long limit, Integer& a, Integer& b) {
  a = 1;
  b = 1;
  Integer rest = abs(z);
  for (unsigned long p = 2; p < limit; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) a *= p;
    if (e % 2 != 0) b *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      a *= r;
    } else {
      b *= rest;
    }
  }
}

}  // namespace

SquareExtraction extract_square(const Rational& q, unsigned long limit) {
  SquareExtraction out{Rational(0), Integer(0)};
  if (sgn(q) == 0) return out;
  // q = num/den = num*den / den^2
  Integer a, b;
  square_split(q.get_num() * q.get_den(), limit, a, b);
  out.root = Rational(a, q.get_den());
  out.root.canonicalize();
  out.kernel = sgn(q) < 0 ? Integer(-b) : b;
  return out;
}

}  // namespace asch
