#include "asch/exact/polynomial.hpp"

#include <sstream>

namespace asch {

std::string to_string(const RationalPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::vector<Integer> primitive_integer_part(const RationalPolynomial& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (sgn(out.back()) < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

RationalPolynomial from_integers(const std::vector<Integer>& c) {
  std::vector<Rational> q;
  q.reserve(c.size());
  for (const auto& v : c) q.emplace_back(v);
  return RationalPolynomial(std::move(q));
}

}  // namespace asch
