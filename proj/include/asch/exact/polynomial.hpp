#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "asch/error.hpp"
#include "asch/exact/rational.hpp"

namespace asch {

// Dense univariate polynomial with coefficients in ascending degree order.
// T must be a field with T(0), T(1), T(const Rational&) and is_zero_value(T).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(std::size_t deg, const T& v = T(1)) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = v;
    return Polynomial(std::move(c));
  }
  // x - a
  static Polynomial linear_root(const T& a) { return Polynomial({T(0) - a, T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<T>& coefficients() const { return c_; }
  const T& leading() const { return c_.back(); }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& operator[](std::size_t i) const { return c_[i]; }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }
  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(Rational(static_cast<long>(i))));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    T inv = T(1) / leading();
    std::vector<T> c(c_);
    for (auto& v : c) v = v * inv;
    return Polynomial(std::move(c));
  }

  Polynomial scaled(const T& s) const {
    std::vector<T> c(c_);
    for (auto& v : c) v = v * s;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_value(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require(!b.is_zero(), ErrorKind::domain, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<T> r(a.c_);
    std::vector<T> q(a.c_.size() - b.c_.size() + 1, T(0));
    T inv = T(1) / b.leading();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
      if (is_zero_value(r[i])) continue;
      T f = r[i] * inv;
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.c_[j];
    }
    r.resize(db);
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  // Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Returns (g, s, t) with s*a + t*b = g, g monic.
  struct Bezout {
    Polynomial g, s, t;
  };
  static Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b, s0 = constant(T(1)), s1, t0, t1 = constant(T(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T inv = T(1) / r0.leading();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;

// Renders with variable name `var`, e.g. "t^3 - 3/16*t + 7/256".
std::string to_string(const RationalPolynomial& p, const std::string& var = "x");

// Polynomial with integer coefficients proportional to p, positive leading
// coefficient and content 1.
std::vector<Integer> primitive_integer_part(const RationalPolynomial& p);
RationalPolynomial from_integers(const std::vector<Integer>& c);

}  // namespace asch
