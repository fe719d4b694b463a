#include "asch/families/finite_field.hpp"

#include "asch/error.hpp"

namespace asch {
namespace {

std::vector<int> digits(long v, long p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, v /= p) d[i] = static_cast<int>(v % p);
  return d;
}

long encode(const std::vector<int>& d, long p) {
  long v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

FiniteField::FiniteField(long q) : q_(q) {
  if (q < 2 || q > 65536) fail(ErrorKind::usage, "field order " + std::to_string(q) + " outside 2..65536");
  p_ = 0;
  for (long f = 2; f * f <= q && !p_; ++f)
    if (q % f == 0) p_ = f;
  if (!p_) p_ = q;
  e_ = 0;
  long rest = q;
  while (rest % p_ == 0) rest /= p_, ++e_;
  if (rest != 1) fail(ErrorKind::usage, std::to_string(q) + " is not a prime power");

  // Search x^e + c(x) with x primitive modulo it.
  for (long c = 0; c < q; ++c) {
    const auto f = digits(c, p_, e_);  // low coefficients of the monic modulus
    std::vector<int> cur(e_, 0);
    cur[0] = 1;
    exp_.assign(q - 1, 0);
    log_.assign(q, -1);
    bool ok = true;
    for (long k = 0; k < q - 1; ++k) {
      long v = encode(cur, p_);
      if (v == 0 || log_[v] >= 0) {
        ok = false;
        break;
      }
      exp_[k] = static_cast<int>(v);
      log_[v] = static_cast<int>(k);
      // multiply by x: x^e = -c(x)
      int top = cur[e_ - 1];
      for (int i = e_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < e_; ++i) cur[i] = static_cast<int>(((cur[i] - top * f[i]) % p_ + p_) % p_);
    }
    if (ok && encode(cur, p_) == 1) return;
  }
  fail(ErrorKind::invariant, "no primitive polynomial found for GF(" + std::to_string(q) + ")");
}

int FiniteField::add(int a, int b) const {
  long v = 0, mult = 1;
  for (int i = 0; i < e_; ++i, a /= p_, b /= p_, mult *= p_) v += ((a % p_ + b % p_) % p_) * mult;
  return static_cast<int>(v);
}

int FiniteField::neg(int a) const {
  long v = 0, mult = 1;
  for (int i = 0; i < e_; ++i, a /= p_, mult *= p_) v += ((p_ - a % p_) % p_) * mult;
  return static_cast<int>(v);
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<long>(log_[a]) + log_[b]) % (q_ - 1)];
}

}  // namespace asch
