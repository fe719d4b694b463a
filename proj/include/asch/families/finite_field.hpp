#pragma once

#include <vector>

namespace asch {

// GF(p^e) with elements encoded as integers 0..q-1 (base-p digits of the
// polynomial representative); built from a primitive polynomial.
class FiniteField {
 public:
  // Throws ErrorKind::usage unless q is a prime power <= 2^16.
  explicit FiniteField(long q);

  long order() const { return q_; }
  long characteristic() const { return p_; }
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  // Discrete logarithm base the primitive element; a != 0.
  int log(int a) const { return log_[a]; }
  int exp(long e) const { return exp_[e % (q_ - 1)]; }

 private:
  long q_, p_;
  int e_;
  std::vector<int> exp_, log_;
};

}  // namespace asch
