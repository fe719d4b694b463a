#include "asch/exact/roots.hpp"

#include <algorithm>

namespace asch {

namespace {

RationalPolynomial normalized(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / abs(p.leading()));
}

int sgn_of(const Rational& q) { return sgn(q) > 0 ? 1 : (sgn(q) < 0 ? -1 : 0); }

}  // namespace

int sign_at(const RationalPolynomial& p, const Rational& x) { return sgn_of(p(x)); }

SturmSequence::SturmSequence(const RationalPolynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(normalized(p));
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(normalized(d));
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    RationalPolynomial r = a % b;
    if (r.is_zero()) break;
    chain_.push_back(normalized(-r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int count = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_at_infinity(int side) const {
  int count = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sgn_of(q.leading());
    if (side < 0 && q.degree() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

Rational root_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[static_cast<std::size_t>(i)] / p.leading())));
  return m + 1;
}

RootInterval bisect_root(const RationalPolynomial& p, const RootInterval& iv) {
  if (iv.exact()) return iv;
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = sign_at(p, mid);
  if (sm == 0) return {mid, mid};
  if (sm == sign_at(p, iv.lo)) return {mid, iv.hi};
  return {iv.lo, mid};
}

RootInterval refine_root(const RationalPolynomial& p, RootInterval iv, const Rational& max_width) {
  while (!iv.exact() && iv.width() > max_width) iv = bisect_root(p, iv);
  return iv;
}

std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  SturmSequence s(p);
  Rational b = root_bound(p);
  std::vector<std::pair<Rational, Rational>> todo{{-b, b}};
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    int c = s.count(lo, hi);
    if (c == 0) continue;
    if (c > 1) {
      Rational mid = (lo + hi) / 2;
      todo.push_back({lo, mid});
      todo.push_back({mid, hi});
      continue;
    }
    // exactly one root in (lo, hi]
    while (true) {
      if (sign_at(p, hi) == 0) {
        out.push_back({hi, hi});
        break;
      }
      if (sign_at(p, lo) != 0) {
        out.push_back({lo, hi});
        break;
      }
      Rational mid = (lo + hi) / 2;
      if (s.count(mid, hi) == 1)
        lo = mid;
      else
        hi = mid;
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  // siblings may share an endpoint that is not a root; shrink until disjoint
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    while (out[i].hi >= out[i + 1].lo) {
      out[i] = bisect_root(p, out[i]);
      out[i + 1] = bisect_root(p, out[i + 1]);
    }
  }
  return out;
}

}  // namespace asch
