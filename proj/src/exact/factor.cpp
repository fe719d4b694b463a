// Factorization over Q: squarefree decomposition, then Zassenhaus on each
// squarefree part (distinct/equal-degree factorization modulo a small prime,
// Hensel lifting, recombination of lifted factors under a Mignotte bound).

#include "asch/exact/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "asch/error.hpp"

namespace asch {

namespace {

using u64 = std::uint64_t;
using IPoly = std::vector<Integer>;
using MPoly = std::vector<u64>;

// ---------------------------------------------------------------- mod p

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e != 0) {
      if ((e & 1U) != 0) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

MPoly reduce(const IPoly& f, u64 p) {
  MPoly out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(out);
  return out;
}

MPoly sub(const Zp& z, MPoly a, const MPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = z.sub(a[i], b[i]);
  trim(a);
  return a;
}

MPoly add(const Zp& z, MPoly a, const MPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = z.add(a[i], b[i]);
  trim(a);
  return a;
}

MPoly mul(const Zp& z, const MPoly& a, const MPoly& b) {
  if (a.empty() || b.empty()) return {};
  MPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % z.p;
  }
  trim(c);
  return c;
}

std::pair<MPoly, MPoly> divmod(const Zp& z, MPoly a, const MPoly& b) {
  if (deg(a) < deg(b)) return {{}, a};
  u64 inv = z.inv(b.back());
  MPoly q(a.size() - b.size() + 1, 0);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    u64 f = z.mul(a[i], inv);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = z.sub(a[i - db + j], z.mul(f, b[j]));
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

MPoly monic(const Zp& z, MPoly a) {
  if (a.empty()) return a;
  u64 inv = z.inv(a.back());
  for (auto& c : a) c = z.mul(c, inv);
  return a;
}

MPoly gcd(const Zp& z, MPoly a, MPoly b) {
  while (!b.empty()) {
    MPoly r = divmod(z, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(z, a);
}

// s*a + t*b = 1 for coprime a, b.
void bezout(const Zp& z, const MPoly& a, const MPoly& b, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(z, r0, r1);
    MPoly s2 = sub(z, s0, mul(z, q, s1));
    MPoly t2 = sub(z, t0, mul(z, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require(deg(r0) == 0, ErrorKind::invariant, "modular factors not coprime");
  u64 inv = z.inv(r0[0]);
  s = mul(z, s0, MPoly{inv});
  t = mul(z, t0, MPoly{inv});
}

MPoly powmod(const Zp& z, MPoly base, const Integer& e, const MPoly& f) {
  MPoly result{1};
  base = divmod(z, base, f).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(z, mul(z, result, result), f).second;
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = divmod(z, mul(z, result, base), f).second;
  }
  return result;
}

// Distinct-degree factorization of a monic squarefree f: (degree, product).
std::vector<std::pair<int, MPoly>> ddf(const Zp& z, MPoly f) {
  std::vector<std::pair<int, MPoly>> out;
  MPoly x{0, 1};
  MPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(z, h, Integer(static_cast<unsigned long>(z.p)), f);
    MPoly g = gcd(z, sub(z, h, x), f);
    if (deg(g) > 0) {
      out.emplace_back(i, g);
      f = divmod(z, f, g).first;
      h = divmod(z, h, f).second;
    }
  }
  if (deg(f) > 0) out.emplace_back(deg(f), f);
  return out;
}

// Equal-degree splitting (odd p) of a product of degree-i irreducibles.
void edf(const Zp& z, const MPoly& g, int i, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (deg(g) == i) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), z.p, static_cast<unsigned long>(i));
  e = (e - 1) / 2;
  while (true) {
    MPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = rng() % z.p;
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = sub(z, powmod(z, a, e, g), MPoly{1});
    MPoly d = gcd(z, b, g);
    if (deg(d) > 0 && deg(d) < deg(g)) {
      edf(z, d, i, rng, out);
      edf(z, divmod(z, g, d).first, i, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------- integers

int ideg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IPoly from_mpoly(const MPoly& a) {
  IPoly out;
  for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

IPoly imul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  itrim(c);
  return c;
}

IPoly imod(IPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  itrim(a);
  return a;
}

IPoly symmetric(IPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  itrim(a);
  return a;
}

IPoly primitive(IPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; returns false if b does not divide a.
bool idivide(const IPoly& a, const IPoly& b, IPoly& q) {
  if (a.size() < b.size()) return false;
  IPoly r = a;
  q.assign(a.size() - b.size() + 1, Integer(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t()) == 0) return false;
    Integer f = r[i] / b.back();
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  for (std::size_t i = 0; i < db && i < r.size(); ++i)
    if (r[i] != 0) return false;
  itrim(q);
  return true;
}

// Lifts f = g0*h0 (mod p), g0 monic, to f = g*h (mod p^a).
void hensel_pair(const IPoly& f, const Zp& z, const MPoly& g0, const MPoly& h0, int a, IPoly& g, IPoly& h) {
  MPoly s, t;
  bezout(z, g0, h0, s, t);
  g = from_mpoly(g0);
  h = from_mpoly(h0);
  Integer pk = static_cast<unsigned long>(z.p);
  for (int k = 1; k < a; ++k) {
    IPoly diff = f;
    IPoly gh = imul(g, h);
    if (diff.size() < gh.size()) diff.resize(gh.size(), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    itrim(diff);
    for (auto& c : diff) {
      require(mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()) != 0, ErrorKind::invariant, "Hensel step not exact");
      c /= pk;
    }
    MPoly e = reduce(diff, z.p);
    auto [q, r] = divmod(z, mul(z, e, t), g0);
    MPoly dh = add(z, mul(z, e, s), mul(z, q, h0));
    IPoly dg = from_mpoly(r), dhi = from_mpoly(dh);
    if (g.size() < dg.size()) g.resize(dg.size(), Integer(0));
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pk * dg[i];
    if (h.size() < dhi.size()) h.resize(dhi.size(), Integer(0));
    for (std::size_t i = 0; i < dhi.size(); ++i) h[i] += pk * dhi[i];
    pk *= static_cast<unsigned long>(z.p);
    g = imod(g, pk);
    h = imod(h, pk);
  }
}

// Lifts the monic modular factorization f = lc * prod(fs) (mod p) to p^a.
std::vector<IPoly> hensel_all(const IPoly& f, const Zp& z, const std::vector<MPoly>& fs, int a, const Integer& pa) {
  std::vector<IPoly> out;
  IPoly cur = f;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    MPoly rest{mpz_fdiv_ui(cur.back().get_mpz_t(), z.p)};
    for (std::size_t j = i + 1; j < fs.size(); ++j) rest = mul(z, rest, fs[j]);
    IPoly g, h;
    hensel_pair(cur, z, fs[i], rest, a, g, h);
    out.push_back(g);
    cur = h;
  }
  // last factor: make monic modulo p^a
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cur.back().get_mpz_t(), pa.get_mpz_t());
  for (auto& c : cur) c *= inv;
  out.push_back(imod(cur, pa));
  return out;
}

std::vector<u64> small_odd_primes() {
  std::vector<u64> out;
  for (u64 n = 3; out.size() < 300; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient into primitive irreducibles.
std::vector<IPoly> zassenhaus(const IPoly& f) {
  const int n = ideg(f);
  if (n <= 1) return {f};

  // Choose a prime with the fewest modular factors; intersect the degree
  // patterns of several primes as an early irreducibility certificate.
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  u64 best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<int, MPoly>> best_ddf;
  int good = 0;
  IPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * static_cast<unsigned long>(i));
  for (u64 p : small_odd_primes()) {
    if (good >= 8) break;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) != 0) continue;
    Zp z{p};
    MPoly fm = reduce(f, p);
    if (deg(gcd(z, fm, reduce(df, p))) != 0) continue;
    ++good;
    auto parts = ddf(z, monic(z, fm));
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    std::size_t count = 0;
    for (const auto& [d, g] : parts) {
      int m = deg(g) / d;
      count += static_cast<std::size_t>(m);
      for (int c = 0; c < m; ++c)
        for (int s = n; s >= d; --s)
          if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    }
    for (int s = 0; s <= n; ++s) possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
      best_ddf = parts;
    }
  }
  require(best_p != 0, ErrorKind::invariant, "no suitable prime for modular factorization");
  bool irreducible = true;
  for (int s = 1; s < n; ++s)
    if (possible[static_cast<std::size_t>(s)]) irreducible = false;
  if (irreducible || best_count == 1) return {f};

  Zp z{best_p};
  std::mt19937_64 rng(0x5eedULL + best_p);
  std::vector<MPoly> mods;
  for (const auto& [d, g] : best_ddf) edf(z, g, d, rng, mods);

  // Mignotte-style bound: coefficients of a factor are at most 2^n * |f|_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = bound * 2 + 1;
  int a = 1;
  Integer pa = static_cast<unsigned long>(best_p);
  while (pa <= bound) {
    pa *= static_cast<unsigned long>(best_p);
    ++a;
  }
  std::vector<IPoly> lifted = hensel_all(f, z, mods, a, pa);

  std::vector<IPoly> out;
  IPoly cur = f;
  std::vector<std::size_t> idx(lifted.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      int dsum = 0;
      for (auto i : pick) dsum += ideg(lifted[idx[i]]);
      if (possible[static_cast<std::size_t>(dsum)]) {
        IPoly g{cur.back()};
        for (auto i : pick) g = imod(imul(g, lifted[idx[i]]), pa);
        g = primitive(symmetric(g, pa));
        IPoly q;
        if (ideg(g) > 0 && idivide(cur, g, q)) {
          out.push_back(g);
          cur = q;
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i < idx.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(idx[i]);
          idx = rest;
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && pick[k - 1] == idx.size() - s + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (cur.size() > 1) out.push_back(primitive(cur));
  return out;
}

RationalPolynomial monic_of(const IPoly& f) { return from_integers(f).monic(); }

bool poly_less(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a[static_cast<std::size_t>(i)];
    const auto& y = b[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<PolyFactor> squarefree_decomposition(const RationalPolynomial& p) {
  require(!p.is_zero(), ErrorKind::domain, "squarefree decomposition of the zero polynomial");
  std::vector<PolyFactor> out;
  if (p.degree() == 0) return out;
  RationalPolynomial f = p.monic();
  RationalPolynomial df = f.derivative();
  RationalPolynomial a0 = RationalPolynomial::gcd(f, df);
  RationalPolynomial b = f / a0;
  RationalPolynomial c = df / a0;
  RationalPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    RationalPolynomial a = RationalPolynomial::gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<PolyFactor> poly_factor_rationals(const RationalPolynomial& p, int degree_bound) {
  std::vector<PolyFactor> out;
  for (const auto& part : squarefree_decomposition(p)) {
    for (const auto& g : zassenhaus(primitive_integer_part(part.poly))) {
      RationalPolynomial m = monic_of(g);
      if (degree_bound >= 0 && m.degree() > degree_bound)
        fail(ErrorKind::unsupported, "irreducible factor of degree " + std::to_string(m.degree()) +
                                         " exceeds the bound " + std::to_string(degree_bound) + ": " +
                                         to_string(m));
      out.push_back({m, part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
    if (poly_less(x.poly, y.poly)) return true;
    if (poly_less(y.poly, x.poly)) return false;
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

bool is_irreducible(const RationalPolynomial& p) {
  if (p.degree() < 1) return false;
  auto f = poly_factor_rationals(p, -1);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace asch
