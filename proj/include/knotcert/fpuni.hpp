// Dense univariate polynomial arithmetic over F_p (coefficients ascending),
// the workhorse behind modular resultants and finite-field irreducibility.
#ifndef KNOTCERT_FPUNI_HPP
#define KNOTCERT_FPUNI_HPP

#include <cstdint>
#include <vector>

#include "knotcert/poly.hpp"

namespace knotcert::fpuni {

using Coeffs = std::vector<std::uint64_t>;  // ascending, c[i] on x^i

inline void strip(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

inline Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  strip(r);
  return r;
}

inline Coeffs sub(Coeffs a, const Coeffs& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  strip(a);
  return a;
}

// Remainder of a modulo f (f nonzero).
inline Coeffs rem(Coeffs a, const Coeffs& f, std::uint64_t p) {
  strip(a);
  std::uint64_t inv_lead = invmod(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint64_t c = mulmod(a.back(), inv_lead, p);
    std::size_t off = a.size() - f.size();
    if (c != 0)
      for (std::size_t i = 0; i + 1 < f.size(); ++i)
        a[off + i] = (a[off + i] + p - mulmod(c, f[i], p)) % p;
    a.pop_back();
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv_lead = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv_lead, p);
  }
  return a;
}

inline Coeffs mulrem(const Coeffs& a, const Coeffs& b, const Coeffs& f,
                     std::uint64_t p) {
  return rem(mul(a, b, p), f, p);
}

// g^e mod f
inline Coeffs powrem(Coeffs g, std::uint64_t e, const Coeffs& f,
                     std::uint64_t p) {
  Coeffs r{1};
  g = rem(std::move(g), f, p);
  while (e) {
    if (e & 1) r = mulrem(r, g, f, p);
    g = mulrem(g, g, f, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t eval(const Coeffs& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;)
    r = (mulmod(r, x, p) + a[i]) % p;
  return r;
}

// Resultant of f and g by the Euclidean remainder sequence.  Convention:
// Res(f, g) = lc(f)^deg(g) * prod g over the roots of f, matching the
// Sylvester determinant with f-rows first.
inline std::uint64_t resultant(Coeffs f, Coeffs g, std::uint64_t p) {
  strip(f);
  strip(g);
  std::uint64_t res = 1;
  while (true) {
    if (f.empty() || g.empty()) return 0;
    int df = degree(f), dg = degree(g);
    if (dg == 0) return mulmod(res, powmod(g[0], df, p), p);
    if (df == 0) return mulmod(res, powmod(f[0], dg, p), p);
    Coeffs r = rem(f, g, p);
    int dr = degree(r);
    if (dr < 0) return 0;
    // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    if ((static_cast<long long>(df) * dg) % 2 == 1) res = (p - res) % p;
    res = mulmod(res, powmod(g.back(), df - dr, p), p);
    f = std::move(g);
    g = std::move(r);
  }
}

// Deterministic irreducibility over F_p via the distinct-degree ladder:
// f (monicized, degree n) is irreducible iff x^(p^n) == x (mod f) and
// gcd(x^(p^(n/q)) - x, f) = 1 for every prime q dividing n.
inline bool irreducible(Coeffs f, std::uint64_t p) {
  strip(f);
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::uint64_t inv_lead = invmod(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv_lead, p);

  auto frobenius_iterate = [&](int times) {
    // x^(p^times) mod f
    Coeffs cur = rem(Coeffs{0, 1}, f, p);
    for (int i = 0; i < times; ++i) cur = powrem(cur, p, f, p);
    return cur;
  };
  auto minus_x = [&](Coeffs h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    strip(h);
    return h;
  };

  Coeffs top = minus_x(frobenius_iterate(n));
  if (!top.empty()) return false;
  for (std::uint64_t q : prime_factors_u64(static_cast<std::uint64_t>(n))) {
    Coeffs h = minus_x(frobenius_iterate(n / static_cast<int>(q)));
    Coeffs g = gcd(f, h, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

// All roots in F_p by full scan (meant for small p).
inline std::vector<std::uint64_t> roots_by_scan(const Coeffs& f,
                                                std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p; ++x)
    if (eval(f, x, p) == 0) out.push_back(x);
  return out;
}

// Dense Newton interpolation through (xs[i], ys[i]); returns ascending coeffs.
inline Coeffs interpolate(const std::vector<std::uint64_t>& xs,
                          const std::vector<std::uint64_t>& ys,
                          std::uint64_t p) {
  std::size_t n = xs.size();
  std::vector<std::uint64_t> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n; i-- > j;) {
      std::uint64_t den = (xs[i] + p - xs[i - j]) % p;
      dd[i] = mulmod((dd[i] + p - dd[i - 1]) % p, invmod(den, p), p);
    }
  Coeffs poly(n, 0);
  Coeffs cur{1};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < cur.size(); ++k)
      poly[k] = (poly[k] + mulmod(dd[j], cur[k], p)) % p;
    Coeffs nxt(cur.size() + 1, 0);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      nxt[k] = (nxt[k] + mulmod(cur[k], p - xs[j] % p, p)) % p;
      nxt[k + 1] = (nxt[k + 1] + cur[k]) % p;
    }
    cur = std::move(nxt);
  }
  strip(poly);
  return poly;
}

// Specialize a multivariate integer polynomial to a univariate F_p polynomial
// in `main_var`, substituting the given values for every other variable.
inline Coeffs specialize(const MultiPoly<IntegerRing>& f,
                         const std::string& main_var,
                         const std::map<std::string, std::uint64_t>& others,
                         std::uint64_t p) {
  std::size_t mi = f.var_index(main_var);
  int deg = std::max(f.degree_in(main_var), 0);
  if (f.min_exp_in(main_var) < 0)
    throw Error("fpuni::specialize: negative exponents present");
  Coeffs out(static_cast<std::size_t>(deg) + 1, 0);
  PrimeField F(p);
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t val = F.from_int(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (i == mi || m.exps[i] == 0) continue;
      auto it = others.find(f.vars()[i]);
      if (it == others.end())
        throw Error("fpuni::specialize: missing value for '" + f.vars()[i] +
                    "'");
      if (m.exps[i] < 0)
        throw Error("fpuni::specialize: negative exponent");
      val = mulmod(val, powmod(it->second, m.exps[i], p), p);
    }
    std::size_t e = static_cast<std::size_t>(m.exps[mi]);
    out[e] = (out[e] + val) % p;
  }
  strip(out);
  return out;
}

}  // namespace knotcert::fpuni

#endif  // KNOTCERT_FPUNI_HPP
