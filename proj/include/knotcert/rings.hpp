// Exact coefficient domains: Z, Q, F_p, quadratic fields Q(sqrt(D)), and the
// small helpers shared by them.  A ring object carries its runtime parameters
// (p, D) and provides the operations; polynomial code is generic over it.
#ifndef KNOTCERT_RINGS_HPP
#define KNOTCERT_RINGS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "knotcert/integer.hpp"

namespace knotcert {

// ---------------------------------------------------------------------------
// Z
// ---------------------------------------------------------------------------

struct IntegerRing {
  using Elem = Int;

  static Elem zero() { return Int(0); }
  static Elem one() { return Int(1); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }
  static Elem from_int(const Int& n) { return n; }
  // Exact division; nullopt when b does not divide a.
  static std::optional<Elem> divide(const Elem& a, const Elem& b) {
    if (b == 0) throw Error("Z: division by zero");
    if (a % b != 0) return std::nullopt;
    return a / b;
  }
  static std::string str(const Elem& a) { return a.str(); }
  static Elem parse_coeff(std::string_view tok) {
    try {
      return Int(std::string(tok));
    } catch (...) {
      throw ParseError("Z: bad coefficient token '" + std::string(tok) + "'");
    }
  }
  static std::string domain_tag() { return "Z"; }
  bool operator==(const IntegerRing&) const { return true; }
};

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

struct RationalField {
  using Elem = Rat;

  static Elem zero() { return Rat(0); }
  static Elem one() { return Rat(1); }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem neg(const Elem& a) { return -a; }
  static bool is_zero(const Elem& a) { return a == 0; }
  static bool equal(const Elem& a, const Elem& b) { return a == b; }
  static Elem from_int(const Int& n) { return Rat(n); }
  static Elem inv(const Elem& a) {
    if (a == 0) throw Error("Q: inverse of zero");
    return 1 / a;
  }
  static std::optional<Elem> divide(const Elem& a, const Elem& b) {
    if (b == 0) throw Error("Q: division by zero");
    return a / b;
  }
  static std::string str(const Elem& a) {
    if (boost::multiprecision::denominator(a) == 1)
      return boost::multiprecision::numerator(a).str();
    return boost::multiprecision::numerator(a).str() + "/" +
           boost::multiprecision::denominator(a).str();
  }
  static Elem parse_coeff(std::string_view tok) {
    auto slash = tok.find('/');
    try {
      if (slash == std::string_view::npos) return Rat(Int(std::string(tok)));
      return Rat(Int(std::string(tok.substr(0, slash))),
                 Int(std::string(tok.substr(slash + 1))));
    } catch (...) {
      throw ParseError("Q: bad coefficient token '" + std::string(tok) + "'");
    }
  }
  static std::string domain_tag() { return "Q"; }
  bool operator==(const RationalField&) const { return true; }
};

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime)) throw Error("PrimeField: modulus is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
  Elem mul(Elem a, Elem b) const { return mulmod(a, b, p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(Elem a) const { return a % p == 0; }
  bool equal(Elem a, Elem b) const { return a % p == b % p; }
  Elem from_int(const Int& n) const {
    Int r = n % Int(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  Elem inv(Elem a) const {
    if (a % p == 0) throw Error("F_p: inverse of zero");
    return invmod(a, p);
  }
  std::optional<Elem> divide(Elem a, Elem b) const { return mul(a, inv(b)); }
  std::string str(Elem a) const { return std::to_string(a % p); }
  Elem parse_coeff(std::string_view tok) const {
    try {
      return from_int(Int(std::string(tok)));
    } catch (...) {
      throw ParseError("F_p: bad coefficient token '" + std::string(tok) +
                       "'");
    }
  }
  std::string domain_tag() const { return "Fp:" + std::to_string(p); }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

// ---------------------------------------------------------------------------
// F_{p^2}, realized as F_p[w]/(w^2 - n) for a fixed non-residue n.
// Used by the sampling oracles that need points with y + 1/y prescribed.
// ---------------------------------------------------------------------------

struct QuadExtField {
  struct Elem {
    std::uint64_t a = 0, b = 0;  // a + b*w
    bool operator==(const Elem&) const = default;
  };
  std::uint64_t p;
  std::uint64_t nonresidue;

  explicit QuadExtField(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime) || prime == 2)
      throw Error("QuadExtField: need an odd prime");
    nonresidue = 0;
    for (std::uint64_t n = 2; n < p; ++n) {
      if (powmod(n, (p - 1) / 2, p) == p - 1) {
        nonresidue = n;
        break;
      }
    }
    if (nonresidue == 0) throw Error("QuadExtField: no non-residue found");
  }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1 % p, 0}; }
  Elem embed(std::uint64_t a) const { return {a % p, 0}; }
  Elem add(Elem x, Elem y) const { return {(x.a + y.a) % p, (x.b + y.b) % p}; }
  Elem sub(Elem x, Elem y) const {
    return {(x.a + p - y.a) % p, (x.b + p - y.b) % p};
  }
  Elem mul(Elem x, Elem y) const {
    std::uint64_t a = (mulmod(x.a, y.a, p) +
                       mulmod(mulmod(x.b, y.b, p), nonresidue, p)) %
                      p;
    std::uint64_t b = (mulmod(x.a, y.b, p) + mulmod(x.b, y.a, p)) % p;
    return {a, b};
  }
  Elem neg(Elem x) const {
    return {x.a == 0 ? 0 : p - x.a, x.b == 0 ? 0 : p - x.b};
  }
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
  bool equal(Elem x, Elem y) const { return x == y; }
  Elem from_int(const Int& n) const {
    Int r = n % Int(p);
    if (r < 0) r += p;
    return {static_cast<std::uint64_t>(r), 0};
  }
  Elem inv(Elem x) const {
    // (a + bw)^-1 = (a - bw) / (a^2 - n b^2)
    std::uint64_t nrm =
        (mulmod(x.a, x.a, p) + p -
         mulmod(mulmod(x.b, x.b, p), nonresidue, p) % p) %
        p;
    if (nrm == 0) throw Error("F_p2: inverse of zero");
    std::uint64_t ninv = invmod(nrm, p);
    return {mulmod(x.a, ninv, p),
            x.b == 0 ? 0 : mulmod(p - x.b, ninv, p)};
  }
  std::string str(Elem x) const {
    return "(" + std::to_string(x.a) + "+" + std::to_string(x.b) + "w)";
  }
  std::string domain_tag() const { return "Fp2:" + std::to_string(p); }
  bool operator==(const QuadExtField& o) const { return p == o.p; }
};

// Square root in F_p by Tonelli-Shanks; nullopt for non-residues.
inline std::optional<std::uint64_t> sqrt_mod_p(std::uint64_t a,
                                               std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p),
                r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = powmod(c, 1ull << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Q(sqrt(D)) for squarefree D.  Elements are (r + s*sqrt(D))/q kept in lowest
// terms with q > 0 and gcd(r, s, q) = 1.
// ---------------------------------------------------------------------------

struct QuadElem {
  Int r = 0, s = 0, q = 1;
  bool operator==(const QuadElem&) const = default;
};

struct QuadraticField {
  using Elem = QuadElem;
  Int D;

  explicit QuadraticField(Int d) : D(std::move(d)) {
    if (D == 0 || D == 1) throw Error("QuadraticField: D must not be 0 or 1");
  }

  static Elem normalize(Int r, Int s, Int q) {
    if (q == 0) throw Error("Q(sqrt D): zero denominator");
    if (q < 0) {
      r = -r;
      s = -s;
      q = -q;
    }
    Int g = int_gcd(int_gcd(int_abs(r), int_abs(s)), q);
    if (g > 1) {
      r /= g;
      s /= g;
      q /= g;
    }
    return {std::move(r), std::move(s), std::move(q)};
  }

  Elem zero() const { return {0, 0, 1}; }
  Elem one() const { return {1, 0, 1}; }
  Elem make(const Int& r, const Int& s, const Int& q) const {
    return normalize(r, s, q);
  }
  Elem add(const Elem& a, const Elem& b) const {
    return normalize(a.r * b.q + b.r * a.q, a.s * b.q + b.s * a.q, a.q * b.q);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return normalize(a.r * b.q - b.r * a.q, a.s * b.q - b.s * a.q, a.q * b.q);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    return normalize(a.r * b.r + a.s * b.s * D, a.r * b.s + a.s * b.r,
                     a.q * b.q);
  }
  Elem neg(const Elem& a) const { return {-a.r, -a.s, a.q}; }
  bool is_zero(const Elem& a) const { return a.r == 0 && a.s == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_int(const Int& n) const { return {n, 0, 1}; }
  Elem inv(const Elem& a) const {
    // 1/((r+s√D)/q) = q(r-s√D)/(r^2 - s^2 D)
    Int nrm = a.r * a.r - a.s * a.s * D;
    if (nrm == 0) throw Error("Q(sqrt D): inverse of zero");
    return normalize(a.q * a.r, -a.q * a.s, nrm);
  }
  std::optional<Elem> divide(const Elem& a, const Elem& b) const {
    return mul(a, inv(b));
  }
  std::string str(const Elem& a) const {
    if (a.s == 0) {
      if (a.q == 1) return a.r.str();
      return a.r.str() + "/" + a.q.str();
    }
    std::string body = "(" + a.r.str() + (a.s < 0 ? "-" : "+") +
                       int_abs(a.s).str() + "w)";
    if (a.q == 1) return body;
    return body + "/" + a.q.str();
  }
  // Accepted token forms: "5", "-5/3", "(17+3w)/8", "(-1-1w)/2", "(0+1w)".
  // Here w stands for sqrt(D) with D fixed by the field.
  Elem parse_coeff(std::string_view tok) const {
    auto fail = [&] {
      throw ParseError("Q(sqrt D): bad coefficient token '" +
                       std::string(tok) + "'");
    };
    auto to_int = [&](std::string_view sv) {
      if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
      return Int(std::string(sv));
    };
    Int r = 0, s = 0, q = 1;
    std::string_view body = tok;
    if (!tok.empty() && tok.front() == '(') {
      auto close = tok.find(')');
      if (close == std::string_view::npos) fail();
      body = tok.substr(1, close - 1);
      std::string_view rest = tok.substr(close + 1);
      if (!rest.empty()) {
        if (rest.front() != '/') fail();
        try {
          q = to_int(rest.substr(1));
        } catch (...) {
          fail();
        }
      }
      auto wpos = body.find('w');
      if (wpos == std::string_view::npos || wpos + 1 != body.size()) fail();
      std::string_view sw = body.substr(0, wpos);
      // split r part and s part at the last top-level sign
      std::size_t split = std::string_view::npos;
      for (std::size_t i = sw.size(); i-- > 1;) {
        if (sw[i] == '+' || sw[i] == '-') {
          split = i;
          break;
        }
      }
      if (split == std::string_view::npos) fail();
      try {
        r = to_int(sw.substr(0, split));
        std::string_view spart = sw.substr(split);
        if (spart == "+")
          s = 1;
        else if (spart == "-")
          s = -1;
        else
          s = to_int(spart);
      } catch (...) {
        fail();
      }
    } else {
      auto slash = tok.find('/');
      try {
        if (slash == std::string_view::npos) {
          r = to_int(tok);
        } else {
          r = to_int(tok.substr(0, slash));
          q = to_int(tok.substr(slash + 1));
        }
      } catch (...) {
        fail();
      }
    }
    return normalize(std::move(r), std::move(s), std::move(q));
  }
  std::string domain_tag() const { return "Quad:" + D.str(); }
  bool operator==(const QuadraticField& o) const { return D == o.D; }
};

}  // namespace knotcert

#endif  // KNOTCERT_RINGS_HPP
