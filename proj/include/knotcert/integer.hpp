// Arbitrary-precision integers/rationals and small number-theory utilities.
#ifndef KNOTCERT_INTEGER_HPP
#define KNOTCERT_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Exact integer square root of a perfect square; throws otherwise.
inline Int exact_isqrt(const Int& n) {
  if (n < 0) throw Error("exact_isqrt: negative input");
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) throw Error("exact_isqrt: not a perfect square");
  return r;
}

// ---------------------------------------------------------------------------
// 64-bit modular arithmetic
// ---------------------------------------------------------------------------

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // p prime
  return powmod(a % p, p - 2, p);
}

// Deterministic Miller-Rabin, valid for all n < 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  if (n < 2) return 2;
  ++n;
  if ((n & 1) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

// Distinct prime factors by trial division (intended for small n).
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Smallest primitive root mod p (p an odd prime small enough to factor p-1).
inline std::uint64_t primitive_root(std::uint64_t p) {
  auto qs = prime_factors_u64(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t q : qs) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("primitive_root: none found (p not prime?)");
}

// Distinct prime divisors of an arbitrary-precision integer, by trial
// division.  Fine for the leading coefficients this toolkit meets.
inline std::vector<Int> prime_divisors(Int n) {
  n = int_abs(n);
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? Int(1) : Int(2))) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime_power(std::uint64_t d) {
  if (d < 2) throw Error("is_prime_power: d must be >= 2");
  return prime_factors_u64(d).size() == 1;
}

// Symmetric-range Chinese remainder reconstruction: residues r[i] mod m[i]
// combine to the unique integer in (-M/2, M/2].
inline Int crt_symmetric(const std::vector<std::uint64_t>& residues,
                         const std::vector<std::uint64_t>& moduli) {
  Int value = 0, modulus = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    Int m = moduli[i];
    // solve value + modulus * k == residues[i] (mod m)
    Int cur = value % m;
    if (cur < 0) cur += m;
    Int diff = (Int(residues[i]) - cur) % m;
    if (diff < 0) diff += m;
    Int minv = Int(invmod(static_cast<std::uint64_t>(modulus % m), moduli[i]));
    Int k = (diff * minv) % m;
    value += modulus * k;
    modulus *= m;
  }
  if (value * 2 > modulus) value -= modulus;
  return value;
}

}  // namespace knotcert

#endif  // KNOTCERT_INTEGER_HPP
