// Cyclotomic polynomials and the unit criteria for 2cos(2pi/d) - c, detected
// through rational integer norms (resultants against Phi_d) rather than
// arithmetic in the cyclotomic field itself.
#ifndef KNOTCERT_CYCLOTOMIC_HPP
#define KNOTCERT_CYCLOTOMIC_HPP

#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "knotcert/parse.hpp"
#include "knotcert/resultant.hpp"

namespace knotcert {

// Phi_d, by the quotient recursion x^d - 1 = prod_{e | d} Phi_e with exact
// division.  The cache is append-only and shared behind a mutex.
inline ZPoly cyclotomic(int d) {
  if (d < 1) throw Error("cyclotomic: d must be >= 1");
  static std::mutex mu;
  static std::vector<ZPoly> cache;  // cache[k] = Phi_{k+1}
  std::scoped_lock lock(mu);
  const std::vector<std::string> xv{"x"};
  if (cache.empty())
    cache.push_back(parse_z("x - 1", xv));
  while (static_cast<int>(cache.size()) < d) {
    int n = static_cast<int>(cache.size()) + 1;
    // x^n - 1
    ZPoly num(IntegerRing{}, xv);
    num.add_term(Monomial{{n}}, Int(1));
    num.add_term(Monomial{{0}}, Int(-1));
    ZPoly den = ZPoly::constant(IntegerRing{}, xv, 1);
    for (int e = 1; e < n; ++e)
      if (n % e == 0) den = den * cache[static_cast<std::size_t>(e - 1)];
    auto q = divides(den, num);
    if (!q) throw Error("cyclotomic: exact division failed");
    cache.push_back(*q);
  }
  return cache[static_cast<std::size_t>(d - 1)];
}

// Res(Phi_d, g) = prod of g over the primitive d-th roots of unity.
inline Int norm_of(const ZPoly& g, int d) {
  if (d < 1) throw Error("norm_of: d must be >= 1");
  if (g.vars().size() != 1)
    throw Error("norm_of: expected a univariate polynomial");
  ZPoly phi = with_vars(cyclotomic(d), g.vars());
  if (g.degree_in(g.vars()[0]) == 0) {
    // Res(phi, c) = c^deg(phi)
    return int_pow(g.is_zero() ? Int(0) : g.leading().second,
                   static_cast<unsigned>(phi.degree_in(g.vars()[0])));
  }
  ZPoly r = resultant(phi, g, g.vars()[0]);
  if (r.is_zero()) return 0;
  if (!r.leading().first.is_constant())
    throw Error("norm_of: resultant is not a constant");
  return r.leading().second;
}

inline bool prime_power(int d) {
  if (d < 2) throw Error("prime_power: d must be >= 2");
  return is_prime_power(static_cast<std::uint64_t>(d));
}

struct UnitVerdict {
  std::string expression;
  Int norm;  // magnitude of the norm from the real subfield Q(2cos(2pi/d))
  bool is_unit = false;
};

// Unit status of 2cos(2pi/d) - c.  The quotient
// norm_of(x^2 - c x + 1, d) / norm_of(x, d) is the norm from the d-th
// cyclotomic field; since the element is real and the cyclotomic field is a
// quadratic extension of its real subfield, that quotient is a perfect
// square, and its exact square root is the real-subfield norm (up to sign,
// which unit detection does not need).
inline UnitVerdict unit_2cos_shift(int d, const Int& c) {
  if (d < 3) throw Error("unit_2cos_shift: d must be >= 3");
  const std::vector<std::string> xv{"x"};
  ZPoly g(IntegerRing{}, xv);
  g.add_term(Monomial{{2}}, Int(1));
  if (c != 0) g.add_term(Monomial{{1}}, -c);
  g.add_term(Monomial{{0}}, Int(1));
  Int n1 = norm_of(g, d);
  Int n0 = norm_of(parse_z("x", xv), d);
  if (int_abs(n0) != 1) throw Error("unit_2cos_shift: unexpected root norm");
  Int cyclo_norm = n1 * n0;  // division by +-1
  UnitVerdict v;
  std::ostringstream os;
  os << "2cos(2pi/" << d << ")" << (c >= 0 ? "-" : "+") << int_abs(c);
  v.expression = os.str();
  v.norm = exact_isqrt(int_abs(cyclo_norm));
  v.is_unit = v.norm == 1;
  return v;
}

// ---------------------------------------------------------------------------
// Unit analysis for the m137 filling parameters s + 1 and s - 2, where
// s = 2cos(2pi/d) for odd d and 2cos(2pi/2d) for even d.
// ---------------------------------------------------------------------------

struct M137UnitReport {
  int d = 0;
  int order = 0;  // d (odd) or 2d (even)
  UnitVerdict s_plus_1;
  UnitVerdict s_minus_2;
  bool obstructed() const {
    return !(s_plus_1.is_unit && s_minus_2.is_unit);
  }
  std::string line() const {
    std::ostringstream os;
    os << "UNITS d=" << d << " order=" << order
       << " s_plus_1=" << s_plus_1.norm << " s_minus_2=" << s_minus_2.norm
       << " obstruction=" << (obstructed() ? "yes" : "no");
    return os.str();
  }
};

inline M137UnitReport m137_unit_report(int d) {
  if (d < 3) throw Error("m137_unit_report: d must be >= 3");
  M137UnitReport r;
  r.d = d;
  r.order = d % 2 == 1 ? d : 2 * d;
  r.s_plus_1 = unit_2cos_shift(r.order, Int(-1));
  r.s_minus_2 = unit_2cos_shift(r.order, Int(2));
  return r;
}

}  // namespace knotcert

#endif  // KNOTCERT_CYCLOTOMIC_HPP
