// Algebraic-integrality verdicts with certifying primes, minimal polynomials
// of quadratic-field elements, the unit-leading-term specialization argument,
// exact factorization verification, and the m137 exact checks.
#ifndef KNOTCERT_INTEGRALITY_HPP
#define KNOTCERT_INTEGRALITY_HPP

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "knotcert/fixture_io.hpp"
#include "knotcert/parse.hpp"
#include "knotcert/resultant.hpp"
#include "knotcert/words.hpp"

namespace knotcert {

// Primitive integer minimal polynomial with positive leading coefficient;
// degree at most 2 here (quadratic-field elements).
using MinimalPolynomial = ZPoly;

// For e = (r + s sqrt(D))/q in lowest terms: s = 0 gives the primitive part
// of qY - r, otherwise the primitive part of (qY - r)^2 - s^2 D.
inline MinimalPolynomial minimal_polynomial(const QuadraticField& field,
                                            const QuadElem& e,
                                            const std::string& var = "Y") {
  const std::vector<std::string> yv{var};
  ZPoly f(IntegerRing{}, yv);
  if (e.s == 0) {
    f.add_term(Monomial{{1}}, e.q);
    f.add_term(Monomial{{0}}, -e.r);
  } else {
    // (qY - r)^2 - s^2 D
    f.add_term(Monomial{{2}}, e.q * e.q);
    f.add_term(Monomial{{1}}, -2 * e.q * e.r);
    f.add_term(Monomial{{0}}, e.r * e.r - e.s * e.s * field.D);
  }
  ZPoly prim = content_primitive(f).primitive;
  if (prim.leading().second < 0) prim = -prim;
  return prim;
}

struct IntegralityVerdict {
  std::string element;
  MinimalPolynomial minpoly;
  bool integral = false;
  std::vector<Int> certifying_primes;

  std::string line() const {
    std::ostringstream os;
    std::string mp = minpoly.str();
    std::erase(mp, ' ');
    os << "INTEGRALITY " << element << " minpoly=" << mp
       << " integral=" << (integral ? "yes" : "no") << " primes={";
    for (std::size_t i = 0; i < certifying_primes.size(); ++i) {
      if (i) os << ",";
      os << certifying_primes[i];
    }
    os << "}";
    return os.str();
  }
};

inline IntegralityVerdict integrality(const QuadraticField& field,
                                      const QuadElem& e) {
  IntegralityVerdict v;
  v.element = field.str(e);
  v.minpoly = minimal_polynomial(field, e);
  Int lead = v.minpoly.leading().second;
  v.integral = lead == 1;
  if (!v.integral) v.certifying_primes = prime_divisors(lead);
  return v;
}

// ---------------------------------------------------------------------------
// Unit-leading-term specialization argument: if the leading Y-coefficient of
// f(t, Y) is +-t^k and the specialization point is an algebraic unit, every
// root of the specialized polynomial is an algebraic integer.
// ---------------------------------------------------------------------------

enum class SpecializationOutcomeKind { all_roots_integral, no_conclusion };

struct IntegralSpecializationVerdict {
  SpecializationOutcomeKind kind = SpecializationOutcomeKind::no_conclusion;
  ZPoly leading_coefficient;
  std::string reason;
};

inline IntegralSpecializationVerdict integral_specialization_verdict(
    const ZPoly& f, bool t0_unit) {
  if (f.is_zero())
    throw Error("integral_specialization_verdict: zero polynomial");
  if (f.vars().size() != 2)
    throw Error("integral_specialization_verdict: expected variables (t, Y)");
  const std::string y = f.vars()[1];
  ZPoly lead = coefficients_in(f, y).back();
  IntegralSpecializationVerdict v;
  v.leading_coefficient = lead;
  if (lead.term_count() == 1 && int_abs(lead.leading().second) == 1) {
    int k = lead.leading().first.grade();
    if (k == 0 || t0_unit) {
      v.kind = SpecializationOutcomeKind::all_roots_integral;
      v.reason = k == 0 ? "monic in " + y
                        : "leading coefficient is a unit times t^" +
                              std::to_string(k);
      return v;
    }
    v.reason = "specialization point not known to be a unit";
    return v;
  }
  v.reason = "leading coefficient " + lead.str() +
             " is not a unit times a power of t";
  return v;
}

// ---------------------------------------------------------------------------
// Exact verification of claimed factorizations.
// ---------------------------------------------------------------------------

struct FactorizationVerdict {
  bool equal = false;        // product == target exactly
  int sign = 0;              // +1 or -1 when matched up to sign, else 0
  ZPoly product;
  ZPoly residual_difference;  // target - product on mismatch
  bool matches_up_to_sign() const { return sign != 0; }
};

inline FactorizationVerdict verify_factorization(
    const std::vector<std::pair<ZPoly, unsigned>>& claim,
    const ZPoly& target) {
  ZPoly prod = ZPoly::constant(target.ring(), target.vars(), 1);
  for (const auto& [factor, mult] : claim)
    prod = prod * with_vars(factor, target.vars()).pow(mult);
  FactorizationVerdict v;
  v.product = prod;
  if (prod == target) {
    v.equal = true;
    v.sign = 1;
  } else if (-prod == target) {
    v.sign = -1;
  } else {
    v.residual_difference = target - prod;
  }
  return v;
}

inline FactorizationVerdict verify_factorization(const FactorList& claim,
                                                 const ZPoly& target) {
  return verify_factorization(claim.factors, target);
}

// ---------------------------------------------------------------------------
// m137: exact checks on the bundled canonical-component data.
// ---------------------------------------------------------------------------

struct QuadMatrix {
  QuadraticField field{Int(-1)};
  std::array<QuadElem, 4> e;

  QuadMatrix mul(const QuadMatrix& o) const {
    auto& F = field;
    return QuadMatrix{
        field,
        {F.add(F.mul(e[0], o.e[0]), F.mul(e[1], o.e[2])),
         F.add(F.mul(e[0], o.e[1]), F.mul(e[1], o.e[3])),
         F.add(F.mul(e[2], o.e[0]), F.mul(e[3], o.e[2])),
         F.add(F.mul(e[2], o.e[1]), F.mul(e[3], o.e[3]))}};
  }
  QuadMatrix inverse() const {
    // adjugate over determinant; matrices here are unimodular
    auto& F = field;
    QuadElem det = F.sub(F.mul(e[0], e[3]), F.mul(e[1], e[2]));
    QuadElem idet = F.inv(det);
    return QuadMatrix{field,
                      {F.mul(e[3], idet), F.mul(F.neg(e[1]), idet),
                       F.mul(F.neg(e[2]), idet), F.mul(e[0], idet)}};
  }
  static QuadMatrix identity(const QuadraticField& field) {
    return QuadMatrix{field,
                      {field.one(), field.zero(), field.zero(), field.one()}};
  }
  // +1 for identity, -1 for minus identity, 0 otherwise
  int identity_sign() const {
    auto& F = field;
    bool plus = F.equal(e[0], F.one()) && F.is_zero(e[1]) &&
                F.is_zero(e[2]) && F.equal(e[3], F.one());
    if (plus) return 1;
    QuadElem m1 = F.neg(F.one());
    bool minus = F.equal(e[0], m1) && F.is_zero(e[1]) && F.is_zero(e[2]) &&
                 F.equal(e[3], m1);
    return minus ? -1 : 0;
  }
};

struct M137Checks {
  bool t4_coefficient_identity = false;   // (s+1)^2 (s-2) == t^4 coefficient
  bool t2_coefficient_identity = false;   // (s+1)(s+2)(s-2) == -(t^2 coeff)
  int t2_identity_sign = 0;               // recorded sign (-1 as published)
  int relator_identity_sign = 0;          // +-1 when the relator is +-I
  bool pass() const {
    return t4_coefficient_identity && t2_coefficient_identity &&
           relator_identity_sign != 0;
  }
};

inline M137Checks m137_checks(const ZPoly& pst, const Presentation& pres,
                              const Matrix2Fixture& mats) {
  M137Checks out;
  const std::vector<std::string> sv{"s"};
  auto coeffs = coefficients_in(pst, "t");  // ascending in t
  ZPoly c4 = with_vars(coeffs.at(4), sv);
  ZPoly c2 = with_vars(coeffs.at(2), sv);
  ZPoly lhs4 = parse_z("(s + 1)^2 * (s - 2)", sv);
  ZPoly lhs2 = parse_z("(s + 1) * (s + 2) * (s - 2)", sv);
  out.t4_coefficient_identity = lhs4 == c4;
  if (lhs2 == -c2) {
    out.t2_coefficient_identity = true;
    out.t2_identity_sign = -1;
  } else if (lhs2 == c2) {
    out.t2_coefficient_identity = true;
    out.t2_identity_sign = 1;
  }

  QuadMatrix a{mats.field, mats.matrices.at("a")};
  QuadMatrix b{mats.field, mats.matrices.at("b")};
  QuadMatrix A = a.inverse(), B = b.inverse();
  QuadMatrix m = QuadMatrix::identity(mats.field);
  for (std::int8_t l : pres.relators.at(0).letters) {
    switch (l) {
      case 1: m = m.mul(a); break;
      case -1: m = m.mul(A); break;
      case 2: m = m.mul(b); break;
      case -2: m = m.mul(B); break;
      default: throw Error("m137_checks: unexpected generator");
    }
  }
  out.relator_identity_sign = m.identity_sign();
  return out;
}

}  // namespace knotcert

#endif  // KNOTCERT_INTEGRALITY_HPP
