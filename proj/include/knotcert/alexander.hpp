// Alexander polynomials of the odd cyclic branched-cover knots via the
// product over nontrivial d-th roots of unity, computed exactly as a
// resultant against (v^d - 1)/(v - 1).
#ifndef KNOTCERT_ALEXANDER_HPP
#define KNOTCERT_ALEXANDER_HPP

#include <sstream>
#include <string>

#include "knotcert/parse.hpp"
#include "knotcert/resultant.hpp"

namespace knotcert {

// (v^d - 1)/(v - 1) = 1 + v + ... + v^(d-1), over the given variable list.
inline ZPoly root_of_unity_quotient(int d,
                                    const std::vector<std::string>& vars,
                                    const std::string& v) {
  ZPoly psi(IntegerRing{}, vars);
  std::size_t vi = 0;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) vi = i;
  for (int k = 0; k < d; ++k) {
    Monomial m{std::vector<int>(vars.size(), 0)};
    m.exps[vi] = k;
    psi.add_term(std::move(m), Int(1));
  }
  return psi;
}

// prod_{i=1}^{d-1} delta(u, z^i) over a primitive d-th root of unity z,
// as Res_v((v^d-1)/(v-1), delta).  d = 1 gives the empty product 1.
inline ZPoly branched_cover_alexander(const ZPoly& delta, int d) {
  if (d < 1) throw Error("branched_cover_alexander: d must be >= 1");
  if (delta.vars().size() != 2)
    throw Error("branched_cover_alexander: expected variables (u, v)");
  const std::string u = delta.vars()[0], v = delta.vars()[1];
  std::vector<std::string> uv{u};
  if (d == 1) return ZPoly::constant(IntegerRing{}, uv, 1);
  ZPoly psi = root_of_unity_quotient(d, delta.vars(), v);
  return resultant(psi, delta, v);
}

// Exact leading u-coefficient of the d-cover product for the bundled link:
// prod z^i (z^i - 2) (z^{3i} - z^i + 1) over nontrivial d-th roots z^i,
// computed as resultants of (v^d-1)/(v-1) against v, v - 2 and v^3 - v + 1.
inline Int leading_coeff_product(int d) {
  if (d < 2) throw Error("leading_coeff_product: d must be >= 2");
  const std::vector<std::string> vv{"v"};
  ZPoly psi = root_of_unity_quotient(d, vv, "v");
  auto res_against = [&](const ZPoly& g) {
    ZPoly r = resultant(psi, g, "v");
    return r.is_zero() ? Int(0) : r.leading().second;
  };
  Int a = res_against(parse_z("v", vv));
  Int b = res_against(parse_z("v - 2", vv));
  Int c = res_against(parse_z("v^3 - v + 1", vv));
  return a * b * c;
}

// Trivial up to units: +-u^k.
inline bool is_trivial_alexander(const ZPoly& f) {
  if (f.is_zero()) throw Error("is_trivial_alexander: zero polynomial");
  return f.term_count() == 1 && int_abs(f.leading().second) == 1;
}

struct TorresCheck {
  bool divisible = false;
  bool quotient_matches = false;
  ZPoly quotient;
  bool pass() const { return divisible && quotient_matches; }
};

// Consistency of the bundled two-variable polynomial with the knotted
// component: with linking number 2, delta(1, v) must be (v + 1) times the
// one-variable polynomial of the knotted component 7_6.
inline TorresCheck torres_check(const ZPoly& delta) {
  const std::string u = delta.vars()[0], v = delta.vars()[1];
  ZPoly at1 = drop_var(substitute_const(delta, u, Int(1)), u);
  const std::vector<std::string> vv{v};
  TorresCheck out{false, false, ZPoly::zero(IntegerRing{}, vv)};
  auto q = divides(parse_z(v + " + 1", vv), at1);
  if (!q) return out;
  out.divisible = true;
  out.quotient = *q;
  ZPoly expected =
      parse_z(v + "^4 - 5*" + v + "^3 + 7*" + v + "^2 - 5*" + v + " + 1", vv);
  out.quotient_matches = out.quotient == expected;
  return out;
}

inline std::string alex_line(int d, const ZPoly& cover_poly) {
  std::ostringstream os;
  os << "ALEX d=" << d << " degree=" << cover_poly.degree_in(cover_poly.vars()[0])
     << " lead="
     << (cover_poly.is_zero() ? Int(0) : cover_poly.leading().second)
     << " trivial=" << (is_trivial_alexander(cover_poly) ? "yes" : "no");
  return os.str();
}

}  // namespace knotcert

#endif  // KNOTCERT_ALEXANDER_HPP
