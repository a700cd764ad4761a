// The 2x2 Laurent-matrix representation with the meridian of the knotted
// component pinned parabolic:
//
//   a -> [ x  1 ]      b -> [ y            0  ]
//        [ 0 1/x ]          [ -xy-2-1/(xy) 1/y ]
//
// Entries live in Z[x, 1/x, y, 1/y]; inverses are adjugates (det = 1), so
// every word stays inside the Laurent ring.
#ifndef KNOTCERT_REPMAT_HPP
#define KNOTCERT_REPMAT_HPP

#include <array>

#include "knotcert/parse.hpp"
#include "knotcert/symmetrize.hpp"
#include "knotcert/words.hpp"

namespace knotcert {

struct ParamMatrix {
  // row-major: e[0] e[1] / e[2] e[3]
  std::array<MultiPoly<IntegerRing>, 4> e;

  ParamMatrix operator*(const ParamMatrix& o) const {
    return ParamMatrix{{e[0] * o.e[0] + e[1] * o.e[2],
                        e[0] * o.e[1] + e[1] * o.e[3],
                        e[2] * o.e[0] + e[3] * o.e[2],
                        e[2] * o.e[1] + e[3] * o.e[3]}};
  }
  ParamMatrix operator-(const ParamMatrix& o) const {
    return ParamMatrix{
        {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]}};
  }
  MultiPoly<IntegerRing> det() const { return e[0] * e[3] - e[1] * e[2]; }
  MultiPoly<IntegerRing> trace() const { return e[0] + e[3]; }
  // Inverse of a determinant-one matrix.
  ParamMatrix adjugate() const {
    return ParamMatrix{{e[3], -e[1], -e[2], e[0]}};
  }
};

namespace detail {

inline const std::vector<std::string>& xy_vars() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

inline ParamMatrix rep_identity() {
  auto one = MultiPoly<IntegerRing>::constant(IntegerRing{}, xy_vars(), 1);
  auto zero = MultiPoly<IntegerRing>::zero(IntegerRing{}, xy_vars());
  return ParamMatrix{{one, zero, zero, one}};
}

inline const std::array<ParamMatrix, 4>& rep_generators() {
  // order: a, a^-1, b, b^-1
  static const std::array<ParamMatrix, 4> gens = [] {
    auto L = [](const char* s) { return parse_z(s, xy_vars(), true); };
    ParamMatrix a{{L("x"), L("1"), L("0"), L("x^(-1)")}};
    ParamMatrix A = a.adjugate();
    ParamMatrix b{{L("y"), L("0"), L("-x*y - 2 - x^(-1)*y^(-1)"),
                   L("y^(-1)")}};
    ParamMatrix B = b.adjugate();
    return std::array<ParamMatrix, 4>{a, A, b, B};
  }();
  return gens;
}

}  // namespace detail

// Image of a word over generators {a, b}; the word is freely reduced first.
inline ParamMatrix rep_matrix(const GroupWord& w) {
  GroupWord r = w.free_reduce();
  ParamMatrix m = detail::rep_identity();
  const auto& gens = detail::rep_generators();
  for (std::int8_t l : r.letters) {
    switch (l) {
      case 1: m = m * gens[0]; break;
      case -1: m = m * gens[1]; break;
      case 2: m = m * gens[2]; break;
      case -2: m = m * gens[3]; break;
      default:
        throw Error("rep_matrix: word uses a generator beyond {a, b}");
    }
  }
  return m;
}

// Character of a word in the trace coordinates X = x+1/x, Y = y+1/y.
inline MultiPoly<IntegerRing> trace_in_XY(const GroupWord& w) {
  return symmetrize(rep_matrix(w).trace());
}

// The meridian trace relation Q(t, X, Y) = chi(m0) - t for the bundled
// meridian word of the unknotted component.
inline MultiPoly<IntegerRing> derive_meridian_trace(const Presentation& pres,
                                                    const std::string& name) {
  MultiPoly<IntegerRing> chi = trace_in_XY(pres.word(name));
  std::vector<std::string> tXY{"t", "X", "Y"};
  MultiPoly<IntegerRing> q = with_vars(chi, tXY);
  return q - MultiPoly<IntegerRing>::variable(IntegerRing{}, tXY, "t");
}

// Entries of rep(w1 w2) - rep(w3 w4)^{-1}, each cleared by its minimal
// monomial.  These vanish on the character curve.
inline std::array<MultiPoly<IntegerRing>, 4> relation_entries(
    const Presentation& pres) {
  GroupWord left = pres.word("w1").concat(pres.word("w2"));
  GroupWord right = pres.word("w3").concat(pres.word("w4"));
  ParamMatrix diff = rep_matrix(left) - rep_matrix(right).adjugate();
  std::array<MultiPoly<IntegerRing>, 4> out{
      clear_denominators(diff.e[0]), clear_denominators(diff.e[1]),
      clear_denominators(diff.e[2]), clear_denominators(diff.e[3])};
  return out;
}

}  // namespace knotcert

#endif  // KNOTCERT_REPMAT_HPP
