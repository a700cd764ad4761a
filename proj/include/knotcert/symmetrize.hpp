// Conversion of bi-symmetric Laurent polynomials f(x, y) (invariant under
// x -> 1/x and under y -> 1/y separately) into the trace coordinates
// X = x + 1/x, Y = y + 1/y: expand in the basis s_i(x) s_j(y) with
// s_0 = 1, s_i(u) = u^i + u^-i, and map s_i to q_i where
// q_0 = 1, q_1 = X, q_{i+1} = X q_i - q_{i-1}.
#ifndef KNOTCERT_SYMMETRIZE_HPP
#define KNOTCERT_SYMMETRIZE_HPP

#include <string>
#include <vector>

#include "knotcert/poly.hpp"

namespace knotcert {

class SymmetryError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// q_i as a polynomial in one designated variable of `vars`:
// q_0 = 1, q_i(u + 1/u) = u^i + u^-i for i >= 1.  The recursion
// q_{i+1} = X q_i - q_{i-1} runs on the power sums, whose i = 0 member is 2,
// so q_2 = X^2 - 2 (not X q_1 - q_0).
inline const MultiPoly<IntegerRing>& cheb_like(
    std::vector<MultiPoly<IntegerRing>>& cache,
    const std::vector<std::string>& vars, const std::string& var, int i) {
  if (cache.empty()) {
    auto one = MultiPoly<IntegerRing>::constant(IntegerRing{}, vars, 1);
    auto X = MultiPoly<IntegerRing>::variable(IntegerRing{}, vars, var);
    cache.push_back(one);
    cache.push_back(X);
    cache.push_back(X * X - one.scaled(Int(2)));
  }
  while (static_cast<int>(cache.size()) <= i)
    cache.push_back(cache[1] * cache[cache.size() - 1] -
                    cache[cache.size() - 2]);
  return cache[static_cast<std::size_t>(i)];
}

}  // namespace detail

// f must be a Laurent polynomial in exactly the variables (x, y) in order.
// Returns the unique g(X, Y) with g(x + 1/x, y + 1/y) = f(x, y).
inline MultiPoly<IntegerRing> symmetrize(const MultiPoly<IntegerRing>& f) {
  if (f.vars().size() != 2)
    throw Error("symmetrize: expected exactly two variables");

  // Verify bi-symmetry term by term and point at the first offender.
  for (const auto& [m, c] : f.terms()) {
    for (int axis = 0; axis < 2; ++axis) {
      Monomial mirror = m;
      mirror.exps[axis] = -mirror.exps[axis];
      auto it = f.terms().find(mirror);
      if (it == f.terms().end() || it->second != c) {
        throw SymmetryError(
            "symmetrize: input not invariant under " + f.vars()[axis] +
            " -> 1/" + f.vars()[axis] + " at monomial " + f.vars()[0] + "^" +
            std::to_string(m.exps[0]) + " " + f.vars()[1] + "^" +
            std::to_string(m.exps[1]));
      }
    }
  }

  const std::vector<std::string> XY{"X", "Y"};
  std::vector<MultiPoly<IntegerRing>> qx, qy;
  MultiPoly<IntegerRing> rest = f;
  MultiPoly<IntegerRing> out(IntegerRing{}, XY);
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading();
    int i = m.exps[0], j = m.exps[1];
    // bi-symmetry forces the leading monomial into the closed first quadrant
    if (i < 0 || j < 0)
      throw SymmetryError("symmetrize: residual with negative support");
    // subtract c * s_i(x) s_j(y)
    std::vector<int> xs = (i == 0) ? std::vector<int>{0}
                                   : std::vector<int>{i, -i};
    std::vector<int> ys = (j == 0) ? std::vector<int>{0}
                                   : std::vector<int>{j, -j};
    for (int a : xs)
      for (int b : ys)
        rest.add_term(Monomial{{a, b}}, -c);
    out = out + (detail::cheb_like(qx, XY, "X", i) *
                 detail::cheb_like(qy, XY, "Y", j))
                    .scaled(c);
  }
  return out;
}

}  // namespace knotcert

#endif  // KNOTCERT_SYMMETRIZE_HPP
