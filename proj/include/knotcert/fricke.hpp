// Trace polynomials in the character coordinates (X, Y, Z) = (tr a, tr b,
// tr ab) via the classical two-generator trace identities:
//   tr(uv) = tr(u) tr(v) - tr(u v^-1),  tr(w^-1) = tr(w),  tr cyclic-invariant.
// This is the validation engine; the matrix path is the production one.
#ifndef KNOTCERT_FRICKE_HPP
#define KNOTCERT_FRICKE_HPP

#include <map>
#include <string>
#include <vector>

#include "knotcert/poly.hpp"
#include "knotcert/words.hpp"

namespace knotcert {

class BudgetError : public Error {
 public:
  using Error::Error;
};

namespace detail {

class FrickeEngine {
 public:
  using P = MultiPoly<IntegerRing>;

  FrickeEngine() : vars_{"X", "Y", "Z"} {}

  P trace(const GroupWord& w0) {
    GroupWord w = w0.cyclic_reduce();
    GroupWord key = canonical_key(w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    P result = compute(w);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  P compute(const GroupWord& w) {
    std::size_t n = w.size();
    if (n == 0) return constant(2);
    if (n == 1) return gen_trace(w.letters[0]);
    if (n == 2) {
      std::int8_t u = w.letters[0], v = w.letters[1];
      if (u == v)  // g^2: tr(g)^2 - 2
        return gen_trace(u) * gen_trace(u) - constant(2);
      // mixed generators, exponents +-1
      bool same_sign = (u > 0) == (v > 0);
      // tr(ab) = tr(ba) = tr(AB) = tr(BA) = Z; tr(aB) etc. = XY - Z
      if (same_sign) return var("Z");
      return var("X") * var("Y") - var("Z");
    }

    // squared letter somewhere in the cyclic word: w ~ g g v
    for (std::size_t k = 0; k < n; ++k) {
      if (w.letters[k] == w.letters[(k + 1) % n]) {
        GroupWord r = w.rotated(k);
        std::int8_t g = r.letters[0];
        GroupWord gv, v;
        gv.letters.assign(r.letters.begin() + 1, r.letters.end());
        v.letters.assign(r.letters.begin() + 2, r.letters.end());
        return gen_trace(g) * trace(gv) - trace(v);
      }
    }

    // an inverse letter somewhere: rotate it to the end, w ~ p g^-1
    for (std::size_t k = 0; k < n; ++k) {
      if (w.letters[k] < 0) {
        GroupWord r = w.rotated((k + 1) % n);
        GroupWord p;
        p.letters.assign(r.letters.begin(), r.letters.end() - 1);
        GroupWord pg = p;
        pg.letters.push_back(static_cast<std::int8_t>(-r.letters.back()));
        return trace(p) * gen_trace(r.letters.back()) - trace(pg);
      }
    }

    // positive alternating word (ab)^k: peel the leading pair
    GroupWord u, v;
    u.letters.assign(w.letters.begin(), w.letters.begin() + 2);
    v.letters.assign(w.letters.begin() + 2, w.letters.end());
    GroupWord uinv_v = u.inverse().concat(v).free_reduce();
    return var("Z") * trace(v) - trace(uinv_v);
  }

  P gen_trace(std::int8_t l) const {
    return var((l == 1 || l == -1) ? "X" : "Y");
  }
  P var(const std::string& n) const {
    return P::variable(IntegerRing{}, vars_, n);
  }
  P constant(int c) const { return P::constant(IntegerRing{}, vars_, c); }

  // Lexicographically minimal representative over all rotations of w and of
  // its inverse; traces are invariant under both.
  static GroupWord canonical_key(const GroupWord& w) {
    GroupWord best = w;
    for (const GroupWord& base : {w, w.inverse()}) {
      for (std::size_t k = 0; k < std::max<std::size_t>(base.size(), 1);
           ++k) {
        GroupWord cand = base.rotated(k);
        if (cand < best) best = cand;
      }
    }
    return best;
  }

  std::vector<std::string> vars_;
  std::map<GroupWord, P> memo_;
};

}  // namespace detail

// The memo table lives and dies with a single call, so concurrent calls do
// not share state.
inline MultiPoly<IntegerRing> trace_poly(const GroupWord& w,
                                         std::size_t budget = 12) {
  GroupWord reduced = w.free_reduce();
  if (reduced.size() > budget)
    throw BudgetError("trace_poly: word length " +
                      std::to_string(reduced.size()) +
                      " exceeds the budget of " + std::to_string(budget));
  for (std::int8_t l : reduced.letters)
    if (l != 1 && l != -1 && l != 2 && l != -2)
      throw Error("trace_poly: word uses a generator beyond {a, b}");
  detail::FrickeEngine engine;
  return engine.trace(reduced);
}

}  // namespace knotcert

#endif  // KNOTCERT_FRICKE_HPP
