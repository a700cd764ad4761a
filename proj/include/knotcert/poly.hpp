// Sparse multivariate (and Laurent) polynomials over an exact coefficient
// ring, kept permanently in canonical form: terms ordered graded-lex
// descending under the declared variable order, no zero coefficients stored.
#ifndef KNOTCERT_POLY_HPP
#define KNOTCERT_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotcert/rings.hpp"

namespace knotcert {

struct Monomial {
  std::vector<int> exps;

  bool operator==(const Monomial&) const = default;

  int grade() const {
    int g = 0;
    for (int e : exps) g += e;
    return g;
  }
  bool is_constant() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  }
  bool has_negative() const {
    return std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; });
  }
  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
    return r;
  }
  // Componentwise divisibility (for ordinary, non-Laurent division).
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
    return r;
  }
};

// Graded-lexicographic, descending: the map's begin() is the leading term.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int ga = a.grade(), gb = b.grade();
    if (ga != gb) return ga > gb;
    return a.exps > b.exps;
  }
};

template <class Ring>
class MultiPoly {
 public:
  using Elem = typename Ring::Elem;
  using TermMap = std::map<Monomial, Elem, GrlexDesc>;

  MultiPoly(Ring ring, std::vector<std::string> vars)
      : ring_(std::move(ring)), vars_(std::move(vars)) {}

  // Zero polynomial in no variables; only for rings without parameters.
  MultiPoly() requires std::is_default_constructible_v<Ring> = default;

  static MultiPoly zero(Ring ring, std::vector<std::string> vars) {
    return MultiPoly(std::move(ring), std::move(vars));
  }
  static MultiPoly constant(Ring ring, std::vector<std::string> vars,
                            Elem c) {
    MultiPoly f(ring, std::move(vars));
    f.add_term(Monomial{std::vector<int>(f.vars_.size(), 0)}, std::move(c));
    return f;
  }
  static MultiPoly variable(Ring ring, std::vector<std::string> vars,
                            const std::string& name) {
    MultiPoly f(ring, vars);
    Monomial m{std::vector<int>(vars.size(), 0)};
    m.exps[f.var_index(name)] = 1;
    f.add_term(std::move(m), f.ring_.one());
    return f;
  }

  const Ring& ring() const { return ring_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::size_t var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw Error("unknown variable '" + name + "'");
  }
  bool has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  void add_term(Monomial m, Elem c) {
    if (m.exps.size() != vars_.size())
      throw Error("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!ring_.is_zero(c)) terms_.emplace(std::move(m), std::move(c));
    } else {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_laurent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.has_negative(); });
  }

  int degree_in(const std::string& var) const {
    std::size_t i = var_index(var);
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.exps[i] > d) d = m.exps[i];
      first = false;
    }
    return terms_.empty() ? -1 : d;
  }
  int min_exp_in(const std::string& var) const {
    std::size_t i = var_index(var);
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first || m.exps[i] < d) d = m.exps[i];
      first = false;
    }
    return d;
  }

  const std::pair<const Monomial, Elem>& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.begin();
  }

  void check_compatible(const MultiPoly& o) const {
    if (!(ring_ == o.ring_) || vars_ != o.vars_)
      throw DomainMismatchError("polynomial domain/variable mismatch");
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, ring_.neg(c));
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(ring_, vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_.neg(c));
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(ring_, vars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_)
        r.add_term(m1.times(m2), ring_.mul(c1, c2));
    return r;
  }
  MultiPoly scaled(const Elem& c) const {
    MultiPoly r(ring_, vars_);
    if (ring_.is_zero(c)) return r;
    for (const auto& [m, cc] : terms_) r.add_term(m, ring_.mul(cc, c));
    return r;
  }
  MultiPoly shifted(const Monomial& m) const {
    MultiPoly r(ring_, vars_);
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm.times(m), cc);
    return r;
  }
  MultiPoly pow(unsigned e) const {
    MultiPoly base = *this;
    MultiPoly r = constant(ring_, vars_, ring_.one());
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    if (!(ring_ == o.ring_) || vars_ != o.vars_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it1 = terms_.begin();
    auto it2 = o.terms_.begin();
    for (; it1 != terms_.end(); ++it1, ++it2) {
      if (!(it1->first == it2->first)) return false;
      if (!ring_.equal(it1->second, it2->second)) return false;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Canonical expression string: terms in canonical order, explicit '*',
  // exponents via '^', negative exponents parenthesized.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string tok = ring_.str(c);
      bool negative = !tok.empty() && tok[0] == '-';
      std::string mag = negative ? tok.substr(1) : tok;
      if (first) {
        if (negative) os << "-";
        first = false;
      } else {
        os << (negative ? " - " : " + ");
      }
      std::string mono = mono_str(m);
      if (mono.empty()) {
        os << mag;
      } else if (mag == "1") {
        os << mono;
      } else {
        os << mag << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  std::string mono_str(const Monomial& m) const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[i];
      if (e != 1) {
        out += "^";
        if (e < 0)
          out += "(" + std::to_string(e) + ")";
        else
          out += std::to_string(e);
      }
    }
    return out;
  }

  Ring ring_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Structural helpers
// ---------------------------------------------------------------------------

// Re-express f over a variable list that contains every variable f uses.
template <class Ring>
MultiPoly<Ring> with_vars(const MultiPoly<Ring>& f,
                          const std::vector<std::string>& newvars) {
  std::vector<int> pos(f.vars().size(), -1);
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    for (std::size_t j = 0; j < newvars.size(); ++j)
      if (newvars[j] == f.vars()[i]) pos[i] = static_cast<int>(j);
  }
  MultiPoly<Ring> r(f.ring(), newvars);
  for (const auto& [m, c] : f.terms()) {
    Monomial nm{std::vector<int>(newvars.size(), 0)};
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (pos[i] < 0)
        throw Error("with_vars: variable '" + f.vars()[i] +
                     "' not in target list");
      nm.exps[pos[i]] = m.exps[i];
    }
    r.add_term(std::move(nm), c);
  }
  return r;
}

// Coefficients of f viewed as univariate in `var`, exponent ascending,
// expressed over the remaining variables.
template <class Ring>
std::vector<MultiPoly<Ring>> coefficients_in(const MultiPoly<Ring>& f,
                                             const std::string& var) {
  std::size_t vi = f.var_index(var);
  int deg = std::max(f.degree_in(var), 0);
  if (f.min_exp_in(var) < 0)
    throw Error("coefficients_in: negative exponents present");
  std::vector<std::string> rest;
  for (const auto& v : f.vars())
    if (v != var) rest.push_back(v);
  std::vector<MultiPoly<Ring>> out(
      static_cast<std::size_t>(deg) + 1,
      MultiPoly<Ring>::zero(f.ring(), rest));
  for (const auto& [m, c] : f.terms()) {
    Monomial nm{std::vector<int>()};
    nm.exps.reserve(rest.size());
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (i != vi) nm.exps.push_back(m.exps[i]);
    out[static_cast<std::size_t>(m.exps[vi])].add_term(std::move(nm), c);
  }
  return out;
}

// Substitute an integer constant for one variable (variable list unchanged).
template <class Ring>
MultiPoly<Ring> substitute_const(const MultiPoly<Ring>& f,
                                 const std::string& var, const Int& value) {
  std::size_t vi = f.var_index(var);
  typename Ring::Elem v = f.ring().from_int(value);
  MultiPoly<Ring> r(f.ring(), f.vars());
  for (const auto& [m, c] : f.terms()) {
    int e = m.exps[vi];
    if (e < 0) throw Error("substitute_const: negative exponent");
    typename Ring::Elem cc = c;
    for (int k = 0; k < e; ++k) cc = f.ring().mul(cc, v);
    Monomial nm = m;
    nm.exps[vi] = 0;
    r.add_term(std::move(nm), std::move(cc));
  }
  return r;
}

// Remove a variable that no longer occurs.
template <class Ring>
MultiPoly<Ring> drop_var(const MultiPoly<Ring>& f, const std::string& var) {
  if (f.degree_in(var) > 0 || f.min_exp_in(var) < 0)
    throw Error("drop_var: variable still occurs");
  std::vector<std::string> rest;
  for (const auto& v : f.vars())
    if (v != var) rest.push_back(v);
  std::size_t vi = f.var_index(var);
  MultiPoly<Ring> r(f.ring(), rest);
  for (const auto& [m, c] : f.terms()) {
    Monomial nm{std::vector<int>()};
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (i != vi) nm.exps.push_back(m.exps[i]);
    r.add_term(std::move(nm), c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation, with coefficient embedding Z -> K when the source ring is Z.
// ---------------------------------------------------------------------------

namespace detail {
template <class K, class Ring>
typename K::Elem convert_coeff(const K& target, const Ring& source,
                               const typename Ring::Elem& c) {
  if constexpr (std::is_same_v<K, Ring>) {
    (void)source;
    return c;
  } else if constexpr (std::is_same_v<Ring, IntegerRing>) {
    (void)source;
    return target.from_int(c);
  } else {
    static_assert(std::is_same_v<Ring, IntegerRing> || std::is_same_v<K, Ring>,
                  "no coefficient embedding for this ring pair");
  }
}
}  // namespace detail

// Full evaluation of f at an assignment covering every variable of f.
template <class K, class Ring>
typename K::Elem evaluate_in(
    const MultiPoly<Ring>& f, const K& field,
    const std::map<std::string, typename K::Elem>& assignment) {
  std::vector<typename K::Elem> point;
  point.reserve(f.vars().size());
  for (const auto& v : f.vars()) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw Error("evaluate: missing binding for variable '" + v + "'");
    point.push_back(it->second);
  }
  typename K::Elem acc = field.zero();
  for (const auto& [m, c] : f.terms()) {
    typename K::Elem term = detail::convert_coeff(field, f.ring(), c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = m.exps[i];
      if (e == 0) continue;
      typename K::Elem base = point[i];
      if (e < 0) {
        if constexpr (requires { field.inv(base); }) {
          base = field.inv(base);
          e = -e;
        } else {
          throw Error("evaluate: negative exponent over a non-field");
        }
      }
      for (int k = 0; k < e; ++k) term = field.mul(term, base);
    }
    acc = field.add(acc, term);
  }
  return acc;
}

template <class Ring>
typename Ring::Elem evaluate(
    const MultiPoly<Ring>& f,
    const std::map<std::string, typename Ring::Elem>& assignment) {
  return evaluate_in(f, f.ring(), assignment);
}

// ---------------------------------------------------------------------------
// The two structural substitutions
// ---------------------------------------------------------------------------

// f(..., var, ...) -> f(..., var^m, ...): every exponent of var times m.
template <class Ring>
MultiPoly<Ring> stretch(const MultiPoly<Ring>& f, const std::string& var,
                        int m) {
  if (m < 1) throw Error("stretch: m must be >= 1");
  std::size_t vi = f.var_index(var);
  MultiPoly<Ring> r(f.ring(), f.vars());
  for (const auto& [mo, c] : f.terms()) {
    Monomial nm = mo;
    nm.exps[vi] *= m;
    r.add_term(std::move(nm), c);
  }
  return r;
}

// X^t_deg * f(X + 1/X, other vars), denominators cleared.  The substituted
// variable is replaced by `new_var`, which becomes the first variable of the
// result; the output is palindromic in it.
template <class Ring>
MultiPoly<Ring> reciprocal_lift(const MultiPoly<Ring>& f,
                                const std::string& t_var, int t_deg,
                                const std::string& new_var) {
  int dt = f.degree_in(t_var);
  if (f.min_exp_in(t_var) < 0)
    throw Error("reciprocal_lift: Laurent input not supported");
  if (t_deg < dt)
    throw Error("reciprocal_lift: t_deg below the actual degree");
  std::vector<std::string> outvars{new_var};
  for (const auto& v : f.vars())
    if (v != t_var) outvars.push_back(v);

  // (X^2 + 1)^i, cached
  MultiPoly<Ring> x2p1(f.ring(), outvars);
  {
    Monomial m2{std::vector<int>(outvars.size(), 0)};
    m2.exps[0] = 2;
    x2p1.add_term(m2, f.ring().one());
    x2p1.add_term(Monomial{std::vector<int>(outvars.size(), 0)},
                  f.ring().one());
  }
  std::vector<MultiPoly<Ring>> pw{
      MultiPoly<Ring>::constant(f.ring(), outvars, f.ring().one())};
  for (int i = 1; i <= dt; ++i) pw.push_back(pw.back() * x2p1);

  std::size_t vi = f.var_index(t_var);
  MultiPoly<Ring> r(f.ring(), outvars);
  for (const auto& [m, c] : f.terms()) {
    int i = m.exps[vi];
    Monomial base{std::vector<int>(outvars.size(), 0)};
    base.exps[0] = t_deg - i;
    std::size_t k = 1;
    for (std::size_t j = 0; j < m.exps.size(); ++j) {
      if (j == vi) continue;
      base.exps[k++] = m.exps[j];
    }
    // c * X^(t_deg - i) * (X^2+1)^i * rest
    for (const auto& [pm, pc] : pw[static_cast<std::size_t>(i)].terms())
      r.add_term(pm.times(base), f.ring().mul(c, pc));
  }
  return r;
}

// Mirror one variable: exponent e -> total - e (for palindromy checks).
template <class Ring>
MultiPoly<Ring> mirror_var(const MultiPoly<Ring>& f, const std::string& var,
                           int total) {
  std::size_t vi = f.var_index(var);
  MultiPoly<Ring> r(f.ring(), f.vars());
  for (const auto& [m, c] : f.terms()) {
    Monomial nm = m;
    nm.exps[vi] = total - nm.exps[vi];
    r.add_term(std::move(nm), c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Content and primitive part over Z
// ---------------------------------------------------------------------------

struct ContentSplit {
  Int content;                     // positive
  MultiPoly<IntegerRing> primitive;  // carries the sign
};

inline ContentSplit content_primitive(const MultiPoly<IntegerRing>& f) {
  if (f.is_zero()) throw Error("content_primitive: zero polynomial");
  Int g = 0;
  for (const auto& [m, c] : f.terms()) {
    g = int_gcd(g, int_abs(c));
    if (g == 1) break;
  }
  MultiPoly<IntegerRing> prim(f.ring(), f.vars());
  for (const auto& [m, c] : f.terms()) prim.add_term(m, c / g);
  return {g, std::move(prim)};
}

inline Int integer_content(const MultiPoly<IntegerRing>& f) {
  return content_primitive(f).content;
}

// Multiply a Laurent polynomial by the minimal monomial so that every
// variable has minimal exponent 0.
template <class Ring>
MultiPoly<Ring> clear_denominators(const MultiPoly<Ring>& f) {
  if (f.is_zero()) return f;
  Monomial shift{std::vector<int>(f.vars().size(), 0)};
  for (std::size_t i = 0; i < f.vars().size(); ++i) {
    int mn = f.min_exp_in(f.vars()[i]);
    if (mn < 0) shift.exps[i] = -mn;
  }
  return f.shifted(shift);
}

}  // namespace knotcert

#endif  // KNOTCERT_POLY_HPP
