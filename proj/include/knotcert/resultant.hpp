// Exact elimination: Sylvester resultants over Z by two independent routes
// (fraction-free Bareiss on polynomial entries, and modular evaluation/
// interpolation with Chinese remaindering), exact multivariate division, and
// primitive-PRS gcds for integer polynomials in up to two variables.
//
// Sign convention: resultant(var - u, var - v, var) = u - v, i.e. the
// determinant of the Sylvester matrix with the f-rows on top.
#ifndef KNOTCERT_RESULTANT_HPP
#define KNOTCERT_RESULTANT_HPP

#include <optional>
#include <vector>

#include "knotcert/fpuni.hpp"
#include "knotcert/poly.hpp"

namespace knotcert {

using ZPoly = MultiPoly<IntegerRing>;

// ---------------------------------------------------------------------------
// Exact multivariate division.  divides(f, g) asks whether f | g and returns
// the quotient g / f; a failed division is a refusal (nullopt), not an error.
// ---------------------------------------------------------------------------

template <class Ring>
std::optional<MultiPoly<Ring>> divides(const MultiPoly<Ring>& f,
                                       const MultiPoly<Ring>& g) {
  if (f.is_zero()) throw Error("divides: zero divisor polynomial");
  g.check_compatible(f);
  MultiPoly<Ring> q(g.ring(), g.vars());
  MultiPoly<Ring> r = g;
  const auto& [fm, fc] = f.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!fm.divides(rm)) return std::nullopt;
    std::optional<typename Ring::Elem> qc;
    if constexpr (std::is_same_v<Ring, IntegerRing>) {
      qc = IntegerRing::divide(rc, fc);
    } else {
      qc = g.ring().divide(rc, fc);
    }
    if (!qc) return std::nullopt;
    Monomial qm = rm.quotient(fm);
    MultiPoly<Ring> piece(g.ring(), g.vars());
    piece.add_term(qm, *qc);
    q = q + piece;
    r = r - piece * f;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Sylvester matrix
// ---------------------------------------------------------------------------

struct SylvesterMatrix {
  std::vector<std::string> vars;  // the non-eliminated variables
  std::size_t dim = 0;
  std::vector<ZPoly> entries;  // row-major

  const ZPoly& at(std::size_t i, std::size_t j) const {
    return entries[i * dim + j];
  }
  ZPoly& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
};

inline SylvesterMatrix sylvester_matrix(const ZPoly& f, const ZPoly& g,
                                        const std::string& var) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero())
    throw Error("resultant: zero input polynomial");
  int n = f.degree_in(var), m = g.degree_in(var);
  if (n == 0 && m == 0)
    throw Error("resultant: both inputs have degree zero in " + var);
  auto fc = coefficients_in(f, var);  // ascending
  auto gc = coefficients_in(g, var);
  SylvesterMatrix s;
  s.vars = fc.front().vars();
  s.dim = static_cast<std::size_t>(n + m);
  ZPoly zero = ZPoly::zero(IntegerRing{}, s.vars);
  s.entries.assign(s.dim * s.dim, zero);
  // m rows of f-coefficients (descending), then n rows of g-coefficients
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s.at(static_cast<std::size_t>(r),
           static_cast<std::size_t>(r + n - k)) = fc[static_cast<std::size_t>(k)];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s.at(static_cast<std::size_t>(m + r),
           static_cast<std::size_t>(r + m - k)) = gc[static_cast<std::size_t>(k)];
  return s;
}

// ---------------------------------------------------------------------------
// Route 1: fraction-free Bareiss elimination on the polynomial matrix.
// ---------------------------------------------------------------------------

inline ZPoly bareiss_determinant(SylvesterMatrix s) {
  std::size_t n = s.dim;
  ZPoly one = ZPoly::constant(IntegerRing{}, s.vars, 1);
  if (n == 0) return one;
  ZPoly prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (s.at(k, k).is_zero()) {
      std::size_t pivot = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!s.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      if (pivot == k) return ZPoly::zero(IntegerRing{}, s.vars);
      for (std::size_t j = 0; j < n; ++j)
        std::swap(s.at(k, j), s.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly num = s.at(i, j) * s.at(k, k) - s.at(i, k) * s.at(k, j);
        if (num.is_zero()) {
          s.at(i, j) = num;
          continue;
        }
        auto q = divides(prev, num);
        if (!q) throw Error("bareiss: exact division failed");
        s.at(i, j) = *q;
      }
      s.at(i, k) = ZPoly::zero(IntegerRing{}, s.vars);
    }
    prev = s.at(k, k);
  }
  ZPoly det = s.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

inline ZPoly resultant_bareiss(const ZPoly& f, const ZPoly& g,
                               const std::string& var) {
  return bareiss_determinant(sylvester_matrix(f, g, var));
}

// ---------------------------------------------------------------------------
// Route 2: modular evaluation-interpolation with Chinese remaindering.
// Degree bounds come from the Sylvester dimensions; the prime count comes
// from a row-sum coefficient bound; primes are 62-bit and skip divisors of
// either leading-coefficient content.  Everything is deterministic.
// ---------------------------------------------------------------------------

namespace detail {

inline Int l1_norm(const ZPoly& f) {
  Int s = 0;
  for (const auto& [m, c] : f.terms()) s += int_abs(c);
  return s;
}

// Evaluate an integer polynomial at a full point mod p (small helper).
inline std::uint64_t eval_point_mod(
    const ZPoly& f, const std::vector<std::uint64_t>& point,
    std::uint64_t p) {
  std::uint64_t acc = 0;
  PrimeField F(p);
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t v = F.from_int(c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (m.exps[i] < 0) throw Error("eval_point_mod: negative exponent");
      v = mulmod(v, powmod(point[i], static_cast<std::uint64_t>(m.exps[i]), p),
                 p);
    }
    acc = (acc + v) % p;
  }
  return acc;
}

struct GridPoly {
  // coefficients of the eliminated variable, per term: (exps in remaining
  // vars, exponent in eliminated var, coefficient)
  struct Term {
    std::vector<int> rest;
    int main;
    Int coeff;
  };
  std::vector<Term> terms;
  int main_deg = 0;
};

inline GridPoly grid_form(const ZPoly& f, std::size_t main_idx) {
  GridPoly out;
  for (const auto& [m, c] : f.terms()) {
    GridPoly::Term t;
    t.main = m.exps[main_idx];
    if (t.main < 0) throw Error("resultant: Laurent input not supported");
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (i != main_idx) t.rest.push_back(m.exps[i]);
    out.main_deg = std::max(out.main_deg, t.main);
    t.coeff = c;
    out.terms.push_back(std::move(t));
  }
  return out;
}

}  // namespace detail

inline ZPoly resultant_modular(const ZPoly& f, const ZPoly& g,
                               const std::string& var) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero())
    throw Error("resultant: zero input polynomial");
  int df = f.degree_in(var), dg = g.degree_in(var);
  if (df == 0 && dg == 0)
    throw Error("resultant: both inputs have degree zero in " + var);
  std::size_t main_idx = f.var_index(var);
  std::vector<std::string> rest;
  for (const auto& v : f.vars())
    if (v != var) rest.push_back(v);
  if (rest.size() > 2)
    throw Error("resultant_modular: more than two remaining variables");

  // Degree bound per remaining variable.
  std::vector<int> bound;
  for (const auto& w : rest)
    bound.push_back(f.degree_in(w) * dg + g.degree_in(w) * df);

  // Coefficient bound: product over Sylvester rows of the row L1 norm.
  Int rowsum_f = 0, rowsum_g = 0;
  for (const auto& c : coefficients_in(f, var)) rowsum_f += detail::l1_norm(c);
  for (const auto& c : coefficients_in(g, var)) rowsum_g += detail::l1_norm(c);
  Int B = int_pow(rowsum_f, static_cast<unsigned>(dg)) *
          int_pow(rowsum_g, static_cast<unsigned>(df));

  ZPoly lcf = coefficients_in(f, var).back();
  ZPoly lcg = coefficients_in(g, var).back();
  Int lcf_content = integer_content(lcf);
  Int lcg_content = integer_content(lcg);

  auto fgrid = detail::grid_form(f, main_idx);
  auto ggrid = detail::grid_form(g, main_idx);

  // Choose primes.
  std::vector<std::uint64_t> primes;
  {
    Int prod = 1;
    std::uint64_t p = (1ull << 62);
    while (prod <= 2 * B) {
      p = next_prime_u64(p);
      if (lcf_content % Int(p) == 0 || lcg_content % Int(p) == 0) continue;
      primes.push_back(p);
      prod *= Int(p);
    }
  }

  // Grid sizes (tensor product over the remaining variables).
  std::vector<std::size_t> npts;
  for (int b : bound) npts.push_back(static_cast<std::size_t>(b) + 1);
  std::size_t total = 1;
  for (std::size_t n : npts) total *= n;

  // Residue grids, one per prime: values[prime][flattened point index].
  std::vector<std::vector<std::uint64_t>> residue_grids;
  std::vector<std::vector<std::vector<std::uint64_t>>> grids_per_prime;

  for (std::uint64_t p : primes) {
    // Deterministic valid grid: values ascending from 1, a value accepted
    // only if both leading coefficients are nonzero on every already-chosen
    // tuple through it.
    std::vector<std::vector<std::uint64_t>> grid(rest.size());
    if (rest.empty()) {
      // nothing to choose
    } else if (rest.size() == 1) {
      std::uint64_t v = 0;
      while (grid[0].size() < npts[0]) {
        ++v;
        if (detail::eval_point_mod(lcf, {v}, p) == 0) continue;
        if (detail::eval_point_mod(lcg, {v}, p) == 0) continue;
        grid[0].push_back(v);
      }
    } else {
      // first variable: accept a if lcf(a, .) and lcg(a, .) are not
      // identically zero mod p
      std::uint64_t a = 0;
      while (grid[0].size() < npts[0]) {
        ++a;
        auto nonzero_row = [&](const ZPoly& lc) {
          auto cs = fpuni::specialize(lc, rest[1], {{rest[0], a}}, p);
          return !cs.empty();
        };
        if (!nonzero_row(lcf) || !nonzero_row(lcg)) continue;
        grid[0].push_back(a);
      }
      std::uint64_t b = 0;
      while (grid[1].size() < npts[1]) {
        ++b;
        bool ok = true;
        for (std::uint64_t a0 : grid[0]) {
          if (detail::eval_point_mod(lcf, {a0, b}, p) == 0 ||
              detail::eval_point_mod(lcg, {a0, b}, p) == 0) {
            ok = false;
            break;
          }
        }
        if (ok) grid[1].push_back(b);
      }
    }

    // Power tables for fast specialization.
    auto powers = [&](std::uint64_t v, int dmax) {
      std::vector<std::uint64_t> pw(static_cast<std::size_t>(dmax) + 1, 1);
      for (int i = 1; i <= dmax; ++i)
        pw[static_cast<std::size_t>(i)] =
            mulmod(pw[static_cast<std::size_t>(i - 1)], v, p);
      return pw;
    };
    std::vector<std::vector<std::vector<std::uint64_t>>> powtab(rest.size());
    for (std::size_t vi = 0; vi < rest.size(); ++vi) {
      int dmax = std::max(f.degree_in(rest[vi]), g.degree_in(rest[vi]));
      for (std::uint64_t v : grid[vi]) powtab[vi].push_back(powers(v, dmax));
    }

    std::vector<std::uint64_t> vals(total);
    std::vector<std::size_t> idx(rest.size(), 0);
    PrimeField F(p);
    for (std::size_t flat = 0; flat < total; ++flat) {
      // decode flat -> idx (row-major over rest)
      std::size_t tmp = flat;
      for (std::size_t vi = rest.size(); vi-- > 0;) {
        idx[vi] = tmp % npts[vi];
        tmp /= npts[vi];
      }
      auto specialize = [&](const detail::GridPoly& gp) {
        fpuni::Coeffs c(static_cast<std::size_t>(gp.main_deg) + 1, 0);
        for (const auto& t : gp.terms) {
          std::uint64_t v = F.from_int(t.coeff);
          for (std::size_t vi = 0; vi < rest.size(); ++vi)
            if (t.rest[vi] != 0)
              v = mulmod(v,
                         powtab[vi][idx[vi]]
                               [static_cast<std::size_t>(t.rest[vi])],
                         p);
          std::size_t e = static_cast<std::size_t>(t.main);
          c[e] = (c[e] + v) % p;
        }
        fpuni::strip(c);
        return c;
      };
      vals[flat] = fpuni::resultant(specialize(fgrid), specialize(ggrid), p);
    }
    residue_grids.push_back(std::move(vals));
    grids_per_prime.push_back(std::move(grid));
  }

  // Interpolate per prime, then CRT coefficients.
  // coeff_grids[prime] maps flattened exponent tuple -> residue
  std::vector<std::vector<std::uint64_t>> coeff_grids;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    std::uint64_t p = primes[pi];
    const auto& grid = grids_per_prime[pi];
    std::vector<std::uint64_t> coeffs;
    if (rest.empty()) {
      coeffs = residue_grids[pi];
    } else if (rest.size() == 1) {
      auto c = fpuni::interpolate(grid[0], residue_grids[pi], p);
      c.resize(npts[0], 0);
      coeffs = std::move(c);
    } else {
      // interpolate along the second variable for each first-variable value,
      // then along the first variable for each second-variable exponent
      std::vector<std::vector<std::uint64_t>> partial(npts[0]);
      for (std::size_t i = 0; i < npts[0]; ++i) {
        std::vector<std::uint64_t> column(npts[1]);
        for (std::size_t j = 0; j < npts[1]; ++j)
          column[j] = residue_grids[pi][i * npts[1] + j];
        auto c = fpuni::interpolate(grid[1], column, p);
        c.resize(npts[1], 0);
        partial[i] = std::move(c);
      }
      coeffs.assign(npts[0] * npts[1], 0);
      for (std::size_t j = 0; j < npts[1]; ++j) {
        std::vector<std::uint64_t> column(npts[0]);
        for (std::size_t i = 0; i < npts[0]; ++i) column[i] = partial[i][j];
        auto c = fpuni::interpolate(grid[0], column, p);
        c.resize(npts[0], 0);
        for (std::size_t i = 0; i < npts[0]; ++i)
          coeffs[i * npts[1] + j] = c[i];
      }
    }
    coeff_grids.push_back(std::move(coeffs));
  }

  std::size_t slots = coeff_grids.empty() ? 0 : coeff_grids[0].size();
  ZPoly out(IntegerRing{}, rest);
  std::vector<std::uint64_t> residues(primes.size());
  for (std::size_t s = 0; s < slots; ++s) {
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
      residues[pi] = coeff_grids[pi][s];
    Int c = crt_symmetric(residues, primes);
    if (c == 0) continue;
    Monomial m{std::vector<int>(rest.size(), 0)};
    std::size_t tmp = s;
    for (std::size_t vi = rest.size(); vi-- > 0;) {
      m.exps[vi] = static_cast<int>(tmp % npts[vi]);
      tmp /= npts[vi];
    }
    out.add_term(std::move(m), std::move(c));
  }
  return out;
}

// Dispatcher: Bareiss for small systems, the modular route otherwise.  Both
// compute the same exact integer polynomial.
inline ZPoly resultant(const ZPoly& f, const ZPoly& g,
                       const std::string& var) {
  int dim = std::max(f.degree_in(var), 0) + std::max(g.degree_in(var), 0);
  std::size_t rest_count = f.vars().size() - 1;
  if (dim <= 10 && rest_count <= 2 &&
      std::max({0, f.degree_in(var), g.degree_in(var)}) > 0)
    return resultant_bareiss(f, g, var);
  return resultant_modular(f, g, var);
}

// ---------------------------------------------------------------------------
// Primitive-PRS gcd over Z in at most two effective variables.
// ---------------------------------------------------------------------------

namespace detail {

inline ZPoly pseudo_rem(ZPoly f, const ZPoly& g, const std::string& var) {
  int dg = g.degree_in(var);
  auto gc = coefficients_in(g, var);
  ZPoly lcg = with_vars(gc.back(), f.vars());
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    int dfv = f.degree_in(var);
    auto fc = coefficients_in(f, var);
    ZPoly lcf = with_vars(fc.back(), f.vars());
    ZPoly shift = ZPoly::zero(IntegerRing{}, f.vars());
    Monomial m{std::vector<int>(f.vars().size(), 0)};
    m.exps[f.var_index(var)] = dfv - dg;
    shift.add_term(m, Int(1));
    f = f * lcg - with_vars(g, f.vars()) * lcf * shift;
  }
  return f;
}

ZPoly gcd_poly_z_impl(const ZPoly& a, const ZPoly& b);  // fwd

inline ZPoly poly_content_in(const ZPoly& f, const std::string& var) {
  auto cs = coefficients_in(f, var);
  ZPoly acc = ZPoly::zero(IntegerRing{}, cs.front().vars());
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? c : gcd_poly_z_impl(acc, c);
    if (!acc.is_zero() && acc.term_count() == 1 &&
        acc.leading().first.is_constant() && int_abs(acc.leading().second) == 1)
      break;
  }
  return acc;
}

inline ZPoly gcd_poly_z_impl(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw Error("gcd: both inputs are zero");
  // normalize to primitive positive-leading result
  auto normalize = [](ZPoly f) {
    if (f.is_zero()) return f;
    auto [c, prim] = content_primitive(f);
    if (prim.leading().second < 0) prim = -prim;
    return prim;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);

  // main variable: first one occurring in either input
  std::string main;
  for (const auto& v : a.vars())
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      main = v;
      break;
    }
  if (main.empty()) {
    // both integer constants
    Int g = int_gcd(int_abs(a.leading().second), int_abs(b.leading().second));
    return ZPoly::constant(IntegerRing{}, a.vars(), g);
  }

  ZPoly cont_a = poly_content_in(a, main);
  ZPoly cont_b = poly_content_in(b, main);
  ZPoly cont_gcd = gcd_poly_z_impl(cont_a, cont_b);

  auto primitive_in = [&](const ZPoly& f, const ZPoly& cont) {
    auto q = divides(with_vars(cont, f.vars()), f);
    if (!q) throw Error("gcd: content division failed");
    return *q;
  };
  ZPoly F = primitive_in(a, cont_a);
  ZPoly G = primitive_in(b, cont_b);
  if (F.degree_in(main) < G.degree_in(main)) std::swap(F, G);
  while (!G.is_zero()) {
    ZPoly R = pseudo_rem(F, G, main);
    F = G;
    if (R.is_zero()) {
      G = R;
    } else {
      ZPoly rc = poly_content_in(R, main);
      auto q = divides(with_vars(rc, R.vars()), R);
      G = *q;
    }
  }
  ZPoly result = with_vars(cont_gcd, a.vars()) * F;
  return normalize(result);
}

}  // namespace detail

// Primitive gcd, sign-normalized so the leading canonical coefficient is
// positive; integer contents contribute gcd(content(f), content(g)).
// gcd(f, 0) is the primitive part of f.
inline ZPoly gcd_bivariate(const ZPoly& f, const ZPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error("gcd: both inputs are zero");
  {
    int effective = 0;
    for (const auto& v : f.vars())
      if (f.degree_in(v) > 0 || g.degree_in(v) > 0) ++effective;
    if (effective > 2)
      throw Error("gcd_bivariate: more than two effective variables");
  }
  auto normalize_sign = [](ZPoly h) {
    if (!h.is_zero() && h.leading().second < 0) return -h;
    return h;
  };
  if (f.is_zero()) return normalize_sign(content_primitive(g).primitive);
  if (g.is_zero()) return normalize_sign(content_primitive(f).primitive);
  Int cf = integer_content(f), cg = integer_content(g);
  ZPoly prim = detail::gcd_poly_z_impl(f, g);
  return prim.scaled(int_gcd(cf, cg));
}

}  // namespace knotcert

#endif  // KNOTCERT_RESULTANT_HPP
