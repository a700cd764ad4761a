// Irreducibility certification: deterministic univariate tests over prime
// fields, specialization-ideal certificates for bivariate integer
// polynomials, the Newton-polygon absolute-irreducibility test, the
// stretch-sweep driver, and per-order root-of-unity specialization
// certificates.
#ifndef KNOTCERT_IRREDUCIBILITY_HPP
#define KNOTCERT_IRREDUCIBILITY_HPP

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "knotcert/newton.hpp"
#include "knotcert/resultant.hpp"

namespace knotcert {

class DegreeDropError : public Error {
 public:
  using Error::Error;
};

// Deterministic distinct-degree ladder on a univariate prime-field
// polynomial.
inline bool fp_irreducible(const MultiPoly<PrimeField>& f) {
  if (f.is_zero()) throw Error("fp_irreducible: zero polynomial");
  if (f.vars().size() != 1)
    throw Error("fp_irreducible: expected a univariate polynomial");
  std::uint64_t p = f.ring().p;
  fpuni::Coeffs c(static_cast<std::size_t>(f.degree_in(f.vars()[0])) + 1, 0);
  for (const auto& [m, coeff] : f.terms())
    c[static_cast<std::size_t>(m.exps[0])] = coeff % p;
  fpuni::strip(c);
  return fpuni::irreducible(c, p);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct SpecializationIdeal {
  std::string var;  // the specialized variable
  Int point;        // var - point
  std::uint64_t p;  // the prime
};

struct RootOfUnityWitness {
  std::uint64_t d;  // multiplicative order
  std::uint64_t p;  // prime with p = 1 (mod d)
  std::uint64_t c;  // element of order exactly d in F_p
};

enum class Verdict { certified, refuted, inconclusive };
enum class CertMethod { specialization, newton_gcd, root_of_unity };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::refuted: return "refuted";
    default: return "inconclusive";
  }
}

struct IrreducibilityCertificate {
  std::string subject;
  std::string digest;  // hash of the canonical form
  CertMethod method = CertMethod::specialization;
  std::variant<std::monostate, SpecializationIdeal,
               std::vector<LatticePoint>, RootOfUnityWitness>
      witness;
  Verdict verdict = Verdict::inconclusive;
  std::string note;

  std::string line() const {
    std::ostringstream os;
    os << "CERT " << subject << " method=";
    switch (method) {
      case CertMethod::specialization: os << "specialization"; break;
      case CertMethod::newton_gcd: os << "newton-gcd"; break;
      case CertMethod::root_of_unity: os << "root-of-unity"; break;
    }
    os << " witness=";
    if (std::holds_alternative<std::monostate>(witness)) {
      os << "none";
    } else if (auto* si = std::get_if<SpecializationIdeal>(&witness)) {
      os << "(" << si->var << "-" << si->point << "," << si->p << ")";
    } else if (auto* vs = std::get_if<std::vector<LatticePoint>>(&witness)) {
      os << "vertices{";
      for (std::size_t i = 0; i < vs->size(); ++i) {
        if (i) os << ",";
        os << "(" << (*vs)[i].x << "," << (*vs)[i].y << ")";
      }
      os << "}";
    } else if (auto* rw = std::get_if<RootOfUnityWitness>(&witness)) {
      os << "(d=" << rw->d << ",p=" << rw->p << ",c=" << rw->c << ")";
    }
    os << " verdict=" << verdict_str(verdict);
    if (!note.empty()) os << " # " << note;
    return os.str();
  }
};

// FNV-1a over the canonical serialization; stable across runs.
template <class Ring>
std::string canonical_digest(const MultiPoly<Ring>& f) {
  std::string s = serialize_poly_fixture(f);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace detail {

struct SpecializationOutcome {
  enum Kind { certified, inconclusive, degree_drop } kind;
  int reduced_degree = -1;
};

// Reduction of f modulo (var - a, p), followed by the finite-field ladder.
inline SpecializationOutcome try_specialization(
    const MultiPoly<IntegerRing>& f, const std::string& spec_var,
    const std::string& main_var, const Int& a, std::uint64_t p) {
  PrimeField F(p);
  fpuni::Coeffs red =
      fpuni::specialize(f, main_var, {{spec_var, F.from_int(a)}}, p);
  int want = f.degree_in(main_var);
  int got = fpuni::degree(red);
  if (got != want) return {SpecializationOutcome::degree_drop, got};
  return {fpuni::irreducible(red, p) ? SpecializationOutcome::certified
                                     : SpecializationOutcome::inconclusive,
          got};
}

}  // namespace detail

// Certificate that a bivariate integer polynomial is irreducible over Q:
// the reduction modulo (var - a, p) keeps full degree in the other variable
// and is irreducible over F_p; trivial content (as a polynomial in the main
// variable) rules out factors in the specialized variable alone.
inline IrreducibilityCertificate specialize_irreducible_Q(
    const MultiPoly<IntegerRing>& f, const SpecializationIdeal& ideal,
    const std::string& subject = "f") {
  if (f.vars().size() != 2)
    throw Error("specialize_irreducible_Q: expected two variables");
  std::string main =
      f.vars()[0] == ideal.var ? f.vars()[1] : f.vars()[0];
  ZPoly content = detail::poly_content_in(f, main);
  bool content_trivial = content.term_count() == 1 &&
                         content.leading().first.is_constant() &&
                         int_abs(content.leading().second) == 1;
  if (!content_trivial)
    throw Error("specialize_irreducible_Q: content in " + main +
                " is non-trivial");
  auto out =
      detail::try_specialization(f, ideal.var, main, ideal.point, ideal.p);
  if (out.kind == detail::SpecializationOutcome::degree_drop)
    throw DegreeDropError(
        "specialize_irreducible_Q: degree drops modulo the ideal (" +
        std::to_string(out.reduced_degree) + " < " +
        std::to_string(f.degree_in(main)) + ")");
  IrreducibilityCertificate cert;
  cert.subject = subject;
  cert.digest = canonical_digest(f);
  cert.method = CertMethod::specialization;
  cert.witness = ideal;
  cert.verdict = out.kind == detail::SpecializationOutcome::certified
                     ? Verdict::certified
                     : Verdict::inconclusive;
  return cert;
}

// Newton-polygon test on top of a rational-irreducibility certificate: if
// the gcd of all vertex coordinates is 1, irreducibility over the rationals
// upgrades to absolute irreducibility.  The test is sufficient, not
// necessary, so a failed gcd is inconclusive.
inline IrreducibilityCertificate absolute_irreducibility(
    const MultiPoly<IntegerRing>& f,
    const IrreducibilityCertificate& q_irreducibility,
    const std::string& subject = "f") {
  if (q_irreducibility.verdict != Verdict::certified)
    throw Error(
        "absolute_irreducibility: requires a certified rational-"
        "irreducibility input");
  NewtonPolygon np = newton_polygon(f);
  IrreducibilityCertificate cert;
  cert.subject = subject;
  cert.digest = canonical_digest(f);
  cert.method = CertMethod::newton_gcd;
  cert.witness = np.vertices;
  long long g = np.vertex_coordinate_gcd();
  cert.verdict = g == 1 ? Verdict::certified : Verdict::inconclusive;
  if (g != 1) cert.note = "vertex gcd " + std::to_string(g);
  return cert;
}

// First certifying ideal in the deterministic candidate order (prime-major:
// for each listed prime, each listed point in turn).  Degree drops are
// recorded in the trail and the search moves on.
inline IrreducibilityCertificate find_certificate(
    const MultiPoly<IntegerRing>& f, const std::vector<Int>& a_candidates,
    const std::vector<std::uint64_t>& p_candidates,
    const std::string& subject = "f") {
  if (a_candidates.empty() || p_candidates.empty())
    throw Error("find_certificate: empty candidate list");
  if (f.vars().size() != 2)
    throw Error("find_certificate: expected two variables");
  const std::string spec_var = f.vars()[0];
  const std::string main_var = f.vars()[1];
  std::ostringstream trail;
  for (std::uint64_t p : p_candidates) {
    for (const Int& a : a_candidates) {
      auto out = detail::try_specialization(f, spec_var, main_var, a, p);
      if (out.kind == detail::SpecializationOutcome::degree_drop) {
        trail << "(" << spec_var << "-" << a << "," << p << "):degree-drop ";
        continue;
      }
      if (out.kind == detail::SpecializationOutcome::certified) {
        IrreducibilityCertificate cert;
        cert.subject = subject;
        cert.digest = canonical_digest(f);
        cert.method = CertMethod::specialization;
        cert.witness = SpecializationIdeal{spec_var, a, p};
        cert.verdict = Verdict::certified;
        return cert;
      }
    }
  }
  IrreducibilityCertificate cert;
  cert.subject = subject;
  cert.digest = canonical_digest(f);
  cert.method = CertMethod::specialization;
  cert.verdict = Verdict::inconclusive;
  cert.note = "candidates exhausted " + trail.str();
  return cert;
}

inline std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= bound; p = next_prime_u64(p))
    out.push_back(p);
  return out;
}

inline const std::vector<Int>& default_point_candidates() {
  static const std::vector<Int> a{Int(2), Int(3), Int(-1), Int(1), Int(0)};
  return a;
}

// ---------------------------------------------------------------------------
// Stretch-sweep driver: for each m = 1..m_max, certify f(X^m, Y) irreducible
// over Q (specialization search, with an optional per-m regression pair run
// first) and absolutely irreducible (Newton gcd).
// ---------------------------------------------------------------------------

struct SweepEntry {
  int m = 0;
  IrreducibilityCertificate rational;
  IrreducibilityCertificate absolute;
  bool ok() const {
    return rational.verdict == Verdict::certified &&
           absolute.verdict == Verdict::certified;
  }
};

struct SweepReport {
  std::vector<SweepEntry> entries;
  std::vector<int> failures;
  std::string conclusion;  // empty for a vacuous sweep

  std::string text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << e.rational.line() << "\n";
      os << e.absolute.line() << "\n";
    }
    if (!conclusion.empty()) os << conclusion << "\n";
    return os.str();
  }
};

inline SweepReport dzannier_driver(
    const MultiPoly<IntegerRing>& f, int m_max,
    const std::vector<std::pair<int, std::uint64_t>>& regression_pairs = {},
    std::uint64_t prime_budget = 1000) {
  if (f.vars().size() != 2)
    throw Error("dzannier_driver: expected two variables");
  const std::string stretch_var = f.vars()[0];
  SweepReport report;
  if (m_max <= 0) return report;
  auto primes = odd_primes_up_to(prime_budget);
  for (int m = 1; m <= m_max; ++m) {
    ZPoly fm = stretch(f, stretch_var, m);
    std::string subject = "f(" + stretch_var + "^" + std::to_string(m) + ",.)";
    std::optional<IrreducibilityCertificate> rational;
    for (const auto& [rm, rp] : regression_pairs) {
      if (rm != m) continue;
      auto out = detail::try_specialization(fm, stretch_var, f.vars()[1],
                                            Int(2), rp);
      if (out.kind == detail::SpecializationOutcome::certified) {
        IrreducibilityCertificate cert;
        cert.subject = subject;
        cert.digest = canonical_digest(fm);
        cert.method = CertMethod::specialization;
        cert.witness = SpecializationIdeal{stretch_var, Int(2), rp};
        cert.verdict = Verdict::certified;
        rational = cert;
      }
      break;
    }
    if (!rational)
      rational = find_certificate(fm, default_point_candidates(), primes,
                                  subject);
    SweepEntry e;
    e.m = m;
    e.rational = *rational;
    if (rational->verdict == Verdict::certified) {
      e.absolute = absolute_irreducibility(fm, *rational, subject);
    } else {
      e.absolute.subject = subject;
      e.absolute.digest = canonical_digest(fm);
      e.absolute.method = CertMethod::newton_gcd;
      e.absolute.verdict = Verdict::inconclusive;
      e.absolute.note = "no rational certificate";
    }
    if (!e.ok()) report.failures.push_back(m);
    report.entries.push_back(std::move(e));
  }
  if (report.failures.empty()) {
    report.conclusion =
        "hypotheses verified for all m <= " + std::to_string(m_max);
  } else {
    std::ostringstream os;
    os << "hypotheses NOT verified for m =";
    for (int m : report.failures) os << " " << m;
    report.conclusion = os.str();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Per-order root-of-unity specialization: search primes p = 1 (mod d) up to
// the budget, take c = g^((p-1)/d) for the smallest primitive root g, and
// test f(c, Y) over F_p.  Success certifies f(z, Y) irreducible over the
// d-th cyclotomic field for z a primitive d-th root of unity; exhaustion is
// inconclusive, never a refutation.
// ---------------------------------------------------------------------------

inline IrreducibilityCertificate certify_root_of_unity_specialization(
    const MultiPoly<IntegerRing>& f, std::uint64_t d,
    std::uint64_t p_budget = 10000, int max_attempts = 25,
    const std::string& subject = "f") {
  if (d < 3 || d % 2 == 0)
    throw Error("certify_root_of_unity_specialization: d must be odd, >= 3");
  if (f.vars().size() != 2)
    throw Error("certify_root_of_unity_specialization: expected two vars");
  const std::string spec_var = f.vars()[0];
  const std::string main_var = f.vars()[1];
  ZPoly lc = coefficients_in(f, main_var).back();
  Int lc_content = integer_content(lc);

  IrreducibilityCertificate cert;
  cert.subject = subject;
  cert.digest = canonical_digest(f);
  cert.method = CertMethod::root_of_unity;
  cert.verdict = Verdict::inconclusive;

  std::ostringstream trail;
  int attempts = 0;
  for (std::uint64_t p = next_prime_u64(d); p <= p_budget && attempts < max_attempts;
       p = next_prime_u64(p)) {
    if (p % d != 1) continue;
    if (lc_content % Int(p) == 0) continue;
    std::uint64_t g = primitive_root(p);
    std::uint64_t c = powmod(g, (p - 1) / d, p);
    // order check: c^d = 1 and c^(d/q) != 1 for prime q | d
    if (powmod(c, d, p) != 1) continue;
    bool full_order = true;
    for (std::uint64_t q : prime_factors_u64(d))
      if (powmod(c, d / q, p) == 1) full_order = false;
    if (!full_order) continue;
    ++attempts;
    auto out = detail::try_specialization(f, spec_var, main_var, Int(c), p);
    if (out.kind == detail::SpecializationOutcome::degree_drop) {
      trail << "(p=" << p << ",c=" << c << "):degree-drop ";
      continue;
    }
    if (out.kind == detail::SpecializationOutcome::certified) {
      cert.witness = RootOfUnityWitness{d, p, c};
      cert.verdict = Verdict::certified;
      cert.note = "irreducible over the degree-" + std::to_string(d) +
                  " cyclotomic field, hence over its real subfield";
      return cert;
    }
    trail << "(p=" << p << ",c=" << c << "):reducible ";
  }
  cert.note = "exhausted after " + std::to_string(attempts) +
              " attempts: " + trail.str();
  return cert;
}

}  // namespace knotcert

#endif  // KNOTCERT_IRREDUCIBILITY_HPP
