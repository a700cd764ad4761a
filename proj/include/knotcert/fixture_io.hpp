// Text fixture formats.
//
//   poly v1
//   vars: <name> <name> ...
//   domain: Z | Q | Fp:<p> | Quad:<D>
//   <coeff> : <e1> <e2> ...          (one term per line, canonical order)
//
// An `expr: <expression>` line may replace the term lines on input.  Lines
// starting with '#' and blank lines are ignored.  Serialization always emits
// canonical term lines, so serialize(parse(serialize(f))) == serialize(f).
#ifndef KNOTCERT_FIXTURE_IO_HPP
#define KNOTCERT_FIXTURE_IO_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotcert/parse.hpp"
#include "knotcert/poly.hpp"

namespace knotcert {

class FixtureError : public Error {
 public:
  using Error::Error;
};

using AnyPoly =
    std::variant<MultiPoly<IntegerRing>, MultiPoly<RationalField>,
                 MultiPoly<PrimeField>, MultiPoly<QuadraticField>>;

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

inline std::vector<std::string> fixture_lines(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is{std::string(text)};
  while (std::getline(is, cur)) {
    std::size_t a = cur.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = cur.find_last_not_of(" \t\r");
    std::string trimmed = cur.substr(a, b - a + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    out.push_back(std::move(trimmed));
  }
  return out;
}

inline std::string expect_prefix(const std::string& line,
                                 std::string_view prefix) {
  if (line.rfind(prefix, 0) != 0)
    throw FixtureError("expected '" + std::string(prefix) + "' line, got '" +
                       line + "'");
  std::string rest = line.substr(prefix.size());
  std::size_t a = rest.find_first_not_of(" \t");
  return a == std::string::npos ? "" : rest.substr(a);
}

template <class Ring>
MultiPoly<Ring> parse_poly_body(const std::vector<std::string>& lines,
                                std::size_t start, Ring ring,
                                std::vector<std::string> vars, bool laurent) {
  if (start < lines.size() && lines[start].rfind("expr:", 0) == 0) {
    if (start + 1 != lines.size())
      throw FixtureError("expr: line must be the last line");
    return parse_poly(expect_prefix(lines[start], "expr:"), std::move(ring),
                      std::move(vars), laurent);
  }
  MultiPoly<Ring> f(ring, vars);
  for (std::size_t i = start; i < lines.size(); ++i) {
    auto colon = lines[i].find(':');
    if (colon == std::string::npos)
      throw FixtureError("malformed term line '" + lines[i] + "'");
    std::string ctok = lines[i].substr(0, colon);
    // trim
    ctok.erase(ctok.find_last_not_of(" \t") + 1);
    auto etoks = split_ws(lines[i].substr(colon + 1));
    if (etoks.size() != vars.size())
      throw FixtureError("term line has wrong exponent count: '" + lines[i] +
                         "'");
    Monomial m{std::vector<int>()};
    for (const auto& e : etoks) {
      int v = std::stoi(e);
      if (v < 0 && !laurent)
        throw FixtureError("negative exponent in non-Laurent fixture");
      m.exps.push_back(v);
    }
    f.add_term(std::move(m), ring.parse_coeff(ctok));
  }
  return f;
}

}  // namespace detail

inline AnyPoly parse_poly_fixture(std::string_view text,
                                  bool laurent = false) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "poly v1")
    throw FixtureError("missing 'poly v1' header");
  auto vars = detail::split_ws(detail::expect_prefix(lines.at(1), "vars:"));
  std::string dom = detail::expect_prefix(lines.at(2), "domain:");
  if (dom == "Z")
    return detail::parse_poly_body(lines, 3, IntegerRing{}, vars, laurent);
  if (dom == "Q")
    return detail::parse_poly_body(lines, 3, RationalField{}, vars, laurent);
  if (dom.rfind("Fp:", 0) == 0)
    return detail::parse_poly_body(
        lines, 3, PrimeField(std::stoull(dom.substr(3))), vars, laurent);
  if (dom.rfind("Quad:", 0) == 0)
    return detail::parse_poly_body(
        lines, 3, QuadraticField(Int(dom.substr(5))), vars, laurent);
  throw FixtureError("unknown domain '" + dom + "'");
}

inline MultiPoly<IntegerRing> parse_z_fixture(std::string_view text,
                                              bool laurent = false) {
  AnyPoly p = parse_poly_fixture(text, laurent);
  if (auto* f = std::get_if<MultiPoly<IntegerRing>>(&p)) return *f;
  throw FixtureError("fixture is not over Z");
}

template <class Ring>
std::string serialize_poly_fixture(const MultiPoly<Ring>& f) {
  std::ostringstream os;
  os << "poly v1\n";
  os << "vars:";
  for (const auto& v : f.vars()) os << " " << v;
  os << "\n";
  os << "domain: " << f.ring().domain_tag() << "\n";
  for (const auto& [m, c] : f.terms()) {
    os << f.ring().str(c) << " :";
    for (int e : m.exps) os << " " << e;
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Factor lists:  `factorization v1`, vars/domain headers, then
// `factor <multiplicity>: <expression>` lines.
// ---------------------------------------------------------------------------

struct FactorList {
  std::vector<std::pair<MultiPoly<IntegerRing>, unsigned>> factors;
};

inline FactorList parse_factorization_fixture(std::string_view text) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "factorization v1")
    throw FixtureError("missing 'factorization v1' header");
  auto vars = detail::split_ws(detail::expect_prefix(lines.at(1), "vars:"));
  std::string dom = detail::expect_prefix(lines.at(2), "domain:");
  if (dom != "Z") throw FixtureError("factorization fixtures must be over Z");
  FactorList out;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    std::string rest = detail::expect_prefix(lines[i], "factor");
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw FixtureError("malformed factor line '" + lines[i] + "'");
    unsigned mult = static_cast<unsigned>(
        std::stoul(rest.substr(0, colon)));
    out.factors.emplace_back(
        parse_z(rest.substr(colon + 1), vars), mult);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer tables:  `table v1`, `columns: <names>`, then rows of integers.
// ---------------------------------------------------------------------------

struct IntTable {
  std::vector<std::string> columns;
  std::vector<std::vector<long long>> rows;
};

inline IntTable parse_table_fixture(std::string_view text) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "table v1")
    throw FixtureError("missing 'table v1' header");
  IntTable t;
  t.columns = detail::split_ws(detail::expect_prefix(lines.at(1), "columns:"));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.size() != t.columns.size())
      throw FixtureError("table row arity mismatch: '" + lines[i] + "'");
    std::vector<long long> row;
    for (const auto& tok : toks) row.push_back(std::stoll(tok));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Named 2x2 matrices over a quadratic field:
//   matrix2 v1
//   domain: Quad:<D>
//   <name>: <e00> <e01> <e10> <e11>     (row-major coefficient tokens)
// ---------------------------------------------------------------------------

struct Matrix2Fixture {
  QuadraticField field{Int(-1)};
  std::map<std::string, std::array<QuadElem, 4>> matrices;
};

inline Matrix2Fixture parse_matrix2_fixture(std::string_view text) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "matrix2 v1")
    throw FixtureError("missing 'matrix2 v1' header");
  std::string dom = detail::expect_prefix(lines.at(1), "domain:");
  if (dom.rfind("Quad:", 0) != 0)
    throw FixtureError("matrix2 fixtures must be over Quad:<D>");
  Matrix2Fixture out;
  out.field = QuadraticField(Int(dom.substr(5)));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto colon = lines[i].find(':');
    if (colon == std::string::npos)
      throw FixtureError("malformed matrix line '" + lines[i] + "'");
    std::string name = lines[i].substr(0, colon);
    name.erase(name.find_last_not_of(" \t") + 1);
    auto toks = detail::split_ws(lines[i].substr(colon + 1));
    if (toks.size() != 4)
      throw FixtureError("matrix line needs 4 entries: '" + lines[i] + "'");
    std::array<QuadElem, 4> m;
    for (int k = 0; k < 4; ++k) m[k] = out.field.parse_coeff(toks[k]);
    out.matrices[name] = m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Knot tables:  `knots v1`, then `<knot-name> <p>[,<p>...]` lines.
// ---------------------------------------------------------------------------

struct KnotEntry {
  std::string name;
  std::vector<std::uint64_t> certifying_primes;
};

inline std::vector<KnotEntry> parse_knots_fixture(std::string_view text) {
  auto lines = detail::fixture_lines(text);
  if (lines.empty() || lines[0] != "knots v1")
    throw FixtureError("missing 'knots v1' header");
  std::vector<KnotEntry> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = detail::split_ws(lines[i]);
    if (toks.size() != 2)
      throw FixtureError("malformed knot line '" + lines[i] + "'");
    KnotEntry e;
    e.name = toks[0];
    std::string ps = toks[1];
    std::size_t pos = 0;
    while (pos < ps.size()) {
      auto comma = ps.find(',', pos);
      std::string tok = ps.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
      e.certifying_primes.push_back(std::stoull(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace knotcert

#endif  // KNOTCERT_FIXTURE_IO_HPP
