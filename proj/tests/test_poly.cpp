#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotcert/fixtures.hpp"
#include "knotcert/fpuni.hpp"
#include "knotcert/parse.hpp"

using namespace knotcert;

namespace {

// Random integer polynomial with up to `max_terms` terms, degrees < dmax.
ZPoly random_zpoly(std::mt19937& rng, const std::vector<std::string>& vars,
                   int max_terms, int dmax, int cmax = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, dmax);
  std::uniform_int_distribution<int> coeff(-cmax, cmax);
  ZPoly f(IntegerRing{}, vars);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m{std::vector<int>(vars.size(), 0)};
    for (auto& e : m.exps) e = deg(rng);
    f.add_term(std::move(m), Int(coeff(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("expression parsing basics") {
  auto X = parse_z("X", {"X", "Y"});
  REQUIRE(X.term_count() == 1);
  REQUIRE(X.degree_in("X") == 1);
  REQUIRE(X.degree_in("Y") == 0);

  REQUIRE(parse_z("(X+Y)*(X-Y)", {"X", "Y"}) ==
          parse_z("X^2 - Y^2", {"X", "Y"}));
  REQUIRE_THROWS_AS(parse_z("X^(-1)", {"X"}), ParseError);
  REQUIRE_THROWS_AS(parse_z("2X", {"X"}), ParseError);  // no juxtaposition
  REQUIRE_THROWS_AS(parse_z("q*x", {"a", "b"}), ParseError);
  REQUIRE_THROWS_AS(parse_z("X +", {"X"}), ParseError);
}

TEST_CASE("canonical print round-trips") {
  auto P = fixtures::poly("P");
  REQUIRE(P.term_count() == 26);
  REQUIRE(parse_z(P.str(), P.vars()) == P);
  std::string ser = serialize_poly_fixture(P);
  REQUIRE(serialize_poly_fixture(parse_z_fixture(ser)) == ser);

  for (const char* name : {"P", "Q", "R", "S", "R1", "delta_L", "m137_pst"}) {
    auto f = fixtures::poly(name);
    CAPTURE(name);
    REQUIRE(parse_z(f.str(), f.vars()) == f);
    std::string s = serialize_poly_fixture(f);
    REQUIRE(serialize_poly_fixture(parse_z_fixture(s)) == s);
  }
}

TEST_CASE("arithmetic identities") {
  auto lhs = parse_z("(s+1)^2*(s-2)", {"s"});
  REQUIRE(lhs == parse_z("s^3 - 3*s - 2", {"s"}));
  REQUIRE(lhs == parse_z("-2 - 3*s + s^3", {"s"}));

  auto f = parse_z("3*X*Y - 7", {"X", "Y"});
  REQUIRE(f + ZPoly::zero(IntegerRing{}, {"X", "Y"}) == f);
  REQUIRE_THROWS_AS(f + parse_z("u", {"u"}), DomainMismatchError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 60; ++iter) {
    auto f = random_zpoly(rng, {"X", "Y"}, 20, 6);
    auto g = random_zpoly(rng, {"X", "Y"}, 20, 6);
    auto h = random_zpoly(rng, {"X", "Y"}, 20, 6);
    REQUIRE((f + g) + h == f + (g + h));
    REQUIRE(f + g == g + f);
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * g == g * f);
    REQUIRE(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("evaluation") {
  auto R = fixtures::poly("R");
  QuadraticField F7{Int(-7)};
  auto val = evaluate_in(
      R, F7, {{"t", F7.from_int(-2)}, {"Y", F7.make(17, 3, 8)}});
  REQUIRE(F7.is_zero(val));

  // all-zero assignment gives the constant term
  auto f = parse_z("5*X^2*Y - 3*X + 11", {"X", "Y"});
  REQUIRE(evaluate(f, {{"X", Int(0)}, {"Y", Int(0)}}) == 11);
  REQUIRE_THROWS_AS(evaluate(f, {{"X", Int(0)}}), Error);

  // S specialized at X = 2 over F_17 keeps Y-degree 24
  auto S = fixtures::poly("S");
  auto red = fpuni::specialize(S, "Y", {{"X", 2}}, 17);
  REQUIRE(fpuni::degree(red) == 24);

  // evaluation is a ring homomorphism over F_p
  std::mt19937 rng(7);
  PrimeField Fp(10007);
  std::uniform_int_distribution<std::uint64_t> pt(0, 10006);
  for (int iter = 0; iter < 40; ++iter) {
    auto f1 = random_zpoly(rng, {"X", "Y"}, 10, 5);
    auto f2 = random_zpoly(rng, {"X", "Y"}, 10, 5);
    std::map<std::string, std::uint64_t> sigma{{"X", pt(rng)},
                                               {"Y", pt(rng)}};
    REQUIRE(evaluate_in(f1 * f2, Fp, sigma) ==
            Fp.mul(evaluate_in(f1, Fp, sigma), evaluate_in(f2, Fp, sigma)));
    REQUIRE(evaluate_in(f1 + f2, Fp, sigma) ==
            Fp.add(evaluate_in(f1, Fp, sigma), evaluate_in(f2, Fp, sigma)));
  }
}

TEST_CASE("stretch") {
  auto f = parse_z("X*Y + Y^2", {"X", "Y"});
  REQUIRE(stretch(f, "X", 3) == parse_z("X^3*Y + Y^2", {"X", "Y"}));
  REQUIRE(stretch(f, "X", 1) == f);
  REQUIRE_THROWS_AS(stretch(f, "X", 0), Error);

  std::mt19937 rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    auto g = random_zpoly(rng, {"X", "Y"}, 12, 5);
    int m = 1 + iter % 4, n = 1 + (iter / 4) % 3;
    REQUIRE(stretch(stretch(g, "X", m), "X", n) == stretch(g, "X", m * n));
    // support maps (i, j) -> (mi, j)
    auto gm = stretch(g, "X", m);
    REQUIRE(gm.term_count() == g.term_count());
    for (const auto& [mo, c] : g.terms()) {
      Monomial want = mo;
      want.exps[0] *= m;
      REQUIRE(gm.terms().count(want) == 1);
    }
  }
}

TEST_CASE("reciprocal lift") {
  auto t_only = parse_z("t", {"t", "Y"});
  auto lifted = reciprocal_lift(t_only, "t", 1, "X");
  REQUIRE(lifted == parse_z("X^2 + 1", {"X", "Y"}));

  auto R = fixtures::poly("R");
  auto S = fixtures::poly("S");
  REQUIRE(reciprocal_lift(R, "t", 8, "X") == S);
  REQUIRE(serialize_poly_fixture(reciprocal_lift(R, "t", 8, "X")) ==
          serialize_poly_fixture(S));

  REQUIRE_THROWS_AS(reciprocal_lift(fixtures::poly("R1"), "t", 2, "X"),
                    Error);

  // palindromy of the output on random inputs
  std::mt19937 rng(512);
  int done = 0;
  while (done < 100) {
    auto f = random_zpoly(rng, {"t", "Y"}, 10, 5);
    if (f.is_zero()) continue;
    int td = std::max(f.degree_in("t"), 0) + (done % 3);  // slack allowed
    auto lift = reciprocal_lift(f, "t", td, "X");
    REQUIRE(mirror_var(lift, "X", 2 * td) == lift);
    ++done;
  }
}

TEST_CASE("content and primitive part") {
  auto f = parse_z("64*Y^2 - 208*Y + 512", {"Y"});
  auto cp = content_primitive(f);
  REQUIRE(cp.content == 16);
  REQUIRE(cp.primitive == parse_z("4*Y^2 - 13*Y + 32", {"Y"}));
  // oracle for the expected primitive: (8Y-13)^2 + 343, content-cleared
  auto built = parse_z("(8*Y - 13)^2 + 343", {"Y"});
  REQUIRE(content_primitive(built).primitive == cp.primitive);

  REQUIRE(content_primitive(cp.primitive).content == 1);

  auto g = parse_z("-6*X", {"X"});
  auto cg = content_primitive(g);
  REQUIRE(cg.content == 6);
  REQUIRE(cg.primitive == parse_z("-X", {"X"}));

  REQUIRE_THROWS_AS(content_primitive(ZPoly::zero(IntegerRing{}, {"X"})),
                    Error);
}

TEST_CASE("laurent clearing") {
  auto l = parse_z("x*y + 2 + x^(-2)*y^(-1)", {"x", "y"}, true);
  auto cleared = clear_denominators(l);
  REQUIRE(!cleared.is_laurent());
  REQUIRE(cleared.min_exp_in("x") == 0);
  REQUIRE(cleared.min_exp_in("y") == 0);
}

TEST_CASE("fixture registry round-trips byte-identically") {
  for (const auto& [name, text] : fixtures::embedded_texts()) {
    if (text.find("poly v1") != 0) continue;
    auto f = parse_z_fixture(text);
    std::string canon = serialize_poly_fixture(f);
    REQUIRE(serialize_poly_fixture(parse_z_fixture(canon)) == canon);
  }
}
