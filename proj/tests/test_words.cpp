#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotcert/fixtures.hpp"
#include "knotcert/fpuni.hpp"
#include "knotcert/fricke.hpp"
#include "knotcert/repmat.hpp"

using namespace knotcert;

namespace {

const std::vector<std::string> kGens{"a", "b"};

GroupWord word(const std::string& s) { return parse_word(s, kGens); }

GroupWord random_word(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, 3);
  static const std::int8_t letters[4] = {1, -1, 2, -2};
  GroupWord w;
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back(letters[pick(rng)]);
  return w;
}

// Substitute Z = -2 and drop the variable.
ZPoly pin_parabolic(const ZPoly& f) {
  return drop_var(substitute_const(f, "Z", Int(-2)), "Z");
}

// All words of a fixed length over {a, A, b, B}.
void for_all_words(std::size_t len, const std::function<void(GroupWord)>& fn,
                   GroupWord prefix = {}) {
  if (prefix.size() == len) {
    fn(prefix);
    return;
  }
  for (std::int8_t l : {1, -1, 2, -2}) {
    GroupWord next = prefix;
    next.letters.push_back(l);
    for_all_words(len, fn, next);
  }
}

}  // namespace

TEST_CASE("word parsing") {
  GroupWord ba = word("ba");
  REQUIRE(ba.letters == std::vector<std::int8_t>{2, 1});
  GroupWord aA = word("aA");
  REQUIRE(aA.size() == 2);
  REQUIRE(aA.free_reduce().empty());
  REQUIRE_THROWS_AS(word("qx"), ParseError);
  REQUIRE(word_str(ba, kGens) == "ba");
}

TEST_CASE("presentation fixture") {
  auto pres = fixtures::presentation("L11n106");
  REQUIRE(pres.generators == kGens);
  REQUIRE(pres.relators.size() == 1);
  // relator splits as w1 w2 w3 w4
  auto cat = pres.word("w1")
                 .concat(pres.word("w2"))
                 .concat(pres.word("w3"))
                 .concat(pres.word("w4"));
  REQUIRE(cat == pres.relators[0]);
  REQUIRE(pres.word("K") == word("ba"));
  REQUIRE_THROWS_AS(pres.word("nope"), Error);
}

TEST_CASE("representation matrices") {
  REQUIRE(rep_matrix(GroupWord{}).trace() ==
          ZPoly::constant(IntegerRing{}, {"x", "y"}, 2));

  auto ba = rep_matrix(word("ba"));
  REQUIRE(ba.trace() == ZPoly::constant(IntegerRing{}, {"x", "y"}, -2));
  REQUIRE(ba.det() == ZPoly::constant(IntegerRing{}, {"x", "y"}, 1));

  auto pres = fixtures::presentation("L11n106");
  REQUIRE(rep_matrix(pres.word("w1")).det() ==
          ZPoly::constant(IntegerRing{}, {"x", "y"}, 1));

  std::mt19937 rng(123);
  std::uniform_int_distribution<std::size_t> len(0, 30);
  for (int i = 0; i < 100; ++i) {
    auto w = random_word(rng, len(rng));
    REQUIRE(rep_matrix(w).det() ==
            ZPoly::constant(IntegerRing{}, {"x", "y"}, 1));
  }
}

TEST_CASE("symmetrize") {
  auto sym = [](const char* s) {
    return symmetrize(parse_z(s, {"x", "y"}, true));
  };
  REQUIRE(sym("x + x^(-1)") == parse_z("X", {"X", "Y"}));
  REQUIRE(sym("x^2 + x^(-2)") == parse_z("X^2 - 2", {"X", "Y"}));
  REQUIRE_THROWS_AS(sym("x^2*y + x^(-2)*y^(-1)"), SymmetryError);
  try {
    sym("x^2*y + x^(-2)*y^(-1) + x^(-2)*y + 5*x^2*y^(-1)");
  } catch (const SymmetryError& e) {
    REQUIRE(std::string(e.what()).find("x^") != std::string::npos);
  }
}

TEST_CASE("meridian trace derivation matches Q") {
  auto pres = fixtures::presentation("L11n106");
  auto Q = derive_meridian_trace(pres, "J");
  REQUIRE(Q == fixtures::poly("Q"));

  // the knotted-component meridian stays parabolic
  auto k = derive_meridian_trace(pres, "K");
  REQUIRE(k == parse_z("-t - 2", {"t", "X", "Y"}));

  // a single generator gives -t + X
  Presentation tiny = pres;
  tiny.named_words["g"] = word("a");
  REQUIRE(derive_meridian_trace(tiny, "g") ==
          parse_z("-t + X", {"t", "X", "Y"}));
}

TEST_CASE("fricke traces") {
  REQUIRE(trace_poly(word("a")) == parse_z("X", {"X", "Y", "Z"}));
  REQUIRE(trace_poly(word("ba")) == parse_z("Z", {"X", "Y", "Z"}));
  REQUIRE(pin_parabolic(trace_poly(word("ba"))) ==
          ZPoly::constant(IntegerRing{}, {"X", "Y"}, -2));
  REQUIRE(trace_poly(word("aab")) == parse_z("X*Z - Y", {"X", "Y", "Z"}));
  REQUIRE_THROWS_AS(trace_poly(word("abababababababab")), BudgetError);
}

TEST_CASE("fricke traces agree with random unimodular pairs") {
  // Numeric oracle: random SL2(F_p) pairs; the trace of the word image must
  // equal the trace polynomial evaluated at (tr A, tr B, tr AB).
  const std::uint64_t p = 10007;
  PrimeField F(p);
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::uint64_t> unif(0, p - 1);
  auto random_sl2 = [&] {
    while (true) {
      std::uint64_t a = unif(rng), b = unif(rng), c = unif(rng);
      if (a == 0) continue;
      std::uint64_t d = mulmod((1 + mulmod(b, c, p)) % p, invmod(a, p), p);
      return std::array<std::uint64_t, 4>{a, b, c, d};
    }
  };
  auto mul = [&](const std::array<std::uint64_t, 4>& A,
                 const std::array<std::uint64_t, 4>& B) {
    return std::array<std::uint64_t, 4>{
        (mulmod(A[0], B[0], p) + mulmod(A[1], B[2], p)) % p,
        (mulmod(A[0], B[1], p) + mulmod(A[1], B[3], p)) % p,
        (mulmod(A[2], B[0], p) + mulmod(A[3], B[2], p)) % p,
        (mulmod(A[2], B[1], p) + mulmod(A[3], B[3], p)) % p};
  };
  auto inv2 = [&](const std::array<std::uint64_t, 4>& A) {
    return std::array<std::uint64_t, 4>{A[3], F.neg(A[1]), F.neg(A[2]), A[0]};
  };
  std::uniform_int_distribution<std::size_t> len(1, 10);
  for (int iter = 0; iter < 60; ++iter) {
    auto A = random_sl2(), B = random_sl2();
    auto w = random_word(rng, len(rng));
    std::array<std::uint64_t, 4> M{1, 0, 0, 1};
    for (std::int8_t l : w.letters) {
      switch (l) {
        case 1: M = mul(M, A); break;
        case -1: M = mul(M, inv2(A)); break;
        case 2: M = mul(M, B); break;
        case -2: M = mul(M, inv2(B)); break;
      }
    }
    std::uint64_t got = (M[0] + M[3]) % p;
    auto AB = mul(A, B);
    std::map<std::string, std::uint64_t> sigma{
        {"X", (A[0] + A[3]) % p},
        {"Y", (B[0] + B[3]) % p},
        {"Z", (AB[0] + AB[3]) % p}};
    REQUIRE(evaluate_in(trace_poly(w), F, sigma) == got);
  }
}

TEST_CASE("fricke invariance under inversion and rotation") {
  // exhaustive through length 5, sampled above
  for (std::size_t n = 1; n <= 5; ++n) {
    for_all_words(n, [](GroupWord w) {
      auto t = trace_poly(w);
      REQUIRE(trace_poly(w.inverse()) == t);
      REQUIRE(trace_poly(w.rotated(1)) == t);
    });
  }
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    auto w = random_word(rng, 6 + iter % 3);
    auto t = trace_poly(w);
    REQUIRE(trace_poly(w.inverse()) == t);
    REQUIRE(trace_poly(w.rotated(1 + iter % 5)) == t);
  }
}

TEST_CASE("cross-engine trace agreement") {
  // exhaustive through length 6
  for (std::size_t n = 0; n <= 6; ++n) {
    for_all_words(n, [](GroupWord w) {
      REQUIRE(trace_in_XY(w) == pin_parabolic(trace_poly(w)));
    });
  }
  // sampled to the length-12 budget
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> len(7, 12);
  for (int iter = 0; iter < 80; ++iter) {
    auto w = random_word(rng, len(rng));
    REQUIRE(trace_in_XY(w) == pin_parabolic(trace_poly(w)));
  }
}

TEST_CASE("matrix traces are bi-symmetric for the bundled meridians") {
  auto pres = fixtures::presentation("L11n106");
  auto mirror = [](const ZPoly& f, std::size_t axis) {
    ZPoly r(f.ring(), f.vars());
    for (const auto& [m, c] : f.terms()) {
      Monomial nm = m;
      nm.exps[axis] = -nm.exps[axis];
      r.add_term(std::move(nm), c);
    }
    return r;
  };
  for (const char* name : {"J", "K"}) {
    auto tr = rep_matrix(pres.word(name)).trace();
    REQUIRE(mirror(tr, 0) == tr);
    REQUIRE(mirror(tr, 1) == tr);
  }
}

TEST_CASE("relation entries vanish on the character curve") {
  auto pres = fixtures::presentation("L11n106");
  auto entries = relation_entries(pres);
  bool all_zero = true;
  for (const auto& e : entries)
    if (!e.is_zero()) all_zero = false;
  REQUIRE_FALSE(all_zero);

  // finite at x = 1, y = 1 after clearing
  for (const auto& e : entries)
    (void)evaluate(e, {{"x", Int(1)}, {"y", Int(1)}});

  // Sampled vanishing: over F_p, pick x0, take every root Y0 of
  // P(x0 + 1/x0, Y), lift to y0 with y0 + 1/y0 = Y0 (possibly in F_p^2),
  // and check all four entries vanish at (x0, y0).
  auto P = fixtures::poly("P");
  std::mt19937 rng(1009);
  int points_checked = 0;
  for (std::uint64_t p : {10007ull, 1000003ull}) {
    QuadExtField F2(p);
    std::uniform_int_distribution<std::uint64_t> unif(1, p - 1);
    for (int trial = 0; trial < 3; ++trial) {
      std::uint64_t x0 = unif(rng);
      std::uint64_t X0 = (x0 + invmod(x0, p)) % p;
      auto uni = fpuni::specialize(P, "Y", {{"X", X0}}, p);
      if (fpuni::degree(uni) < 1) continue;
      for (std::uint64_t Y0 : fpuni::roots_by_scan(uni, p)) {
        // y^2 - Y0 y + 1 = 0
        std::uint64_t disc = (mulmod(Y0, Y0, p) + p - 4 % p) % p;
        QuadExtField::Elem y0;
        std::uint64_t inv2 = invmod(2, p);
        if (auto r = sqrt_mod_p(disc, p)) {
          y0 = F2.embed(mulmod((Y0 + *r) % p, inv2, p));
        } else {
          // (Y0 + w * 1)/2 after rescaling w^2 = nonresidue: solve
          // s^2 = disc / nonresidue, y0 = (Y0 + s w)/2
          auto s = sqrt_mod_p(mulmod(disc, invmod(F2.nonresidue, p), p), p);
          REQUIRE(s.has_value());
          y0 = QuadExtField::Elem{mulmod(Y0, inv2, p),
                                  mulmod(*s, inv2, p)};
        }
        // confirm the lift
        auto sum = F2.add(y0, F2.inv(y0));
        REQUIRE(sum == F2.embed(Y0));
        std::map<std::string, QuadExtField::Elem> point{
            {"x", F2.embed(x0)}, {"y", y0}};
        for (const auto& e : entries)
          REQUIRE(F2.is_zero(evaluate_in(e, F2, point)));
        ++points_checked;
      }
    }
  }
  REQUIRE(points_checked > 0);
}
