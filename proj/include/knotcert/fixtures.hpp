// Bundled golden data: the published character-variety polynomials of the
// link L11n106, the companion link L11n71, the census manifold m137, the
// two-variable Alexander polynomial of L11n106, the specialization-prime
// table, and the certified knot tables.  Everything is stored in the text
// fixture formats and parsed on first use.
#ifndef KNOTCERT_FIXTURES_HPP
#define KNOTCERT_FIXTURES_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "knotcert/fixture_io.hpp"
#include "knotcert/words.hpp"

namespace knotcert::fixtures {

// ---------------------------------------------------------------------------
// Group presentation of the link group of L11n106, with the meridians of the
// unknotted component (J) and the knotted component (K), and the four-piece
// split of the relator used when evaluating the relation on matrices.
// ---------------------------------------------------------------------------

inline constexpr std::string_view kPresentationL11n106 = R"(presentation v1
# link group of L11n106; upper case letters are inverses
gens: a b
rel: abbbaBAbaabABaBAbaabABabbbaBAbaabABBBAbaBAABabAbaBAABabABBBAbaBAAB
word J: baabABabbbaBAABabABBBAbaBAABabbbaBA
word K: ba
word w1: abbbaBAbaabAB
word w2: aBAbaabABabbbaBAb
word w3: aabABBBAbaBAABabAba
word w4: BAABabABBBAbaBAAB
)";

// Defining polynomial of the component of the parabolic character curve of
// L11n106 that carries the discrete faithful representation.
inline constexpr std::string_view kPolyP = R"(poly v1
vars: X Y
domain: Z
expr: X^8*Y + 7*X^7*Y^2 - 2*X^7 + 21*X^6*Y^3 - 7*X^6*Y + 35*X^5*Y^4 - 3*X^5*Y^2 - 8*X^5 + 35*X^4*Y^5 + 20*X^4*Y^3 - 29*X^4*Y + 21*X^3*Y^6 + 40*X^3*Y^4 - 39*X^3*Y^2 - 7*X^3 + 7*X^2*Y^7 + 33*X^2*Y^5 - 23*X^2*Y^3 - 17*X^2*Y + X*Y^8 + 13*X*Y^6 - 5*X*Y^4 - 14*X*Y^2 + X + 2*Y^7 - 4*Y^3
)";

// Meridian trace relation Q(t, X, Y) = chi(J) - t on the character curve.
inline constexpr std::string_view kPolyQ = R"(poly v1
vars: t X Y
domain: Z
expr: -t + X^16*Y^3 + 16*X^15*Y^4 - 6*X^15*Y^2 + 120*X^14*Y^5 - 83*X^14*Y^3 + 12*X^14*Y + 560*X^13*Y^6 - 532*X^13*Y^4 + 132*X^13*Y^2 - 8*X^13 + 1820*X^12*Y^7 - 2093*X^12*Y^5 + 644*X^12*Y^3 - 44*X^12*Y + 4368*X^11*Y^8 - 5642*X^11*Y^6 + 1800*X^11*Y^4 + 10*X^11*Y^2 - 32*X^11 + 8008*X^10*Y^9 - 11011*X^10*Y^7 + 3036*X^10*Y^5 + 755*X^10*Y^3 - 236*X^10*Y + 11440*X^9*Y^10 - 16016*X^9*Y^8 + 2684*X^9*Y^6 + 3040*X^9*Y^4 - 700*X^9*Y^2 - 48*X^9 + 12870*X^8*Y^11 - 17589*X^8*Y^9 - 396*X^8*Y^7 + 6519*X^8*Y^5 - 939*X^8*Y^3 - 328*X^8*Y + 11440*X^7*Y^12 - 14586*X^7*Y^10 - 4752*X^7*Y^8 + 8892*X^7*Y^6 - 72*X^7*Y^4 - 950*X^7*Y^2 - 32*X^7 + 8008*X^6*Y^13 - 9009*X^6*Y^11 - 7260*X^6*Y^9 + 8070*X^6*Y^7 + 1764*X^6*Y^5 - 1493*X^6*Y^3 - 182*X^6*Y + 4368*X^5*Y^14 - 4004*X^5*Y^12 - 6468*X^5*Y^10 + 4800*X^5*Y^8 + 3024*X^5*Y^6 - 1328*X^5*Y^4 - 428*X^5*Y^2 - 12*X^5 + 1820*X^4*Y^15 - 1183*X^4*Y^13 - 3828*X^4*Y^11 + 1690*X^4*Y^9 + 2670*X^4*Y^7 - 583*X^4*Y^5 - 532*X^4*Y^3 - 51*X^4*Y + 560*X^3*Y^16 - 182*X^3*Y^14 - 1528*X^3*Y^12 + 202*X^3*Y^10 + 1416*X^3*Y^8 + 2*X^3*Y^6 - 368*X^3*Y^4 - 82*X^3*Y^2 - 6*X^3 + 120*X^2*Y^17 + 7*X^2*Y^15 - 396*X^2*Y^13 - 89*X^2*Y^11 + 448*X^2*Y^9 + 125*X^2*Y^7 - 134*X^2*Y^5 - 61*X^2*Y^3 - 15*X^2*Y + 16*X*Y^18 + 8*X*Y^16 - 60*X*Y^14 - 40*X*Y^12 + 76*X*Y^10 + 52*X*Y^8 - 20*X*Y^6 - 20*X*Y^4 - 12*X*Y^2 + Y^19 + Y^17 - 4*Y^15 - 5*Y^13 + 5*Y^11 + 7*Y^9 - 2*Y^5 - 3*Y^3 + Y
)";

// Elimination of X from (P, Q): the meridian-trace/boundary-trace relation.
// Stored verbatim from the published output (note the -16tY^24 leading term;
// comparisons against it are made up to overall sign).
inline constexpr std::string_view kPolyR = R"(poly v1
vars: t Y
domain: Z
expr: 669124*t - 2*t^7 - 498002*t^5 - 5223073*t^3 - 16*t*Y^24 + (120*t^2 + 176)*Y^23 + (-t^5 - 344*t^3 - 1595*t)*Y^22 + (-t^7 - 265*t^5 - 8323*t^3 - 5017*t)*Y^20 + (31*t^7 - 820*t^5 + 45501*t^3 + 26034*t)*Y^18 + (-428*t^7 + 34065*t^5 - 60100*t^3 - 223825*t)*Y^16 + (3393*t^7 - 229701*t^5 - 1671221*t^3 - 1389221*t)*Y^14 + (-16709*t^7 + 392665*t^5 + 4196073*t^3 + 3978713*t)*Y^12 + (51769*t^7 + 613384*t^5 + 1570051*t^3 + 257774*t)*Y^10 + (-97592*t^7 - 3180386*t^5 - 27592720*t^3 - 28733690*t)*Y^8 + (102474*t^7 + 3256419*t^5 + 42551766*t^3 + 53431661*t)*Y^6 + (-49677*t^7 + 1658479*t^5 - 6346815*t^3 - 21240713*t)*Y^4 + (6945*t^7 - 5819870*t^5 - 50037327*t^3 - 50675755*t)*Y^2 + (2*t^6 + 466*t^4 + 5400*t^2 + 1265)*Y^21 + (8*t^6 + 5340*t^4 - 4891*t^2 - 551)*Y^19 + (246*t^6 - 65918*t^4 - 71499*t^2 + 10156)*Y^17 + (-8510*t^6 + 292550*t^4 + 1114568*t^2 + 263159)*Y^15 + (62972*t^6 + 480016*t^4 + 532043*t^2 - 387)*Y^13 + (-184968*t^6 - 4075296*t^4 - 11015955*t^2 - 1827985)*Y^11 + (148666*t^6 + 7363350*t^4 + 27163139*t^2 + 4743016)*Y^9 + (389244*t^6 + 2024132*t^4 - 5822600*t^2 + 2654010)*Y^7 + (-959338*t^6 - 19599946*t^4 - 57150066*t^2 - 22718115)*Y^5 + (659693*t^6 + 19149660*t^4 + 77616992*t^2 + 31164769)*Y^3 + (t^8 + 235110*t^6 + 11747029*t^4 + 26741431*t^2 - 669124)*Y
)";

// S(X, Y) = X^8 R(X + 1/X, Y), the reciprocal lift of R.
inline constexpr std::string_view kPolyS = R"(poly v1
vars: X Y
domain: Z
expr: (-16*X^9 - 16*X^7)*Y^24 + (120*X^10 + 416*X^8 + 120*X^6)*Y^23 + (-X^13 - 349*X^11 - 2637*X^9 - 2637*X^7 - 349*X^5 - X^3)*Y^22 + (2*X^14 + 478*X^12 + 7294*X^10 + 14901*X^8 + 7294*X^6 + 478*X^4 + 2*X^2)*Y^21 + (-X^15 - 272*X^13 - 9669*X^11 - 32671*X^9 - 32671*X^7 - 9669*X^5 - 272*X^3 - X)*Y^20 + (8*X^14 + 5388*X^12 + 16589*X^10 + 21867*X^8 + 16589*X^6 + 5388*X^4 + 8*X^2)*Y^19 + (31*X^15 - 603*X^13 + 42052*X^11 + 155422*X^9 + 155422*X^7 + 42052*X^5 - 603*X^3 + 31*X)*Y^18 + (246*X^14 - 64442*X^12 - 331481*X^10 - 523430*X^8 - 331481*X^6 - 64442*X^4 + 246*X^2)*Y^17 + (-428*X^15 + 31069*X^13 + 101237*X^11 - 78455*X^9 - 78455*X^7 + 101237*X^5 + 31069*X^3 - 428*X)*Y^16 + (-8510*X^14 + 241490*X^12 + 2157118*X^10 + 4077395*X^8 + 2157118*X^6 + 241490*X^4 - 8510*X^2)*Y^15 + (3393*X^15 - 205950*X^13 - 2748473*X^11 - 8581139*X^9 - 8581139*X^7 - 2748473*X^5 - 205950*X^3 + 3393*X)*Y^14 + (62972*X^14 + 857848*X^12 + 3396687*X^10 + 5203235*X^8 + 3396687*X^6 + 857848*X^4 + 62972*X^2)*Y^13 + (-16709*X^15 + 275702*X^13 + 5808509*X^11 + 19908767*X^9 + 19908767*X^7 + 5808509*X^5 + 275702*X^3 - 16709*X)*Y^12 + (-184968*X^14 - 5185104*X^12 - 30091659*X^10 - 52011031*X^8 - 30091659*X^6 - 5185104*X^4 - 184968*X^2)*Y^11 + (51769*X^15 + 975767*X^13 + 5724120*X^11 + 12913682*X^9 + 12913682*X^7 + 5724120*X^5 + 975767*X^3 + 51769*X)*Y^10 + (148666*X^14 + 8255346*X^12 + 58846529*X^10 + 106222714*X^8 + 58846529*X^6 + 8255346*X^4 + 148666*X^2)*Y^9 + (-97592*X^15 - 3863530*X^13 - 45544082*X^11 - 146731430*X^9 - 146731430*X^7 - 45544082*X^5 - 3863530*X^3 - 97592*X)*Y^8 + (389244*X^14 + 4359596*X^12 + 8112588*X^10 + 10938482*X^8 + 8112588*X^6 + 4359596*X^4 + 389244*X^2)*Y^7 + (102474*X^15 + 3973737*X^13 + 60985815*X^11 + 217237739*X^9 + 217237739*X^7 + 60985815*X^5 + 3973737*X^3 + 102474*X)*Y^6 + (-959338*X^14 - 25355974*X^12 - 149939920*X^10 - 273804683*X^8 - 149939920*X^6 - 25355974*X^4 - 959338*X^2)*Y^5 + (-49677*X^15 + 1310740*X^13 + 902363*X^11 - 25435063*X^9 - 25435063*X^7 + 902363*X^5 + 1310740*X^3 - 49677*X)*Y^4 + (659693*X^14 + 23107818*X^12 + 164111027*X^10 + 314490573*X^8 + 164111027*X^6 + 23107818*X^4 + 659693*X^2)*Y^3 + (6945*X^15 - 5771255*X^13 - 78990832*X^11 - 258743361*X^9 - 258743361*X^7 - 78990832*X^5 - 5771255*X^3 + 6945*X)*Y^2 + (X^16 + 235118*X^14 + 13157717*X^12 + 77256253*X^10 + 127998182*X^8 + 77256253*X^6 + 13157717*X^4 + 235118*X^2 + 1)*Y - 2*X^15 - 498016*X^13 - 7713125*X^11 - 19980185*X^9 - 19980185*X^7 - 7713125*X^5 - 498016*X^3 - 2*X
)";

// The analogous elimination polynomial for the companion link L11n71, whose
// leading Y-term t^3 Y^18 is a unit times a power of t.
inline constexpr std::string_view kPolyR1 = R"(poly v1
vars: t Y
domain: Z
expr: 32768*t^5 + t^3*Y^18 - 393216*t^3 + (3*t^5 - 72*t^3 + 210*t)*Y^16 + (-22*t^5 + 792*t^3 - 2734*t)*Y^14 + (104*t^5 - 5928*t^3 + 25240*t)*Y^12 + (-320*t^5 + 30240*t^3 - 151360*t)*Y^10 + (256*t^5 - 105728*t^3 + 660224*t)*Y^8 + (3072*t^5 + 195584*t^3 - 1746944*t)*Y^6 + (-4096*t^5 - 192512*t^3 + 3059712*t)*Y^4 + (-16384*t^5 + 245760*t^3 - 3776512*t)*Y^2 + (3*t^4 - 25*t^2)*Y^17 + (456*t^4 - 5968*t^2 + 4888)*Y^13 + (-2448*t^4 + 41104*t^2 - 40752)*Y^11 + (9024*t^4 - 201664*t^2 + 223936)*Y^9 + (-15872*t^4 + 649216*t^2 - 881408)*Y^7 + (-10240*t^4 - 1182720*t^2 + 1587200)*Y^5 + (73728*t^4 + 946176*t^2 - 479232)*Y^3 + (-65536*t^4 - 163840*t^2 - 1638400)*Y + (t^6 - 69*t^4 + 650*t^2 - 593)*Y^15 + 3276800*t
)";

// Two-variable Alexander polynomial of L11n106 (u on the meridian of the
// unknotted component).
inline constexpr std::string_view kPolyDeltaL = R"(poly v1
vars: u v
domain: Z
expr: u*(v^5 - 2*v^4 - v^3 + 3*v^2 - 2*v) - 2*v^4 + 3*v^3 - v^2 - 2*v + 1
)";

// Canonical-component polynomial of the census manifold m137 in the
// coordinates s = chi(lambda), t = chi(b).
inline constexpr std::string_view kPolyM137 = R"(poly v1
vars: s t
domain: Z
expr: (-2 - 3*s + s^3)*t^4 + (4 + 4*s - s^2 - s^3)*t^2 - 1
)";

// R(-2, Y): the reducible specialization at the parabolic meridian value.
inline constexpr std::string_view kFactorsRAtMinus2 = R"(factorization v1
vars: Y
domain: Z
factor 2: Y^9 + 15*Y^8 + 104*Y^7 + 435*Y^6 + 1205*Y^5 + 2285*Y^4 + 2956*Y^3 + 2506*Y^2 + 1257*Y + 283
factor 1: 2*Y^2 - 5*Y + 4
factor 1: 4*Y^2 - 17*Y + 22
factor 1: 4*Y^2 - 11*Y + 8
)";

// R1(2, Y): the specialization at the discrete faithful representation of
// L11n71, including the factor carrying that representation.
inline constexpr std::string_view kFactorsR1At2 = R"(factorization v1
vars: Y
domain: Z
factor 2: Y^3 + 2*Y^2 - 4*Y - 16
factor 2: Y^4 - 2*Y^3 - 4*Y^2 + 8*Y + 16
factor 1: 8*Y^4 - 52*Y^3 + 132*Y^2 - 153*Y + 68
)";

// Primes p with S(X^m, Y) irreducible modulo (X - 2, p), one row per m.
inline constexpr std::string_view kTableSpecializationPrimes = R"(table v1
columns: m p
1 17
2 11
3 11
4 31
5 17
6 31
7 11
8 11
9 17
10 89
11 17
12 11
13 11
14 31
15 17
16 31
17 11
18 11
19 17
20 53
21 17
22 11
23 11
24 31
)";

// Presentation and exact faithful matrices for the census manifold m137.
inline constexpr std::string_view kPresentationM137 = R"(presentation v1
# knot complement in S^2 x S^1; lambda = (ba)^-1, m the other peripheral word
gens: a b
rel: aaabbABBBAbb
word lambda: AB
word m: Abbaaaabb
)";

inline constexpr std::string_view kMatricesM137 = R"(matrix2 v1
domain: Quad:-1
a: (-3+1w)/2 1 -1 0
b: 0 1 -1 (-1-1w)/2
)";

// Knots through 12 crossings with certified non-integral trace, with the
// rational primes certifying non-integrality.
inline constexpr std::string_view kKnotTable = R"(knots v1
9_29 2
9_38 2
10_96 2
10_97 2
10_99 2
11a38 2
11a102 2
11a123 2
11a124 2
11a126 2
11a173 2
11a232 2
11a244 2
11a291 2
11a292 2
11a293 2
11a294 2
11a346 2
11a347 2
11a353 2
11a354 2
11n65 2
11n66 2
11n68 2
11n69 2
11n97 2
11n99 2
11n156 2
12a66 2
12a74 2
12a100 2
12a150 2
12a156 2
12a163 2
12a199 2
12a207 2
12a231 2
12a244 2
12a245 2
12a260 2
12a311 2
12a331 2
12a396 2
12a414 2
12a435 2
12a491 2
12a493 2
12a494 2
12a634 2
12a647 2
12a702 2
12a706 2
12a708 2
12a771 2
12a798 2
12a818 2
12a845 2
12a847 2
12a853 2
12a862 2
12a873 2
12a886 2
12a939 2
12a940 2
12a1059 2
12a1062 2
12a1097 2
12a1124 2
12a1156 2
12a1173 2
12a1261 2
12a1266 2
12a1270 2
12a1288 2
12n49 2
12n50 2
12n51 2
12n52 2
12n53 2
12n100 2
12n101 2
12n102 2
12n140 2
12n141 2
12n156 2
12n158 2
12n175 2
12n176 2
12n201 2
12n202 2
12n203 2
12n204 2
12n211 2
12n245 2
12n246 2
12n247 2
12n253 2
12n254 2
12n257 2
12n258 2
12n259 2
12n265 2
12n266 2
12n267 2
12n268 2
12n269 2
12n270 2
12n329 2
12n330 2
12n331 2
12n364 2
12n365 2
12n423 2
12n484 2
12n494 2
12n495 2
12n496 2
12n518 2
12n600 2
12n601 2
12n602 2
12n605 2
12n665 2
12n672 2
12n690 2
12n694 2
12n695 2
12n697 2
12n888 2
10_90 3
10_93 3
10_122 3
11a288 3
12a389 3
12a430 3
12a868 3
12a1043 3
12a1105 3
12a1109 3
12a1246 3
12n193 3
12n194 3
12n195 3
12n196 3
12n215 3
12n216 3
12n217 3
12n454 3
12n456 3
12n689 3
12n840 3
12n879 3
12n886 3
10_98 2,3
11a132 2,3
11a323 5
12a348 2,3
12a466 7
12a483 7
12a567 23
12a701 2,5
12a1117 13
12a1203 7
12a1205 17
12n256 7
12n264 7
12n440 2,3
12n508 2,3
12n604 2,3
12n868 5
)";

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline const std::map<std::string, std::string_view>& embedded_texts() {
  static const std::map<std::string, std::string_view> m{
      {"P", kPolyP},
      {"Q", kPolyQ},
      {"R", kPolyR},
      {"S", kPolyS},
      {"R1", kPolyR1},
      {"delta_L", kPolyDeltaL},
      {"m137_pst", kPolyM137},
      {"L11n106", kPresentationL11n106},
      {"m137", kPresentationM137},
      {"m137_matrices", kMatricesM137},
      {"R_at_minus2", kFactorsRAtMinus2},
      {"R1_at_2", kFactorsR1At2},
      {"specialization_primes", kTableSpecializationPrimes},
      {"knots12", kKnotTable},
  };
  return m;
}

inline std::string_view text(const std::string& name) {
  auto it = embedded_texts().find(name);
  if (it == embedded_texts().end())
    throw FixtureError("no fixture named '" + name + "'");
  return it->second;
}

inline MultiPoly<IntegerRing> poly(const std::string& name) {
  return parse_z_fixture(text(name));
}
inline Presentation presentation(const std::string& name) {
  return parse_presentation(text(name));
}
inline FactorList factorization(const std::string& name) {
  return parse_factorization_fixture(text(name));
}
inline IntTable specialization_primes() {
  return parse_table_fixture(text("specialization_primes"));
}
inline std::vector<KnotEntry> knot_table() {
  return parse_knots_fixture(text("knots12"));
}

}  // namespace knotcert::fixtures

#endif  // KNOTCERT_FIXTURES_HPP
