#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wwm/mccoy.hpp"

using namespace wwm;

namespace {

NormalTerm find_term(const std::vector<NormalTerm>& nf, int x, int p, int h) {
  for (const auto& t : nf)
    if (t.xpow == x && t.ppow == p && t.hbar_pow == h) return t;
  return {x, p, h, RationalComplex()};
}

}  // namespace

TEST_CASE("rational arithmetic normalizes") {
  Rational a(2, 4), b(1, 2);
  CHECK(a == b);
  CHECK((a + b) == Rational(1));
  CHECK((a * Rational(-4, 3)) == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("mccoy(1,1) is the symmetrized product with normal form x p - i hbar/2") {
  OrderedOperatorExpr e = mccoy_order(1, 1);
  REQUIRE(e.mccoy_terms.size() == 2);
  CHECK(e.mccoy_terms[0].coeff.re == Rational(1, 2));
  CHECK(e.mccoy_terms[1].coeff.re == Rational(1, 2));

  REQUIRE(e.normal_form.size() == 2);
  NormalTerm lead = find_term(e.normal_form, 1, 1, 0);
  CHECK(lead.coeff == RationalComplex(Rational(1)));
  NormalTerm corr = find_term(e.normal_form, 0, 0, 1);
  CHECK(corr.coeff == RationalComplex(Rational(0), Rational(-1, 2)));
}

TEST_CASE("mccoy(2,0) and mccoy(0,2) are power monomials") {
  auto e1 = mccoy_order(2, 0);
  REQUIRE(e1.normal_form.size() == 1);
  CHECK(e1.normal_form[0].xpow == 2);
  CHECK(e1.normal_form[0].ppow == 0);
  CHECK(e1.normal_form[0].coeff == RationalComplex(Rational(1)));

  auto e2 = mccoy_order(0, 2);
  REQUIRE(e2.normal_form.size() == 1);
  CHECK(e2.normal_form[0].ppow == 2);
}

TEST_CASE("mccoy(2,2) matches the precomputed CCR-reduction oracle exactly") {
  // Hand reduction of (p^2 x^2 + 2 p x^2 p + x^2 p^2)/4 with [x, p] = i hbar:
  //   x^2 p^2 - 2 i hbar x p - hbar^2 / 2.
  auto e = mccoy_order(2, 2);
  REQUIRE(e.normal_form.size() == 3);
  CHECK(find_term(e.normal_form, 2, 2, 0).coeff == RationalComplex(Rational(1)));
  CHECK(find_term(e.normal_form, 1, 1, 1).coeff ==
        RationalComplex(Rational(0), Rational(-2)));
  CHECK(find_term(e.normal_form, 0, 0, 2).coeff == RationalComplex(Rational(-1, 2)));
}

TEST_CASE("normal ordering engine agrees with the closed-form exchange identity") {
  // p^a x^b = sum_j j! C(a,j) C(b,j) (-i hbar)^j x^{b-j} p^{a-j}
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      std::vector<OpLetter> word;
      word.insert(word.end(), a, OpLetter::P);
      word.insert(word.end(), b, OpLetter::X);
      auto nf = normal_order_word(word);
      for (const auto& t : nf) {
        int j = t.hbar_pow;
        long long mag = binomial(a, j) * binomial(b, j);
        for (int f = 2; f <= j; ++f) mag *= f;
        RationalComplex expect{Rational(mag)};
        // multiply by (-i)^j
        for (int f = 0; f < j; ++f)
          expect = expect * RationalComplex(Rational(0), Rational(-1));
        CHECK(t.xpow == b - j);
        CHECK(t.ppow == a - j);
        CHECK(t.coeff == expect);
      }
    }
}

TEST_CASE("weyl ordering symmetry: p-outer equals x-outer after CCR reduction") {
  for (int r = 0; r <= 4; ++r)
    for (int s = 0; s <= 4 - r + 2 && r + s <= 6; ++s) {
      auto direct = mccoy_order(r, s).normal_form;
      auto alt = mccoy_order_x_outer_normal_form(r, s);
      REQUIRE(direct.size() == alt.size());
      for (size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].xpow == alt[i].xpow);
        CHECK(direct[i].ppow == alt[i].ppow);
        CHECK(direct[i].hbar_pow == alt[i].hbar_pow);
        CHECK(direct[i].coeff == alt[i].coeff);
      }
    }
}

TEST_CASE("degree guard") {
  CHECK_THROWS_AS(mccoy_order(5, 4), Error);
  CHECK_THROWS_AS(mccoy_order(-1, 2), Error);
}

TEST_CASE("canonical text form golden strings") {
  CHECK(to_string(mccoy_order(1, 1).normal_form) == "x p - (1/2)i*hbar");
  CHECK(to_string(mccoy_order(2, 2).normal_form) == "x^2 p^2 - 2i*hbar x p - (1/2) hbar^2");
  CHECK(to_string(mccoy_order(2, 0).normal_form) == "x^2");
  CHECK(to_string(mccoy_order(0, 0).normal_form) == "1");
  CHECK(to_string(mccoy_order(3, 1).normal_form) == "x^3 p - (3/2)i*hbar x^2");
}
