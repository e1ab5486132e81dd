#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wwm/errors.hpp"

namespace wwm {

// Exact rational arithmetic for the operator-ordering engine.  Numerators
// and denominators stay tiny (binomials and factorials of degree <= 8), so
// int64 with gcd normalization is plenty.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() = default;
  RationalComplex(Rational r, Rational i = Rational(0)) : re(r), im(i) {}

  RationalComplex operator+(const RationalComplex& o) const { return {re + o.re, im + o.im}; }
  RationalComplex operator*(const RationalComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RationalComplex operator-() const { return {-re, -im}; }
  bool operator==(const RationalComplex& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

// coeff * hbar^hbar_pow * xhat^xpow * phat^ppow  (CCR-normal order: all xhat
// left of all phat, hbar-graded).
struct NormalTerm {
  int xpow = 0;
  int ppow = 0;
  int hbar_pow = 0;
  RationalComplex coeff;
};

// coeff * phat^p_left * xhat^x_mid * phat^p_right  (one McCoy summand).
struct OrderedTerm {
  int p_left = 0;
  int x_mid = 0;
  int p_right = 0;
  RationalComplex coeff;
};

struct OrderedOperatorExpr {
  std::vector<OrderedTerm> mccoy_terms;   // 2^{-s} sum_k C(s,k) p^{s-k} x^r p^k
  std::vector<NormalTerm> normal_form;    // unique CCR-normal form, canonically sorted
};

// Weyl ordering of xhat^r phat^s by the McCoy rule, with the exact normal
// form obtained by term rewriting on [xhat, phat] = i hbar.  r + s <= 8.
OrderedOperatorExpr mccoy_order(int r, int s);

// Normal form of the x-outer variant 2^{-r} sum_k C(r,k) x^{r-k} p^s x^k;
// equals mccoy_order(r, s).normal_form term by term (Weyl-ordering symmetry).
std::vector<NormalTerm> mccoy_order_x_outer_normal_form(int r, int s);

// Letters of an operator word, multiplied left to right.
enum class OpLetter : std::uint8_t { X, P };

// CCR rewriting engine: reduces coeff * (product of letters) to normal form.
std::vector<NormalTerm> normal_order_word(const std::vector<OpLetter>& word,
                                          RationalComplex coeff = RationalComplex(Rational(1)));

std::vector<NormalTerm> sorted_normal_form(std::vector<NormalTerm> terms);

// Canonical text form, e.g. "x^2 p^2 - 2i*hbar x p - (1/2) hbar^2".
std::string to_string(const std::vector<NormalTerm>& normal_form);

long long binomial(int n, int k);

}  // namespace wwm
