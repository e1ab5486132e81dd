#include "wwm/mccoy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace wwm {

Rational::Rational(long long n, long long d) {
  if (d == 0) fail(Err::ConfigError, "Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
Rational Rational::operator-() const { return Rational(-num, den); }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

struct WordTerm {
  RationalComplex coeff;
  int hbar_pow = 0;
  std::vector<OpLetter> word;
};

using NormalKey = std::tuple<int, int, int>;  // (xpow, ppow, hbar_pow)

// Rewrites one term to normal order by the elementary exchange
// phat xhat = xhat phat - i hbar.  Terminates because every step lowers the
// number of (P, X) inversions or the word length.
void reduce(WordTerm term, std::map<NormalKey, RationalComplex>& out) {
  for (;;) {
    int swap_at = -1;
    for (size_t i = 0; i + 1 < term.word.size(); ++i) {
      if (term.word[i] == OpLetter::P && term.word[i + 1] == OpLetter::X) {
        swap_at = static_cast<int>(i);
        break;
      }
    }
    if (swap_at < 0) break;
    // Branch: ... X P ...  and  -i hbar * ... (pair removed) ...
    WordTerm contracted;
    contracted.coeff = term.coeff * RationalComplex(Rational(0), Rational(-1));
    contracted.hbar_pow = term.hbar_pow + 1;
    contracted.word.reserve(term.word.size() - 2);
    contracted.word.insert(contracted.word.end(), term.word.begin(), term.word.begin() + swap_at);
    contracted.word.insert(contracted.word.end(), term.word.begin() + swap_at + 2,
                           term.word.end());
    reduce(std::move(contracted), out);
    std::swap(term.word[swap_at], term.word[swap_at + 1]);
  }
  int xpow = 0, ppow = 0;
  for (OpLetter l : term.word) (l == OpLetter::X ? xpow : ppow)++;
  NormalKey key{xpow, ppow, term.hbar_pow};
  auto [it, inserted] = out.try_emplace(key, term.coeff);
  if (!inserted) it->second = it->second + term.coeff;
}

std::vector<NormalTerm> collect(const std::map<NormalKey, RationalComplex>& acc) {
  std::vector<NormalTerm> terms;
  for (const auto& [key, coeff] : acc) {
    if (coeff.is_zero()) continue;
    auto [xpow, ppow, hbar_pow] = key;
    terms.push_back({xpow, ppow, hbar_pow, coeff});
  }
  return sorted_normal_form(std::move(terms));
}

std::vector<OpLetter> word_of(int p_left, int x_mid, int p_right) {
  std::vector<OpLetter> w;
  w.insert(w.end(), p_left, OpLetter::P);
  w.insert(w.end(), x_mid, OpLetter::X);
  w.insert(w.end(), p_right, OpLetter::P);
  return w;
}

}  // namespace

std::vector<NormalTerm> normal_order_word(const std::vector<OpLetter>& word,
                                          RationalComplex coeff) {
  std::map<NormalKey, RationalComplex> acc;
  reduce(WordTerm{coeff, 0, word}, acc);
  return collect(acc);
}

std::vector<NormalTerm> sorted_normal_form(std::vector<NormalTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const NormalTerm& a, const NormalTerm& b) {
    int da = a.xpow + a.ppow, db = b.xpow + b.ppow;
    if (da != db) return da > db;
    if (a.xpow != b.xpow) return a.xpow > b.xpow;
    return a.hbar_pow < b.hbar_pow;
  });
  return terms;
}

OrderedOperatorExpr mccoy_order(int r, int s) {
  if (r < 0 || s < 0) fail(Err::DegreeTooHigh, "mccoy_order: negative power");
  if (r + s > 8) fail(Err::DegreeTooHigh, "mccoy_order: degree r+s exceeds 8");
  OrderedOperatorExpr expr;
  std::map<NormalKey, RationalComplex> acc;
  const long long two_s = 1LL << s;
  for (int k = 0; k <= s; ++k) {
    RationalComplex c(Rational(binomial(s, k), two_s));
    expr.mccoy_terms.push_back({s - k, r, k, c});
    reduce(WordTerm{c, 0, word_of(s - k, r, k)}, acc);
  }
  expr.normal_form = collect(acc);
  return expr;
}

std::vector<NormalTerm> mccoy_order_x_outer_normal_form(int r, int s) {
  if (r < 0 || s < 0) fail(Err::DegreeTooHigh, "mccoy_order: negative power");
  if (r + s > 8) fail(Err::DegreeTooHigh, "mccoy_order: degree r+s exceeds 8");
  std::map<NormalKey, RationalComplex> acc;
  const long long two_r = 1LL << r;
  for (int k = 0; k <= r; ++k) {
    RationalComplex c(Rational(binomial(r, k), two_r));
    std::vector<OpLetter> w;
    w.insert(w.end(), r - k, OpLetter::X);
    w.insert(w.end(), s, OpLetter::P);
    w.insert(w.end(), k, OpLetter::X);
    reduce(WordTerm{c, 0, w}, acc);
  }
  return collect(acc);
}

namespace {

std::string rational_string(const Rational& q, bool wrap_fraction) {
  std::ostringstream os;
  if (q.den == 1) {
    os << q.num;
  } else if (wrap_fraction) {
    os << "(" << q.num << "/" << q.den << ")";
  } else {
    os << q.num << "/" << q.den;
  }
  return os.str();
}

}  // namespace

namespace {

std::string power_string(const char* base, int pow) {
  std::string s(base);
  if (pow > 1) s += "^" + std::to_string(pow);
  return s;
}

// Term body without the leading sign, e.g. "2i*hbar x p" or "(1/2) hbar^2".
std::string term_body(const NormalTerm& t, bool imag, Rational amag) {
  bool unit = amag.num == 1 && amag.den == 1;
  bool have_tail = t.hbar_pow > 0 || t.xpow > 0 || t.ppow > 0;
  std::string cpart;
  if (!unit || !have_tail) cpart = rational_string(amag, true);
  if (imag) cpart += "i";
  if (t.hbar_pow > 0) {
    std::string h = power_string("hbar", t.hbar_pow);
    if (cpart.empty())
      cpart = h;
    else
      cpart += (imag ? "*" : " ") + h;
  }
  std::string body = cpart;
  if (t.xpow > 0) body += (body.empty() ? "" : " ") + power_string("x", t.xpow);
  if (t.ppow > 0) body += (body.empty() ? "" : " ") + power_string("p", t.ppow);
  return body;
}

}  // namespace

std::string to_string(const std::vector<NormalTerm>& normal_form) {
  if (normal_form.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : normal_form) {
    bool imag = !t.coeff.im.is_zero();
    if (imag && !t.coeff.re.is_zero()) {
      // Mixed coefficients do not occur in Weyl-ordered monomials; print an
      // explicit pair if a caller ever builds one.
      os << (first ? "" : " + ") << "(" << rational_string(t.coeff.re, false) << " + "
         << rational_string(t.coeff.im, false) << "i)";
      std::string tail = term_body({t.xpow, t.ppow, t.hbar_pow, RationalComplex(Rational(1))},
                                   false, Rational(1));
      if (!tail.empty()) os << " " << tail;
      first = false;
      continue;
    }
    Rational mag = imag ? t.coeff.im : t.coeff.re;
    bool neg = mag.num < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    os << term_body(t, imag, neg ? -mag : mag);
  }
  return os.str();
}

}  // namespace wwm
