#include "wwm/symbols.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace wwm {

PolynomialSymbol& PolynomialSymbol::add(int xpow, int ppow, cd coeff) {
  if (xpow < 0 || ppow < 0) fail(Err::DegreeTooHigh, "symbol powers must be non-negative");
  if (xpow + ppow > kMaxSymbolDegree)
    fail(Err::DegreeTooHigh, "symbol degree exceeds the aliasing guard (8)");
  for (auto& t : terms) {
    if (t.xpow == xpow && t.ppow == ppow) {
      t.coeff += coeff;
      return *this;
    }
  }
  terms.push_back({xpow, ppow, coeff});
  return *this;
}

int PolynomialSymbol::degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.xpow + t.ppow);
  return d;
}

bool PolynomialSymbol::is_real() const {
  for (const auto& t : terms)
    if (t.coeff.imag() != 0.0) return false;
  return true;
}

cd PolynomialSymbol::eval(double x, double p) const {
  cd acc(0.0, 0.0);
  for (const auto& t : terms) acc += t.coeff * std::pow(x, t.xpow) * std::pow(p, t.ppow);
  return acc;
}

PolynomialSymbol symbol_one() { return PolynomialSymbol{}.add(0, 0, 1.0); }
PolynomialSymbol symbol_x() { return PolynomialSymbol{}.add(1, 0, 1.0); }
PolynomialSymbol symbol_p() { return PolynomialSymbol{}.add(0, 1, 1.0); }
PolynomialSymbol symbol_xp() { return PolynomialSymbol{}.add(1, 1, 1.0); }

PolynomialSymbol harmonic_symbol() { return PolynomialSymbol{}.add(2, 0, 0.5).add(0, 2, 0.5); }

PolynomialSymbol harmonic_squared_symbol() {
  return PolynomialSymbol{}.add(4, 0, 0.25).add(2, 2, 0.5).add(0, 4, 0.25);
}

PolynomialSymbol weyl_corrected_harmonic_squared(double hbar) {
  PolynomialSymbol s = harmonic_squared_symbol();
  s.add(0, 0, -0.25 * hbar * hbar);
  return s;
}

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

int parse_power(Lexer& lx) {
  if (lx.peek() != '^') return 1;
  ++lx.pos;
  lx.skip_ws();
  size_t start = lx.pos;
  while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
    ++lx.pos;
  if (lx.pos == start) fail(Err::ConfigError, "symbol parse: expected integer exponent after '^'");
  return std::atoi(std::string(lx.text.substr(start, lx.pos - start)).c_str());
}

bool parse_named(std::string_view name, double, PolynomialSymbol& out) {
  if (name == "1") {
    out = symbol_one();
  } else if (name == "x") {
    out = symbol_x();
  } else if (name == "p") {
    out = symbol_p();
  } else if (name == "xp") {
    out = symbol_xp();
  } else if (name == "H") {
    out = harmonic_symbol();
  } else if (name == "H2") {
    out = harmonic_squared_symbol();
  } else {
    return false;
  }
  return true;
}

}  // namespace

PolynomialSymbol parse_symbol(std::string_view text, double hbar) {
  {
    // Bare named shorthands first.
    std::string trimmed;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    PolynomialSymbol named;
    if (parse_named(trimmed, hbar, named)) return named;
  }

  PolynomialSymbol out;
  Lexer lx{text};
  double sign = 1.0;
  if (lx.peek() == '+' || lx.peek() == '-') {
    sign = lx.peek() == '-' ? -1.0 : 1.0;
    ++lx.pos;
  }
  bool any_term = false;
  while (!lx.done()) {
    double coeff = 1.0;
    int xpow = 0, ppow = 0, hpow = 0;
    bool factor_seen = false;
    for (;;) {
      char c = lx.peek();
      if (c == '\0' || c == '+' || c == '-') break;
      if (c == '*') {
        ++lx.pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        char* end = nullptr;
        std::string rest(lx.text.substr(lx.pos));
        double v = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) fail(Err::ConfigError, "symbol parse: bad number");
        lx.pos += end - rest.c_str();
        coeff *= v;
        factor_seen = true;
        continue;
      }
      if (c == 'x') {
        ++lx.pos;
        xpow += parse_power(lx);
        factor_seen = true;
        continue;
      }
      if (c == 'p') {
        ++lx.pos;
        ppow += parse_power(lx);
        factor_seen = true;
        continue;
      }
      if (lx.text.substr(lx.pos).rfind("hbar", 0) == 0) {
        lx.pos += 4;
        hpow += parse_power(lx);
        factor_seen = true;
        continue;
      }
      fail(Err::ConfigError, std::string("symbol parse: unexpected character '") + c + "'");
    }
    if (!factor_seen) fail(Err::ConfigError, "symbol parse: empty term");
    out.add(xpow, ppow, sign * coeff * std::pow(hbar, hpow));
    any_term = true;
    char c = lx.peek();
    if (c == '\0') break;
    sign = c == '-' ? -1.0 : 1.0;
    ++lx.pos;
  }
  if (!any_term) fail(Err::ConfigError, "symbol parse: empty expression");
  return out;
}

std::string to_string(const PolynomialSymbol& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : s.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.real();
    if (t.coeff.imag() != 0.0) os << (t.coeff.imag() > 0 ? "+" : "") << t.coeff.imag() << "i";
    os << ")";
    if (t.xpow > 0) os << " x^" << t.xpow;
    if (t.ppow > 0) os << " p^" << t.ppow;
  }
  if (first) os << "0";
  return os.str();
}

PhaseSpaceFunction sample_symbol(const PolynomialSymbol& s, const SpatialGrid& g,
                                 const Axis& x_axis, const Axis& p_axis) {
  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = PhaseSpaceKind::symbol;
  f.x_axis = x_axis;
  f.p_axis = p_axis;
  f.values.resize(x_axis.count, p_axis.count);
  for (int i = 0; i < x_axis.count; ++i)
    for (int k = 0; k < p_axis.count; ++k) f.values(i, k) = s.eval(x_axis.at(i), p_axis.at(k));
  return f;
}

PhaseSpaceFunction sample_symbol(const PolynomialSymbol& s, const SpatialGrid& g) {
  return sample_symbol(s, g, wigner_x_axis(g), wigner_p_axis(g));
}

double flat_top_window(double t, double flat, double cut) {
  double a = std::abs(t);
  if (a <= flat) return 1.0;
  if (a >= cut) return 0.0;
  double u = (a - flat) / (cut - flat);
  return 0.5 * (1.0 + std::cos(pi * u));
}

PhaseSpaceFunction sample_symbol_fine(const PolynomialSymbol& s, const SpatialGrid& g,
                                      double x_flat, double x_cut, double p_flat,
                                      double p_cut) {
  PhaseSpaceFunction f;
  f.grid = g;
  f.kind = PhaseSpaceKind::symbol;
  f.x_axis = fine_x_axis(g);
  f.p_axis = fine_p_axis(g);
  f.values.resize(f.x_axis.count, f.p_axis.count);
  for (int i = 0; i < f.x_axis.count; ++i) {
    double x = f.x_axis.at(i);
    double wx = flat_top_window(x, x_flat, x_cut);
    for (int k = 0; k < f.p_axis.count; ++k) {
      double p = f.p_axis.at(k);
      f.values(i, k) = s.eval(x, p) * wx * flat_top_window(p, p_flat, p_cut);
    }
  }
  return f;
}

}  // namespace wwm
