#pragma once

#include <cctype>
#include <string>

#include "qgen/slaurent.hpp"

namespace qgen {

// Canonical text grammar (see docs/formats.md):
//   rationals            "a" or "a/b", denominator positive and omitted when 1
//   q-Laurent            exponent-sorted terms "c*q^e" joined by " + " / " - "
//   polynomials in s     likewise with "s^k"; composite coefficients in parens
//   rational functions   "num/den", parts parenthesized when they have > 1 term
// Every rendering parses back to an equal value.

inline std::string render(const Integer& x) { return x.str(); }

inline std::string render(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {

inline std::string power_token(const char* var, int e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

// One monomial c*q^e with positive c.
inline std::string q_term(const Rational& c, int e) {
  if (e == 0) return render(c);
  if (c == 1) return power_token("q", e);
  return render(c) + "*" + power_token("q", e);
}

}  // namespace detail

inline std::string render(const QLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (out.empty()) {
      out = (c < 0) ? "-" + detail::q_term(-c, e) : detail::q_term(c, e);
    } else {
      out += (c < 0) ? " - " + detail::q_term(-c, e)
                     : " + " + detail::q_term(c, e);
    }
  }
  return out;
}

inline std::string render(const QPoly& p) { return render(p.to_qlaurent()); }

inline std::string render(const QRatFn& f) {
  if (f.den().is_one()) return render(f.num());
  std::string num = render(f.num());
  std::string den = render(f.den());
  if (f.num().to_qlaurent().terms().size() > 1) num = "(" + num + ")";
  if (f.den().to_qlaurent().terms().size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

namespace detail {

// Sign extraction and parenthesization rules per coefficient ring, used when
// rendering polynomials in s.
inline bool extract_sign(Rational& c) {
  if (c < 0) {
    c = -c;
    return true;
  }
  return false;
}
inline bool extract_sign(QLaurent& c) {
  if (c.is_monomial() && c.terms().begin()->second < 0) {
    c = -c;
    return true;
  }
  return false;
}
inline bool extract_sign(QRatFn& c) {
  if (c.num().to_qlaurent().terms().size() == 1 && c.num().leading() < 0) {
    c = -c;
    return true;
  }
  return false;
}

inline bool coeff_needs_parens(const Rational&) { return false; }
inline bool coeff_needs_parens(const QLaurent& c) {
  return c.terms().size() > 1;
}
inline bool coeff_needs_parens(const QRatFn& c) {
  return !c.den().is_one() || c.num().to_qlaurent().terms().size() > 1;
}

}  // namespace detail

template <class C>
std::string render(const SLaurent<C>& p, const char* var = "s") {
  if (p.is_zero_poly()) return "0";
  std::string out;
  for (int e = p.min_exp(); e <= p.degree(); ++e) {
    C c = p.coeff(e);
    if (qgen::is_zero(c)) continue;
    bool neg = detail::extract_sign(c);
    std::string body;
    if (e == 0) {
      body = render(c);
    } else if (is_one(c)) {
      body = detail::power_token(var, e);
    } else {
      std::string cs = render(c);
      if (detail::coeff_needs_parens(c)) cs = "(" + cs + ")";
      body = cs + "*" + detail::power_token(var, e);
    }
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += neg ? " - " + body : " + " + body;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing. A small expression parser evaluates into the widest implemented
// ring, polynomials in s over rational functions of q; the typed entry points
// below convert down with exactness checks. Accepted syntax is a superset of
// the canonical grammar: +, -, *, /, ^, parentheses, integers, and the
// indeterminates q and s (x is an alias of s).

namespace detail {

using Universal = SLaurent<QRatFn>;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Universal parse() {
    Universal v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input at position " +
                       std::to_string(pos_));
    return v;
  }

 private:
  Universal expr() {
    Universal v = term();
    for (;;) {
      skip_ws();
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Universal term() {
    Universal v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Universal d = unary();
        v = divide(v, d);
      } else {
        return v;
      }
    }
  }

  Universal unary() {
    skip_ws();
    if (accept('-')) return -unary();
    return power();
  }

  Universal power() {
    Universal base = primary();
    skip_ws();
    if (!accept('^')) return base;
    long e = integer_literal(true);
    return pow_value(base, e);
  }

  Universal primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
    char ch = text_[pos_];
    if (accept('(')) {
      Universal v = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long n = integer_literal(false);
      return Universal(QRatFn(n));
    }
    if (ch == 'q') {
      ++pos_;
      return Universal(QRatFn::from(QLaurent::q_power(1)));
    }
    if (ch == 's' || ch == 'x') {
      ++pos_;
      return Universal::s_power(1, QRatFn(1));
    }
    throw ParseError(std::string("unexpected character '") + ch + "'");
  }

  static Universal divide(const Universal& a, const Universal& b) {
    QRatFn inv = constant_inverse(b);
    Universal r = a;
    return r.scale(inv);
  }

  static QRatFn constant_inverse(const Universal& v) {
    if (v.is_zero_poly()) throw ParseError("division by zero");
    if (v.min_exp() != 0 || v.degree() != 0)
      throw ParseError("division by a polynomial in s is not supported");
    return QRatFn(1) / v.coeff(0);
  }

  static Universal pow_value(const Universal& base, long e) {
    if (e >= 0) {
      Universal r(1);
      for (long i = 0; i < e; ++i) r *= base;
      return r;
    }
    // Negative exponent: invertible constants, or a bare s term down to s^-1.
    if (base.min_exp() == base.degree() && !base.is_zero_poly()) {
      int k = base.degree();
      long target = k * e;
      if (target >= -1) {
        QRatFn c = base.coeff(k);
        QRatFn inv = QRatFn(1) / c;
        QRatFn cp(1);
        for (long i = 0; i < -e; ++i) cp = cp * inv;
        return Universal::s_power(static_cast<int>(target), cp);
      }
    }
    if (base.min_exp() == 0 && base.degree() <= 0) {
      QRatFn inv = constant_inverse(base);
      Universal r(1);
      for (long i = 0; i < -e; ++i) r.scale(inv);
      return r;
    }
    throw ParseError("negative power of a non-invertible value");
  }

  long integer_literal(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && accept('-')) neg = true;
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer at position " + std::to_string(pos_));
    long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline SLaurent<QRatFn> parse_universal(const std::string& text) {
  return detail::Parser(text).parse();
}

inline QRatFn parse_qratfn(const std::string& text) {
  SLaurent<QRatFn> v = parse_universal(text);
  if (v.is_zero_poly()) return QRatFn();
  if (v.min_exp() != 0 || v.degree() != 0)
    throw ParseError("expected a value free of s");
  return v.coeff(0);
}

inline Rational parse_rational(const std::string& text) {
  QRatFn f = parse_qratfn(text);
  if (!f.den().is_one() || f.num().degree() > 0)
    throw ParseError("expected a rational number");
  return f.num().coeff(0);
}

inline QLaurent parse_qlaurent(const std::string& text) {
  QRatFn f = parse_qratfn(text);
  auto l = ratfn_to_qlaurent(f);
  if (!l) throw ParseError("expected a Laurent polynomial in q");
  return *l;
}

inline SLaurent<QLaurent> parse_spoly_qlaurent(const std::string& text) {
  SLaurent<QRatFn> v = parse_universal(text);
  SLaurent<QLaurent> out;
  if (v.is_zero_poly()) return out;
  for (int e = v.min_exp(); e <= v.degree(); ++e) {
    auto l = ratfn_to_qlaurent(v.coeff(e));
    if (!l) throw ParseError("expected Laurent-polynomial coefficients");
    if (!l->is_zero()) out += SLaurent<QLaurent>::s_power(e, *l);
  }
  return out;
}

inline SLaurent<Rational> parse_spoly_rational(const std::string& text) {
  SLaurent<QLaurent> v = parse_spoly_qlaurent(text);
  SLaurent<Rational> out;
  if (v.is_zero_poly()) return out;
  for (int e = v.min_exp(); e <= v.degree(); ++e) {
    QLaurent c = v.coeff(e);
    if (c.is_zero()) continue;
    if (!c.is_constant()) throw ParseError("expected rational coefficients");
    out += SLaurent<Rational>::s_power(e, c.coeff(0));
  }
  return out;
}

}  // namespace qgen
