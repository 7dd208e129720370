#pragma once
// Text form of polynomials in x over Q(sqrt(d))(t): a recursive-descent
// parser and a canonical renderer satisfying parse(render(v)) == v.
//
// Grammar (whitespace insensitive, ASCII only):
//   expr   := '-'? term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' natural)?          natural <= 64
//   atom   := natural | 'sqrt' '(' '-'? natural ')' | 't' | 'x' | '(' expr ')'
//
// Division by an expression free of x is field division in Q(sqrt(d))(t);
// division by a polynomial of positive x-degree must be exact.

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mwtrisect/polynomial.hpp"
#include "mwtrisect/rfunc.hpp"
#include "mwtrisect/scalars.hpp"

namespace mwtrisect {

namespace parse_detail {

struct Token {
  enum Kind { num, ident, plus, minus, star, slash, caret, lparen, rparen, eof } kind;
  Int value;         // for num
  std::string text;  // for ident
  std::size_t offset = 0;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const unsigned char ch = static_cast<unsigned char>(src[i]);
    if (ch >= 0x80) throw Error(errc::syntax_error, "non-ASCII byte in expression", i);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      std::string digits;
      while (i < n && std::isdigit(static_cast<unsigned char>(src[i]))) digits.push_back(src[i++]);
      out.push_back({Token::num, Int(digits), "", start});
      continue;
    }
    if (std::isalpha(ch)) {
      std::string word;
      while (i < n && std::isalnum(static_cast<unsigned char>(src[i]))) word.push_back(src[i++]);
      if (word != "sqrt" && word != "t" && word != "x")
        throw Error(errc::unknown_symbol, "unknown symbol '" + word + "'", start);
      out.push_back({Token::ident, Int(0), word, start});
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::plus; break;
      case '-': k = Token::minus; break;
      case '*': k = Token::star; break;
      case '/': k = Token::slash; break;
      case '^': k = Token::caret; break;
      case '(': k = Token::lparen; break;
      case ')': k = Token::rparen; break;
      default:
        throw Error(errc::syntax_error, std::string("unexpected character '") + src[i] + "'", i);
    }
    out.push_back({k, Int(0), "", start});
    ++i;
  }
  out.push_back({Token::eof, Int(0), "", n});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  XPoly run() {
    XPoly v = expr();
    if (peek().kind != Token::eof)
      throw Error(errc::syntax_error, "trailing input after expression", peek().offset);
    return v;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) throw Error(errc::syntax_error, std::string("expected ") + what, peek().offset);
  }

  XPoly expr() {
    bool neg = accept(Token::minus);
    XPoly v = term();
    if (neg) v = -v;
    for (;;) {
      if (accept(Token::plus))
        v += term();
      else if (peek().kind == Token::minus) {
        ++pos_;
        v -= term();
      } else
        return v;
    }
  }

  XPoly term() {
    XPoly v = factor();
    for (;;) {
      if (accept(Token::star)) {
        v *= factor();
      } else if (peek().kind == Token::slash) {
        const std::size_t at = take().offset;
        v = divide(std::move(v), factor(), at);
      } else
        return v;
    }
  }

  static XPoly divide(XPoly a, const XPoly& b, std::size_t at) {
    if (b.is_zero()) throw Error(errc::division_by_zero, "division by zero", at);
    if (b.degree() <= 0) {
      const RFunc inv = RFunc(1) / b.coeff(0);
      XPoly r;
      r.c = a.c;
      for (auto& k : r.c) k = k * inv;
      r.normalize();
      return r;
    }
    auto [q, rem] = xpoly_divrem(a, b);
    if (!rem.is_zero())
      throw Error(errc::inexact_division, "division by a polynomial in x must be exact", at);
    return q;
  }

  XPoly factor() {
    XPoly v = atom();
    if (peek().kind != Token::caret) return v;
    take();
    if (peek().kind != Token::num)
      throw Error(errc::syntax_error, "expected a natural number exponent", peek().offset);
    const Token e = take();
    if (e.value > 64) throw Error(errc::syntax_error, "exponent larger than 64", e.offset);
    return v.pow(static_cast<unsigned>(e.value));
  }

  XPoly atom() {
    const Token& tk = peek();
    switch (tk.kind) {
      case Token::num:
        return XPoly(RFunc(QuadScalar(Rat(take().value))));
      case Token::ident: {
        const Token id = take();
        if (id.text == "t") return XPoly(RFunc(UPoly::var()));
        if (id.text == "x") return XPoly::var();
        // sqrt
        expect(Token::lparen, "'(' after sqrt");
        const bool neg = accept(Token::minus);
        if (peek().kind != Token::num)
          throw Error(errc::syntax_error, "expected an integer under sqrt", peek().offset);
        Int n = take().value;
        if (neg) n = -n;
        expect(Token::rparen, "')'");
        if (n > std::numeric_limits<long long>::max())
          throw Error(errc::invalid_field, "radicand out of range", id.offset);
        return XPoly(RFunc(QuadScalar::sqrt_of(n.convert_to<long long>())));
      }
      case Token::lparen: {
        ++pos_;
        XPoly v = expr();
        expect(Token::rparen, "')'");
        return v;
      }
      default:
        throw Error(errc::syntax_error, "expected a value", tk.offset);
    }
  }
};

}  // namespace parse_detail

// --- parse entry points ----------------------------------------------------

inline XPoly parse_xpoly(const std::string& src) { return parse_detail::Parser(src).run(); }

inline RFunc parse_rfunc(const std::string& src) {
  const XPoly p = parse_xpoly(src);
  if (p.degree() > 0) throw Error(errc::expected_scalar, "expression must not involve x");
  return p.coeff(0);
}

inline UPoly parse_upoly(const std::string& src) {
  const RFunc r = parse_rfunc(src);
  if (!r.is_polynomial()) throw Error(errc::not_polynomial, "expression has a denominator in t");
  return r.num;
}

inline QuadScalar parse_scalar(const std::string& src) { return parse_rfunc(src).as_scalar(); }

inline Rat parse_rat(const std::string& src) {
  const QuadScalar k = parse_scalar(src);
  if (k.radicand() != 0) throw Error(errc::expected_scalar, "expected a rational value");
  return k.rational_part();
}

// --- canonical renderer ----------------------------------------------------

namespace render_detail {

inline std::string render_radical(const Rat& babs, long long d) {
  std::string root = "sqrt(" + std::to_string(d) + ")";
  if (babs == 1) return root;
  return rat_str(babs) + "*" + root;
}

}  // namespace render_detail

// Quadratic scalars with a nonzero radical part always carry parentheses so
// they can be spliced into any product or sum unambiguously.
inline std::string render_scalar(const QuadScalar& k) {
  if (k.radicand() == 0) return rat_str(k.rational_part());
  const Rat b = k.radical_part();
  const char* join = b < 0 ? " - " : " + ";
  return "(" + rat_str(k.rational_part()) + join +
         render_detail::render_radical(b < 0 ? Rat(-b) : b, k.radicand()) + ")";
}

namespace render_detail {

inline std::string power(const std::string& var, std::size_t n) {
  if (n == 0) return "1";
  if (n == 1) return var;
  return var + "^" + std::to_string(n);
}

// One rendered term: its sign is extracted into `negative` only for plain
// rational coefficients; parenthesized quadratic scalars keep the sign inside.
struct Term {
  bool negative = false;
  std::string body;
};

inline Term upoly_term(const QuadScalar& k, std::size_t n) {
  Term t;
  std::string coeff;
  if (k.radicand() == 0) {
    Rat a = k.rational_part();
    if (a < 0) {
      t.negative = true;
      a = -a;
    }
    if (n == 0)
      coeff = rat_str(a);
    else if (!(a == 1))
      coeff = rat_str(a);
  } else {
    coeff = render_scalar(k);
  }
  if (n == 0 && coeff.empty()) coeff = "1";
  if (coeff.empty())
    t.body = power("t", n);
  else
    t.body = n == 0 ? coeff : coeff + "*" + power("t", n);
  return t;
}

inline std::string join(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" : "";
    else
      out += terms[i].negative ? " - " : " + ";
    out += terms[i].body;
  }
  return out;
}

}  // namespace render_detail

inline std::string render_upoly(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<render_detail::Term> terms;
  for (int n = p.degree(); n >= 0; --n) {
    const QuadScalar k = p.coeff(static_cast<std::size_t>(n));
    if (k == QuadScalar(0)) continue;
    terms.push_back(render_detail::upoly_term(k, static_cast<std::size_t>(n)));
  }
  return render_detail::join(terms);
}

inline std::string render_rfunc(const RFunc& r) {
  if (r.is_polynomial()) return render_upoly(r.num);
  return "(" + render_upoly(r.num) + ")/(" + render_upoly(r.den) + ")";
}

namespace render_detail {

// Coefficient of x^j, j >= 1, rendered as a term of the top-level sum.
inline Term xpoly_term(const RFunc& r, std::size_t j) {
  const std::string xs = power("x", j);
  if (!r.is_polynomial()) {
    Term t;
    t.body = "(" + render_upoly(r.num) + ")/(" + render_upoly(r.den) + ")*" + xs;
    return t;
  }
  const UPoly& num = r.num;
  // count the nonzero t-coefficients
  std::size_t nonzero = 0, last = 0;
  for (std::size_t i = 0; i < num.c.size(); ++i)
    if (!(num.c[i] == QuadScalar(0))) {
      ++nonzero;
      last = i;
    }
  if (nonzero == 1) {
    const QuadScalar k = num.c[last];
    Term t = upoly_term(k, last);
    if (t.body == "1")
      t.body = xs;  // bare unit coefficient
    else
      t.body += "*" + xs;
    return t;
  }
  Term t;
  t.body = "(" + render_upoly(num) + ")*" + xs;
  return t;
}

}  // namespace render_detail

inline std::string render_xpoly(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<render_detail::Term> terms;
  for (int j = p.degree(); j >= 1; --j) {
    const RFunc r = p.coeff(static_cast<std::size_t>(j));
    if (r.is_zero()) continue;
    terms.push_back(render_detail::xpoly_term(r, static_cast<std::size_t>(j)));
  }
  // The constant term is spliced monomial by monomial so every sign sits at
  // the top-level join.
  const RFunc r0 = p.coeff(0);
  if (!r0.is_zero()) {
    if (r0.is_polynomial()) {
      for (int n = r0.num.degree(); n >= 0; --n) {
        const QuadScalar k = r0.num.coeff(static_cast<std::size_t>(n));
        if (k == QuadScalar(0)) continue;
        terms.push_back(render_detail::upoly_term(k, static_cast<std::size_t>(n)));
      }
    } else {
      render_detail::Term t;
      t.body = "(" + render_upoly(r0.num) + ")/(" + render_upoly(r0.den) + ")";
      terms.push_back(t);
    }
  }
  return render_detail::join(terms);
}

}  // namespace mwtrisect
