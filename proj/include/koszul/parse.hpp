#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gauss_rat.hpp"
#include "poly.hpp"

namespace koszul {

namespace detail {

enum class TokKind {
  Integer,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Tilde,
  LParen,
  RParen,
  Comma,
  Semicolon,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto emit = [&](TokKind k, std::string text, std::size_t l, std::size_t c) {
    out.push_back(Token{k, std::move(text), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    std::size_t tl = line;
    std::size_t tc = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        text.push_back(src[i]);
        ++i;
        ++col;
      }
      emit(TokKind::Integer, std::move(text), tl, tc);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string text;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        text.push_back(src[i]);
        ++i;
        ++col;
      }
      emit(TokKind::Ident, std::move(text), tl, tc);
      continue;
    }
    switch (ch) {
      case '+':
        emit(TokKind::Plus, "+", tl, tc);
        break;
      case '-':
        emit(TokKind::Minus, "-", tl, tc);
        break;
      case '*':
        if (i + 1 < src.size() && src[i + 1] == '*')
          throw ParseError("'**' is not exponentiation, use '^'", tl, tc);
        emit(TokKind::Star, "*", tl, tc);
        break;
      case '/':
        emit(TokKind::Slash, "/", tl, tc);
        break;
      case '^':
        emit(TokKind::Caret, "^", tl, tc);
        break;
      case '~':
        emit(TokKind::Tilde, "~", tl, tc);
        break;
      case '(':
        emit(TokKind::LParen, "(", tl, tc);
        break;
      case ')':
        emit(TokKind::RParen, ")", tl, tc);
        break;
      case ',':
        emit(TokKind::Comma, ",", tl, tc);
        break;
      case ';':
        emit(TokKind::Semicolon, ";", tl, tc);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", tl, tc);
    }
    ++i;
    ++col;
  }
  out.push_back(Token{TokKind::End, "", line, col});
  return out;
}

inline bool starts_factor(TokKind k) {
  return k == TokKind::Integer || k == TokKind::Ident || k == TokKind::LParen;
}

// Recursive-descent parser over a fixed variable list.  The grammar has
// no implicit multiplication and no division; '~' is a postfix conjugation
// and '^' takes a nonnegative integer literal.
class PolyParser {
 public:
  PolyParser(const std::vector<Token>& toks, const std::vector<std::string>& names,
             std::size_t n, bool allow_conjugate)
      : toks_(toks), names_(names), n_(n), allow_conj_(allow_conjugate) {}

  Poly parse() {
    Poly p = expr();
    expect_end();
    return p;
  }

 private:
  const std::vector<Token>& toks_;
  const std::vector<std::string>& names_;
  std::size_t n_;
  bool allow_conj_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what, const Token& at) {
    throw ParseError(what, at.line, at.col);
  }

  void expect_end() {
    const Token& t = peek();
    if (t.kind != TokKind::End) fail("unexpected '" + t.text + "' after expression", t);
  }

  Poly expr() {
    bool neg = false;
    if (peek().kind == TokKind::Minus) {
      take();
      neg = true;
    } else if (peek().kind == TokKind::Plus) {
      take();
    }
    Poly acc = term();
    if (neg) acc = GaussRat(-1) * acc;
    for (;;) {
      TokKind k = peek().kind;
      if (k == TokKind::Plus) {
        take();
        acc = acc + term();
      } else if (k == TokKind::Minus) {
        take();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      TokKind k = peek().kind;
      if (k == TokKind::Star) {
        take();
        acc = acc * factor();
      } else if (k == TokKind::Slash) {
        fail("division is not allowed in polynomial input", peek());
      } else if (starts_factor(k)) {
        fail("implicit multiplication is not allowed, write '*'", peek());
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    for (;;) {
      if (peek().kind == TokKind::Caret) {
        Token caret = take();
        if (peek().kind != TokKind::Integer)
          fail("exponent must be a nonnegative integer literal", peek());
        Token e = take();
        mpz_class big(e.text);
        if (!big.fits_uint_p()) fail("exponent out of range", e);
        base = base.pow(static_cast<unsigned>(big.get_ui()));
        (void)caret;
      } else if (peek().kind == TokKind::Tilde) {
        Token tilde = take();
        if (!allow_conj_)
          fail("conjugation '~' is not allowed here (input must be holomorphic)", tilde);
        base = base.conjugate();
      } else {
        break;
      }
    }
    return base;
  }

  Poly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Integer: {
        Token tok = take();
        return Poly::constant(n_, GaussRat(mpq_class(mpz_class(tok.text))));
      }
      case TokKind::Ident: {
        Token tok = take();
        if (tok.text == "i") return Poly::constant(n_, GaussRat::i());
        for (std::size_t k = 0; k < names_.size(); ++k)
          if (names_[k] == tok.text) return Poly::variable(n_, k);
        fail("unknown variable '" + tok.text + "'", tok);
      }
      case TokKind::LParen: {
        take();
        Poly inner = expr();
        if (peek().kind != TokKind::RParen) fail("expected ')'", peek());
        take();
        return inner;
      }
      default:
        fail("expected a number, variable, or '('", t);
    }
  }
};

// Evaluates a Gaussian-rational expression: same grammar plus '/' and no
// variables or conjugation.  Used for zero-list coordinates.
class RatParser {
 public:
  explicit RatParser(const std::vector<Token>& toks) : toks_(toks) {}

  GaussRat parse() {
    GaussRat v = expr();
    const Token& t = peek();
    if (t.kind != TokKind::End) fail("unexpected '" + t.text + "' after expression", t);
    return v;
  }

  GaussRat expr() {
    bool neg = false;
    if (peek().kind == TokKind::Minus) {
      take();
      neg = true;
    } else if (peek().kind == TokKind::Plus) {
      take();
    }
    GaussRat acc = term();
    if (neg) acc = GaussRat(-1) * acc;
    for (;;) {
      TokKind k = peek().kind;
      if (k == TokKind::Plus) {
        take();
        acc = acc + term();
      } else if (k == TokKind::Minus) {
        take();
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  std::size_t position() const { return pos_; }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what, const Token& at) {
    throw ParseError(what, at.line, at.col);
  }

  GaussRat term() {
    GaussRat acc = factor();
    for (;;) {
      TokKind k = peek().kind;
      if (k == TokKind::Star) {
        take();
        acc = acc * factor();
      } else if (k == TokKind::Slash) {
        Token slash = take();
        GaussRat d = factor();
        if (d == GaussRat(0)) fail("division by zero", slash);
        acc = acc / d;
      } else if (starts_factor(k)) {
        fail("implicit multiplication is not allowed, write '*'", peek());
      } else {
        break;
      }
    }
    return acc;
  }

  GaussRat factor() {
    GaussRat base = atom();
    while (peek().kind == TokKind::Caret) {
      take();
      if (peek().kind != TokKind::Integer)
        fail("exponent must be a nonnegative integer literal", peek());
      Token e = take();
      mpz_class big(e.text);
      if (!big.fits_uint_p()) fail("exponent out of range", e);
      base = base.pow(static_cast<unsigned>(big.get_ui()));
    }
    return base;
  }

  GaussRat atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Integer: {
        Token tok = take();
        return GaussRat(mpq_class(mpz_class(tok.text)));
      }
      case TokKind::Ident: {
        Token tok = take();
        if (tok.text == "i") return GaussRat::i();
        fail("variables are not allowed in a coordinate, expected a Gaussian rational", tok);
      }
      case TokKind::LParen: {
        take();
        GaussRat inner = expr();
        if (peek().kind != TokKind::RParen) fail("expected ')'", peek());
        take();
        return inner;
      }
      default:
        fail("expected a number, 'i', or '('", t);
    }
  }
};

}  // namespace detail

inline Poly parse_poly(const std::string& src, const std::vector<std::string>& variables,
                       bool allow_conjugate = false) {
  auto toks = detail::tokenize(src);
  if (toks.front().kind == detail::TokKind::End)
    throw ParseError("empty polynomial", toks.front().line, toks.front().col);
  detail::PolyParser p(toks, variables, variables.size(), allow_conjugate);
  return p.parse();
}

inline GaussRat parse_gauss_rat(const std::string& src) {
  auto toks = detail::tokenize(src);
  if (toks.front().kind == detail::TokKind::End)
    throw ParseError("empty coordinate", toks.front().line, toks.front().col);
  detail::RatParser p(toks);
  return p.parse();
}

// Zero lists have the shape "(a, b); (c, d)" with Gaussian-rational
// coordinates; every point must have exactly n coordinates.
inline std::vector<std::vector<GaussRat>> parse_zero_list(const std::string& src,
                                                          std::size_t n) {
  auto toks = detail::tokenize(src);
  std::vector<std::vector<GaussRat>> points;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(what, toks[pos].line, toks[pos].col);
  };
  if (toks[pos].kind == detail::TokKind::End) fail("empty zero list");
  for (;;) {
    if (toks[pos].kind != detail::TokKind::LParen) fail("expected '(' to open a point");
    ++pos;
    std::vector<GaussRat> point;
    for (;;) {
      std::vector<detail::Token> sub;
      std::size_t depth = 0;
      while (true) {
        const detail::Token& t = toks[pos];
        if (t.kind == detail::TokKind::End) fail("unterminated point, expected ')'");
        if (t.kind == detail::TokKind::LParen) ++depth;
        if (t.kind == detail::TokKind::RParen) {
          if (depth == 0) break;
          --depth;
        }
        if (t.kind == detail::TokKind::Comma && depth == 0) break;
        sub.push_back(t);
        ++pos;
      }
      if (sub.empty()) fail("empty coordinate");
      sub.push_back(detail::Token{detail::TokKind::End, "", toks[pos].line, toks[pos].col});
      detail::RatParser rp(sub);
      point.push_back(rp.parse());
      if (toks[pos].kind == detail::TokKind::RParen) {
        ++pos;
        break;
      }
      ++pos;
    }
    if (point.size() != n)
      fail("point has " + std::to_string(point.size()) + " coordinates, expected " +
           std::to_string(n));
    points.push_back(std::move(point));
    if (toks[pos].kind == detail::TokKind::End) break;
    if (toks[pos].kind != detail::TokKind::Semicolon) fail("expected ';' between points");
    ++pos;
    if (toks[pos].kind == detail::TokKind::End) fail("trailing ';' without a point");
  }
  return points;
}

}  // namespace koszul
