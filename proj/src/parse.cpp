#include "expode/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

namespace expode {

namespace {

struct Token {
  enum class Kind {
    number,  // rational literal, possibly imaginary ("3/4", "2i")
    imag_unit,
    variable,
    kw_exp,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end,
  };

  Kind kind = Kind::end;
  Rational value = 0;
  bool imaginary = false;
  int line = 1, col = 1;
  std::string text;
};

[[noreturn]] void syntax_error(const Token& at, const std::string& what) {
  raise(Errc::syntax_error, "line " + std::to_string(at.line) + ", col " +
                                std::to_string(at.col) + ": " + what);
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t = next();
      out.push_back(t);
      if (t.kind == Token::Kind::end) break;
    }
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    ++col_;
    return c;
  }

  Token make(Token::Kind k, int line, int col, std::string text) {
    Token t;
    t.kind = k;
    t.line = line;
    t.col = col;
    t.text = std::move(text);
    return t;
  }

  Token next() {
    const int line = line_, col = col_;
    if (pos_ >= text_.size()) return make(Token::Kind::end, line, col, "<end>");
    char c = peek();
    switch (c) {
      case '+': advance(); return make(Token::Kind::plus, line, col, "+");
      case '-': advance(); return make(Token::Kind::minus, line, col, "-");
      case '*': advance(); return make(Token::Kind::star, line, col, "*");
      case '/': advance(); return make(Token::Kind::slash, line, col, "/");
      case '^': advance(); return make(Token::Kind::caret, line, col, "^");
      case '(': advance(); return make(Token::Kind::lparen, line, col, "(");
      case ')': advance(); return make(Token::Kind::rparen, line, col, ")");
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(line, col);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident(line, col);
    Token bad = make(Token::Kind::end, line, col, std::string(1, c));
    syntax_error(bad, std::string("unexpected character '") + c + "'");
  }

  Token lex_number(int line, int col) {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    std::string den;
    // A '/' glues a denominator into the literal only when digits follow
    // immediately; "3 / 4" stays three tokens (same value via division).
    if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += advance();
    }
    Token t = make(Token::Kind::number, line, col, digits + (den.empty() ? "" : "/" + den));
    if (!den.empty() && BigInt(den) == 0) syntax_error(t, "zero denominator in rational literal");
    Rational q(BigInt(digits), den.empty() ? BigInt(1) : BigInt(den));
    q.canonicalize();
    t.value = q;
    // Swallow a trailing 'i' ("2i", "3/4i") unless it starts a longer word.
    if (peek() == 'i' && !std::isalnum(static_cast<unsigned char>(peek(1))) && peek(1) != '_') {
      advance();
      t.imaginary = true;
      t.text += "i";
    }
    return t;
  }

  Token lex_ident(int line, int col) {
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') word += advance();
    if (word == "z") return make(Token::Kind::variable, line, col, word);
    if (word == "i") return make(Token::Kind::imag_unit, line, col, word);
    if (word == "exp") return make(Token::Kind::kw_exp, line, col, word);
    Token bad = make(Token::Kind::end, line, col, word);
    syntax_error(bad, "unknown identifier '" + word + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

// Extract the exp-free part of a value, or fail with the given description.
RatFunc require_exp_free(const ExpPoly& e, const Token& at, const std::string& role) {
  if (e.is_zero()) return RatFunc();
  if (e.terms().size() == 1 && e.terms().front().exponent.is_zero())
    return e.terms().front().coeff;
  syntax_error(at, role + " must not contain exp(...)");
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExpPoly run() {
    ExpPoly e = expr();
    if (cur().kind != Token::Kind::end) syntax_error(cur(), "unexpected '" + cur().text + "'");
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Token::Kind k) {
    if (cur().kind != k) return false;
    ++pos_;
    return true;
  }

  ExpPoly expr() {
    ExpPoly acc = term();
    while (cur().kind == Token::Kind::plus || cur().kind == Token::Kind::minus) {
      bool minus = take().kind == Token::Kind::minus;
      ExpPoly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  ExpPoly term() {
    ExpPoly acc = unary();
    while (cur().kind == Token::Kind::star || cur().kind == Token::Kind::slash) {
      const Token& op = take();
      ExpPoly rhs = unary();
      if (op.kind == Token::Kind::star) {
        acc *= rhs;
      } else {
        RatFunc d = require_exp_free(rhs, op, "a '/' denominator");
        if (d.is_zero()) raise(Errc::division_by_zero, "division by zero in expression");
        acc *= d.pow(-1);
      }
    }
    return acc;
  }

  ExpPoly unary() {
    if (accept(Token::Kind::plus)) return unary();
    if (accept(Token::Kind::minus)) return -unary();
    return factor();
  }

  ExpPoly factor() {
    ExpPoly b = base();
    if (!accept(Token::Kind::caret)) return b;
    const bool neg = accept(Token::Kind::minus);
    const Token& e = take();
    if (e.kind != Token::Kind::number || e.imaginary || e.value.get_den() != 1)
      syntax_error(e, "'^' requires an integer exponent");
    if (!e.value.get_num().fits_slong_p()) syntax_error(e, "exponent too large");
    long n = e.value.get_num().get_si();
    if (neg) n = -n;
    if (n >= 0) return b.pow(static_cast<unsigned>(n));
    RatFunc r = require_exp_free(b, e, "a negative-power base");
    if (r.is_zero()) raise(Errc::division_by_zero, "zero raised to a negative power");
    return ExpPoly(r.pow(static_cast<int>(n)));
  }

  ExpPoly base() {
    const Token& t = take();
    switch (t.kind) {
      case Token::Kind::number: {
        GaussianRational g = t.imaginary ? GaussianRational(0, t.value)
                                         : GaussianRational(t.value, 0);
        return ExpPoly(RatFunc(g));
      }
      case Token::Kind::imag_unit:
        return ExpPoly(RatFunc(GaussianRational::i()));
      case Token::Kind::variable:
        return ExpPoly(Poly::variable());
      case Token::Kind::kw_exp: {
        if (!accept(Token::Kind::lparen)) syntax_error(cur(), "expected '(' after exp");
        ExpPoly arg = expr();
        if (!accept(Token::Kind::rparen)) syntax_error(cur(), "expected ')'");
        RatFunc r = require_exp_free(arg, t, "an exp(...) argument");
        if (!r.is_polynomial())
          raise(Errc::non_polynomial_exponent, "exp(...) argument must be a polynomial");
        const Poly& q = r.as_polynomial();
        if (!q.constant_term().is_zero())
          raise(Errc::nonzero_constant_exponent,
                "exp(...) argument must have zero constant term");
        return ExpPoly::term(RatFunc(1), q);
      }
      case Token::Kind::lparen: {
        ExpPoly inner = expr();
        if (!accept(Token::Kind::rparen)) syntax_error(cur(), "expected ')'");
        return inner;
      }
      default:
        syntax_error(t, "expected a value, found '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

bool coeff_is_negative(const GaussianRational& c) {
  if (c.im == 0) return c.re < 0;
  if (c.re == 0) return c.im < 0;
  return false;  // mixed signs stay inside parentheses
}

void append_monomial(std::string& out, const GaussianRational& coeff, int j) {
  GaussianRational disp = coeff;
  if (out.empty()) {
    if (coeff_is_negative(disp)) {
      out += "-";
      disp = -disp;
    }
  } else if (coeff_is_negative(disp)) {
    out += " - ";
    disp = -disp;
  } else {
    out += " + ";
  }
  const bool unit = disp.is_one();
  if (j == 0) {
    out += gaussian_to_string(disp);
    return;
  }
  if (!unit) out += gaussian_to_string(disp) + "*";
  out += j == 1 ? "z" : "z^" + std::to_string(j);
}

}  // namespace

Poly Parsed::poly() const {
  RatFunc r = ratfunc();
  if (!r.is_polynomial()) raise(Errc::invalid_argument, "expression is not a polynomial");
  return r.as_polynomial();
}

RatFunc Parsed::ratfunc() const {
  if (value.is_zero()) return RatFunc();
  if (value.terms().size() == 1 && value.terms().front().exponent.is_zero())
    return value.terms().front().coeff;
  raise(Errc::invalid_argument, "expression contains exp(...) terms");
}

Parsed parse(const std::string& text) {
  Parsed out;
  out.value = Parser(Lexer(text).run()).run();
  if (out.value.is_zero()) {
    out.kind = Parsed::Kind::poly;
  } else if (out.value.terms().size() == 1 && out.value.terms().front().exponent.is_zero()) {
    out.kind = out.value.terms().front().coeff.is_polynomial() ? Parsed::Kind::poly
                                                               : Parsed::Kind::ratfunc;
  } else {
    out.kind = Parsed::Kind::exppoly;
  }
  return out;
}

Poly parse_poly(const std::string& text) { return parse(text).poly(); }

RatFunc parse_ratfunc(const std::string& text) { return parse(text).ratfunc(); }

ExpPoly parse_exppoly(const std::string& text) { return parse(text).value; }

Rational parse_rational_scalar(const std::string& text) {
  GaussianRational g = parse_gaussian_scalar(text);
  if (g.im != 0) raise(Errc::invalid_argument, "expected a real rational, got " + text);
  return g.re;
}

GaussianRational parse_gaussian_scalar(const std::string& text) {
  Poly p = parse_poly(text);
  if (p.degree() > 0) raise(Errc::invalid_argument, "expected a scalar, got " + text);
  return p.constant_term();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    const GaussianRational& c = p.coeff(j);
    if (c.is_zero()) continue;
    append_monomial(out, c, j);
  }
  return out;
}

std::string to_string(const RatFunc& r) {
  if (r.is_polynomial()) return to_string(r.as_polynomial());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::string to_string(const ExpPoly& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const ExpTerm& t : e.terms()) {
    if (t.exponent.is_zero()) {
      if (!out.empty()) out += " + ";
      std::string c = to_string(t.coeff);
      out += t.coeff.is_polynomial() ? c : "(" + c + ")";
      continue;
    }
    std::string body = "exp(" + to_string(t.exponent) + ")";
    if (t.coeff == RatFunc(1)) {
      out += out.empty() ? body : " + " + body;
    } else if (t.coeff == RatFunc(-1)) {
      out += out.empty() ? "-" + body : " - " + body;
    } else {
      std::string c = "(" + to_string(t.coeff) + ")*" + body;
      out += out.empty() ? c : " + " + c;
    }
  }
  return out;
}

}  // namespace expode
