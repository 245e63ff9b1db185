#pragma once
// Expression front end shared by the CLI and the tests.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := ('-'|'+') unary | factor
//   factor := base ('^' ('-')? integer)?
//   base   := rational ['i'] | 'i' | 'z' | 'exp' '(' expr ')' | '(' expr ')'
// A rational literal "3/4" is a single token, so "3/4i" is the imaginary
// number (3/4)i.  exp(...) arguments must be polynomials with zero constant
// term; '/' denominators and negative-power bases must be free of exp(...).

#include <string>

#include "expode/expoly.hpp"

namespace expode {

// Parse result lowered to the tightest of Poly / RatFunc / ExpPoly.
struct Parsed {
  enum class Kind { poly, ratfunc, exppoly };

  Kind kind = Kind::poly;
  ExpPoly value;  // the general reading, always valid

  // Conversions; signal InvalidArgument when the value is a looser type.
  Poly poly() const;
  RatFunc ratfunc() const;
  const ExpPoly& exppoly() const { return value; }
};

Parsed parse(const std::string& text);

// Conveniences that enforce the target type (InvalidArgument otherwise).
Poly parse_poly(const std::string& text);
RatFunc parse_ratfunc(const std::string& text);
ExpPoly parse_exppoly(const std::string& text);

// Plain rational scalar (e.g. "-3/4") for command-line flags.
Rational parse_rational_scalar(const std::string& text);
// Gaussian-rational scalar (e.g. "1+2i").
GaussianRational parse_gaussian_scalar(const std::string& text);

// Printers; parsing the output reproduces the value exactly.
std::string to_string(const Poly& p);
std::string to_string(const RatFunc& r);
std::string to_string(const ExpPoly& e);

}  // namespace expode
