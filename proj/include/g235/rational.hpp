#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>

#include "g235/errors.hpp"

namespace g235 {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Rat rat(long n, long d = 1) {
  if (d == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  Rat r(n);
  r /= d;
  return r;
}

inline int sign_of(const Rat& q) { return q.sign(); }

/// Parses "p", "-p", or "p/q".  Throws ParseError on malformed input.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& q);

/// True iff q is the square of a rational; if so *root is set to the non-negative root.
bool rational_square_root(const Rat& q, Rat* root);

/// Rational l,u with l <= sqrt(q) <= u and u - l <= (1/2)^prec, for q >= 0.
void sqrt_bounds(const Rat& q, int prec, Rat& lo, Rat& hi);

} // namespace g235
