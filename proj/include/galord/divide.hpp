#pragma once

#include "galord/poly.hpp"

namespace galord {

// p = unit * rest, where unit carries the minimum exponent of every laurent
// variable (including q) and rest has minimum exponent 0 there.  For p = 0 the
// unit is 1.
struct UnitSplit {
  Monomial unit;
  Poly rest;
};
UnitSplit extract_laurent_unit(const Poly& p, const VarTable& vt);

// p = factor * prim with prim having coprime integer coefficients and positive
// leading coefficient.  Requires p != 0.
struct ScaledInt {
  Rat factor;
  Poly prim;
};
ScaledInt make_integer_primitive(const Poly& p);

// GCD of ordinary polynomials (no negative exponents), normalized to be
// primitive over the integers with positive leading coefficient.  Constants
// are units, so gcd(p, c) = 1 for c != 0.  Throws on gcd(0, 0).
//
// Recursive primitive-part Euclidean algorithm with integer content
// extraction.  Fine at desk scale (around a dozen variables, low degrees);
// not meant for large inputs.
Poly gcd_poly(const Poly& a, const Poly& b);

// Exact quotient a/b in the Laurent ring over vt: monomials in laurent
// variables are units.  Throws NotDivisible (carrying the remainder) when b
// does not divide a, or when the quotient would need a negative exponent on a
// non-laurent variable.
Poly exact_divide(const Poly& a, const Poly& b, const VarTable& vt);
bool try_exact_divide(const Poly& a, const Poly& b, const VarTable& vt, Poly& out);

}  // namespace galord
