#pragma once

#include <string>

#include "galord/poly.hpp"

namespace galord {

class RatFunc;

// Conventional infix syntax: x[1,2] (block,index; x[i] for single-block
// tables), q, u, ^, *, /, integer and a/b rational literals.  Printing is
// canonical (term order, explicit exponents), and print -> parse is the
// identity on normalized values.
std::string to_string(const Poly& p, const VarTable& vt);
std::string to_string(const RatFunc& f);

Poly parse_poly(const std::string& text, const VarTable& vt);
RatFunc parse_ratfunc(const std::string& text, const VarTablePtr& vt);

}  // namespace galord
