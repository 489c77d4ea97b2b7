#pragma once

#include <gmpxx.h>

#include <string>

namespace galord {

// Exact rational coefficients.  All arithmetic in the library is over Q (and
// exact values of the central parameters); there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "a" or "a/b"; canonicalizes.  Throws ParseError on malformed input.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

// r^e for possibly negative e; throws DenominatorVanishes on 0^negative.
Rat rat_pow(const Rat& r, long e);

}  // namespace galord
