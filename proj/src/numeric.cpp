#include "galord/numeric.hpp"

#include "galord/errors.hpp"

namespace galord {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator in literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0 && e < 0) throw DenominatorVanishes("0");
  Rat base = e > 0 ? r : Rat(1) / r;
  unsigned long n = e > 0 ? e : -e;
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace galord
