#include "galord/divide.hpp"

#include <algorithm>
#include <cassert>

#include "galord/errors.hpp"
#include "galord/io.hpp"

namespace galord {

UnitSplit extract_laurent_unit(const Poly& p, const VarTable& vt) {
  UnitSplit s;
  if (p.is_zero()) {
    s.rest = p;
    return s;
  }
  // minimum exponent per occurring laurent variable, over all terms
  std::map<VarId, int> mins;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.exponents())
      if (vt.laurent_ok(v)) mins.try_emplace(v, e);
  for (const auto& [m, c] : p.terms())
    for (auto& [v, e] : mins) e = std::min(e, m.exponent(v));
  Monomial unit;
  for (const auto& [v, e] : mins)
    if (e != 0) unit.push(v, e);
  s.unit = unit;
  s.rest = p * Poly::term(unit.inverse(), 1);
  return s;
}

ScaledInt make_integer_primitive(const Poly& p) {
  assert(!p.is_zero());
  Int den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (p.leading().second < 0) factor = -factor;
  ScaledInt out{factor, p * (Rat(1) / factor)};
  return out;
}

namespace {

int deg_in(const Poly& p, VarId v) { return p.exponent_range(v).second; }

// lc(B)^k * A reduced against B in the variable v (pseudo-remainder).
Poly pseudo_rem(Poly a, const Poly& b, VarId v) {
  int db = deg_in(b, v);
  Poly lb = b.coefficient_of(v, db);
  while (!a.is_zero() && deg_in(a, v) >= db) {
    int da = deg_in(a, v);
    Poly la = a.coefficient_of(v, da);
    a = lb * a - la * Poly::variable(v, da - db) * b;
    assert(a.is_zero() || deg_in(a, v) < da || (da == 0 && db == 0));
    if (da == 0) break;  // both v-free: one cancellation step suffices
  }
  return a;
}

Poly positive_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return make_integer_primitive(p).prim;
}

Poly gcd_rec(Poly a, Poly b);

// gcd of the coefficients of p viewed as univariate in v
Poly content_wrt(const Poly& p, VarId v) {
  Poly cont = Poly::zero();
  for (auto& [k, c] : p.coefficients_in(v)) {
    cont = cont.is_zero() ? positive_primitive(c) : gcd_rec(cont, c);
    if (cont.is_one()) break;
  }
  return cont;
}

Poly divide_exact_nocheck(const Poly& a, const Poly& b, const char* what) {
  Poly q;
  // local table-free division: all inputs here are ordinary polynomials
  Poly r = a;
  while (!r.is_zero()) {
    const auto& [ma, ca] = r.leading();
    const auto& [mb, cb] = b.leading();
    Monomial m = ma * mb.inverse();
    bool ok = true;
    for (const auto& [w, e] : m.exponents())
      if (e < 0) ok = false;
    if (!ok) throw math_error(std::string("internal exact division failed: ") + what);
    Poly t = Poly::term(m, ca / cb);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

Poly gcd_rec(Poly a, Poly b) {
  if (a.is_zero()) return positive_primitive(b);
  if (b.is_zero()) return positive_primitive(a);
  if (a.is_constant() || b.is_constant()) return Poly::one();

  std::vector<VarId> vars = a.variables();
  for (VarId v : b.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  VarId v = vars.front();

  if (!a.contains_var(v)) return gcd_rec(std::move(a), content_wrt(b, v));
  if (!b.contains_var(v)) return gcd_rec(content_wrt(a, v), std::move(b));

  Poly ca = content_wrt(a, v), cb = content_wrt(b, v);
  Poly cont = gcd_rec(ca, cb);
  a = divide_exact_nocheck(a, ca, "content");
  b = divide_exact_nocheck(b, cb, "content");

  if (deg_in(a, v) < deg_in(b, v)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_rem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = Poly::zero();
    } else {
      r = positive_primitive(r);
      Poly rc = content_wrt(r, v);
      b = divide_exact_nocheck(r, rc, "prs");
    }
  }
  return positive_primitive(cont * a);
}

}  // namespace

Poly gcd_poly(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw math_error("gcd of two zero polynomials");
  if (a.is_zero()) return positive_primitive(b);
  if (b.is_zero()) return positive_primitive(a);
  return gcd_rec(positive_primitive(a), positive_primitive(b));
}

bool try_exact_divide(const Poly& a, const Poly& b, const VarTable& vt, Poly& out) {
  if (b.is_zero()) throw math_error("division by zero polynomial");
  if (a.is_zero()) {
    out = Poly::zero();
    return true;
  }
  UnitSplit ua = extract_laurent_unit(a, vt);
  UnitSplit ub = extract_laurent_unit(b, vt);
  Poly q;
  Poly r = ua.rest;
  const Poly& d = ub.rest;
  while (!r.is_zero()) {
    const auto& [ma, ca] = r.leading();
    const auto& [mb, cb] = d.leading();
    Monomial m;
    bool ok = true;
    m = ma * mb.inverse();
    for (const auto& [w, e] : m.exponents())
      if (e < 0) ok = false;
    if (!ok) {
      out = r;  // remainder witness
      return false;
    }
    Poly t = Poly::term(m, ca / cb);
    q = q + t;
    r = r - t * d;
  }
  Monomial shift = ua.unit * ub.unit.inverse();
  for (const auto& [w, e] : shift.exponents())
    if (e < 0 && !vt.laurent_ok(w)) {
      out = a;  // quotient leaves the ring
      return false;
    }
  out = q * Poly::term(shift, 1);
  return true;
}

Poly exact_divide(const Poly& a, const Poly& b, const VarTable& vt) {
  Poly out;
  if (!try_exact_divide(a, b, vt, out)) throw NotDivisible(to_string(out, vt));
  return out;
}

}  // namespace galord
