#include "galord/ratfunc.hpp"

#include <cassert>

#include "galord/errors.hpp"
#include "galord/io.hpp"

namespace galord {

RatFunc RatFunc::zero(VarTablePtr vt) { return from_poly(std::move(vt), Poly::zero()); }
RatFunc RatFunc::one(VarTablePtr vt) { return from_poly(std::move(vt), Poly::one()); }
RatFunc RatFunc::constant(VarTablePtr vt, Rat c) {
  return from_poly(std::move(vt), Poly::constant(std::move(c)));
}
RatFunc RatFunc::var(VarTablePtr vt, VarId v, int e) {
  return from_poly(std::move(vt), Poly::variable(v, e));
}

RatFunc RatFunc::from_poly(VarTablePtr vt, Poly p) {
  RatFunc f;
  f.vt_ = std::move(vt);
  f.num_ = std::move(p);
  f.den_ = Poly::one();
  return f;
}

RatFunc RatFunc::make(VarTablePtr vt, Poly num, Poly den) {
  if (den.is_zero()) throw math_error("zero denominator");
  RatFunc f;
  f.vt_ = std::move(vt);
  if (num.is_zero()) {
    f.num_ = Poly::zero();
    f.den_ = Poly::one();
    return f;
  }
  UnitSplit un = extract_laurent_unit(num, *f.vt_);
  UnitSplit ud = extract_laurent_unit(den, *f.vt_);
  Poly g = gcd_poly(un.rest, ud.rest);
  Poly n = un.rest, d = ud.rest;
  if (!g.is_one()) {
    n = exact_divide(n, g, *f.vt_);
    d = exact_divide(d, g, *f.vt_);
  }
  ScaledInt si = make_integer_primitive(d);
  f.den_ = si.prim;
  f.num_ = n * (Rat(1) / si.factor) * Poly::term(un.unit * ud.unit.inverse(), 1);
  return f;
}

bool RatFunc::denominator_is_q_scalar() const {
  if (den_.is_one()) return true;
  if (!vt_->has_q()) return false;
  for (VarId v : den_.variables())
    if (v != vt_->q()) return false;
  return true;
}

const Poly& RatFunc::poly() const {
  if (!is_polynomial()) throw math_error("not a polynomial: " + to_string(*this));
  return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  assert(vt_ && o.vt_);
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return make(vt_, num_ + o.num_, den_);
  Poly g = gcd_poly(den_, o.den_);
  if (g.is_one()) return make(vt_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly da = exact_divide(den_, g, *vt_);
  Poly db = exact_divide(o.den_, g, *vt_);
  return make(vt_, num_ * db + o.num_ * da, da * db * g);
}

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.num_ = -f.num_;
  return f;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  assert(vt_ && o.vt_);
  if (is_zero() || o.is_zero()) return zero(vt_);
  // cross-cancellation keeps the final scaling gcd-free
  UnitSplit ua = extract_laurent_unit(num_, *vt_);
  UnitSplit ub = extract_laurent_unit(o.num_, *vt_);
  Poly g1 = gcd_poly(ua.rest, o.den_);
  Poly g2 = gcd_poly(ub.rest, den_);
  Poly na = g1.is_one() ? ua.rest : exact_divide(ua.rest, g1, *vt_);
  Poly nb = g2.is_one() ? ub.rest : exact_divide(ub.rest, g2, *vt_);
  Poly da = g2.is_one() ? den_ : exact_divide(den_, g2, *vt_);
  Poly db = g1.is_one() ? o.den_ : exact_divide(o.den_, g1, *vt_);
  Poly d = da * db;
  RatFunc f;
  f.vt_ = vt_;
  if (d.is_constant()) {
    f.den_ = Poly::one();
    f.num_ = na * nb * Poly::term(ua.unit * ub.unit, Rat(1) / d.constant_value());
    return f;
  }
  ScaledInt si = make_integer_primitive(d);
  f.den_ = si.prim;
  f.num_ = na * nb * Poly::term(ua.unit * ub.unit, Rat(1) / si.factor);
  return f;
}

RatFunc RatFunc::operator*(const Rat& c) const {
  if (c == 0) return zero(vt_);
  RatFunc f = *this;
  f.num_ = f.num_ * c;
  return f;
}

RatFunc operator*(const Rat& c, const RatFunc& f) { return f * c; }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw math_error("inverse of zero");
  return make(vt_, den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return one(vt_);
  RatFunc base = e > 0 ? *this : inverse();
  unsigned n = e > 0 ? e : -e;
  RatFunc acc = one(vt_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = (n >>= 1) ? base * base : base;
  }
  return acc;
}

Rat RatFunc::evaluate_at(const std::vector<Rat>& point) const {
  Rat d = evaluate_poly(den_, point);
  if (d == 0) throw DenominatorVanishes(to_string(den_, *vt_));
  return evaluate_poly(num_, point) / d;
}

RatFunc substitute(const Poly& p, const VarTablePtr& vt,
                   const std::function<const RatFunc*(VarId)>& image) {
  RatFunc acc = RatFunc::zero(vt);
  for (const auto& [m, c] : p.terms()) {
    RatFunc t = RatFunc::constant(vt, c);
    for (const auto& [v, e] : m.exponents()) {
      const RatFunc* img = image(v);
      if (img == nullptr)
        t = t * RatFunc::var(vt, v, e);
      else
        t = t * img->pow(e);
    }
    acc = acc + t;
  }
  return acc;
}

RatFunc substitute(const RatFunc& f,
                   const std::function<const RatFunc*(VarId)>& image) {
  RatFunc n = substitute(f.num(), f.table(), image);
  RatFunc d = substitute(f.den(), f.table(), image);
  return n / d;
}

}  // namespace galord
