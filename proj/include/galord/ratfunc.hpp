#pragma once

#include <functional>

#include "galord/divide.hpp"
#include "galord/poly.hpp"

namespace galord {

/// Normalized quotient of Laurent polynomials over Q.  Invariants:
///   - den != 0, gcd(num, den) a unit;
///   - den is an ordinary polynomial (no negative exponents), not divisible by
///     any laurent variable: Laurent monomial units live in num;
///   - den has coprime integer coefficients and positive leading coefficient.
/// Equal values therefore have identical representations.
class RatFunc {
 public:
  RatFunc() = default;  // empty placeholder; only assignable

  static RatFunc zero(VarTablePtr vt);
  static RatFunc one(VarTablePtr vt);
  static RatFunc constant(VarTablePtr vt, Rat c);
  static RatFunc from_poly(VarTablePtr vt, Poly p);
  static RatFunc var(VarTablePtr vt, VarId v, int e = 1);
  // num/den, normalized.  Throws on den == 0.
  static RatFunc make(VarTablePtr vt, Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarTablePtr& table() const { return vt_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Laurent polynomial (no denominator at all).
  bool is_polynomial() const { return den_.is_one(); }
  // Denominator involves at most the central q: a scalar of the ground field
  // once q is specialized away from its finitely many bad values.
  bool denominator_is_q_scalar() const;
  const Poly& poly() const;  // requires is_polynomial()

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator*(const Rat& c) const;
  RatFunc inverse() const;
  RatFunc pow(int e) const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Exact value at a full assignment (indexed by VarId).  Throws
  // DenominatorVanishes when the denominator (or a negative power) vanishes.
  Rat evaluate_at(const std::vector<Rat>& point) const;

 private:
  VarTablePtr vt_;
  Poly num_;
  Poly den_;
};

RatFunc operator*(const Rat& c, const RatFunc& f);

// Composed exact substitution v -> image(v); variables not in the map stay
// fixed.  Ring homomorphism on its domain.
RatFunc substitute(const Poly& p, const VarTablePtr& vt,
                   const std::function<const RatFunc*(VarId)>& image);
RatFunc substitute(const RatFunc& f,
                   const std::function<const RatFunc*(VarId)>& image);

}  // namespace galord
