#pragma once

#include <functional>
#include <map>
#include <vector>

#include "galord/numeric.hpp"
#include "galord/vartable.hpp"

namespace galord {

/// Sparse exponent vector.  Entries are sorted by VarId and never zero, so
/// equality is representation equality.  Negative exponents are legal at this
/// level; which variables may carry them is a VarTable concern checked where
/// values enter the system.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial var(VarId v, int e = 1);

  bool is_one() const { return exps_.empty(); }
  int exponent(VarId v) const;
  int total_degree() const;
  const std::vector<std::pair<VarId, int>>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int e) const;
  // this / o when every exponent stays >= 0 outside `laurent`; nullopt-style
  // via ok flag so exact division can fail cheaply.
  bool try_divide(const Monomial& o, const VarTable& vt, Monomial& out) const;

  bool has_negative(const VarTable& vt) const;  // negative exp on a non-laurent var

  bool operator==(const Monomial& o) const = default;

  // Builder access: entries must be added in strictly increasing VarId order.
  void push(VarId v, int e);

 private:
  std::vector<std::pair<VarId, int>> exps_;
};

// Graded-lexicographic order: total degree first, then lexicographic in the
// fixed VarId order (smaller VarId is more significant).  Total on Laurent
// monomials; used for canonical term order and map keys.
bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_less(a, b);
  }
};

/// Sparse polynomial with exact rational coefficients.  Terms are stored in
/// strictly decreasing graded-lex order with no zero coefficients, so
/// operator== is value equality.
class Poly {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly() = default;
  static Poly zero() { return {}; }
  static Poly one() { return constant(1); }
  static Poly constant(Rat c);
  static Poly variable(VarId v, int e = 1);
  static Poly term(Monomial m, Rat c);
  // Combines duplicates, drops zeros, sorts.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  // Leading term in the canonical order; asserts non-zero.
  const Term& leading() const;
  int total_degree() const;  // max over terms; -1 for zero
  Rat constant_value() const;  // requires is_constant()

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  Poly pow(int e) const;  // e >= 0

  bool operator==(const Poly& o) const = default;

  // Degree in one variable: (min, max) exponent over terms; (0,0) for zero.
  std::pair<int, int> exponent_range(VarId v) const;
  bool contains_var(VarId v) const;
  std::vector<VarId> variables() const;
  bool has_negative(const VarTable& vt) const;

  // Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient_of(VarId v, int k) const;
  // All coefficients by exponent of v (dense-ish map).
  std::map<int, Poly> coefficients_in(VarId v) const;

 private:
  std::vector<Term> terms_;
};

Poly operator*(const Rat& c, const Poly& p);

// Exact evaluation; `point` is indexed by VarId and must cover every variable
// occurring in p.  Throws DenominatorVanishes for 0^negative.
Rat evaluate_poly(const Poly& p, const std::vector<Rat>& point);

}  // namespace galord
