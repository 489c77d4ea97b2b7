#include "galord/poly.hpp"

#include <algorithm>
#include <cassert>

#include "galord/errors.hpp"

namespace galord {

Monomial Monomial::var(VarId v, int e) {
  Monomial m;
  if (e != 0) m.exps_.push_back({v, e});
  return m;
}

void Monomial::push(VarId v, int e) {
  assert(exps_.empty() || exps_.back().first < v);
  if (e != 0) exps_.push_back({v, e});
}

int Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() && b != o.exps_.end()) {
    if (a->first < b->first)
      r.exps_.push_back(*a++);
    else if (b->first < a->first)
      r.exps_.push_back(*b++);
    else {
      int e = a->second + b->second;
      if (e != 0) r.exps_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  r.exps_.insert(r.exps_.end(), a, exps_.end());
  r.exps_.insert(r.exps_.end(), b, o.exps_.end());
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& [v, e] : r.exps_) e = -e;
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  r = *this;
  for (auto& [v, k] : r.exps_) k *= e;
  return r;
}

bool Monomial::try_divide(const Monomial& o, const VarTable& vt, Monomial& out) const {
  out = *this * o.inverse();
  for (const auto& [v, e] : out.exps_)
    if (e < 0 && !vt.laurent_ok(v)) return false;
  return true;
}

bool Monomial::has_negative(const VarTable& vt) const {
  for (const auto& [v, e] : exps_)
    if (e < 0 && !vt.laurent_ok(v)) return true;
  return false;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lex on the fixed variable order: first differing exponent decides,
  // larger exponent on the more significant variable wins.
  auto i = a.exponents().begin(), j = b.exponents().begin();
  while (i != a.exponents().end() && j != b.exponents().end()) {
    if (i->first != j->first) {
      // the one holding the smaller VarId has a nonzero exponent there
      if (i->first < j->first) return i->second < 0;
      return j->second > 0;
    }
    if (i->second != j->second) return i->second < j->second;
    ++i, ++j;
  }
  if (i != a.exponents().end()) return i->second < 0;
  if (j != b.exponents().end()) return j->second > 0;
  return false;
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Poly Poly::variable(VarId v, int e) { return term(Monomial::var(v, e), 1); }

Poly Poly::term(Monomial m, Rat c) {
  Poly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rat, MonomialLess> acc;
  for (auto& [m, c] : terms) {
    auto [it, fresh] = acc.try_emplace(std::move(m), c);
    if (!fresh) it->second += c;
  }
  Poly p;
  p.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) p.terms_.push_back({it->first, it->second});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

const Poly::Term& Poly::leading() const {
  assert(!terms_.empty());
  return terms_.front();
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.total_degree();
}

Rat Poly::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rat(0) : terms_[0].second;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->first == b->first) {
      Rat c = a->second + b->second;
      if (c != 0) r.terms_.push_back({a->first, std::move(c)});
      ++a, ++b;
    } else if (monomial_less(b->first, a->first)) {
      r.terms_.push_back(*a++);
    } else {
      r.terms_.push_back(*b++);
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::map<Monomial, Rat, MonomialLess> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Rat prod = ca * cb;
      auto [it, fresh] = acc.try_emplace(ma * mb, prod);
      if (!fresh) it->second += prod;
    }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Poly operator*(const Rat& c, const Poly& p) { return p * c; }

Poly Poly::pow(int e) const {
  assert(e >= 0);
  Poly acc = Poly::one();
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::pair<int, int> Poly::exponent_range(VarId v) const {
  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (first) {
      lo = hi = e;
      first = false;
    } else {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  return {lo, hi};
}

bool Poly::contains_var(VarId v) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) != 0) return true;
  return false;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Poly::has_negative(const VarTable& vt) const {
  for (const auto& [m, c] : terms_)
    if (m.has_negative(vt)) return true;
  return false;
}

Poly Poly::coefficient_of(VarId v, int k) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    Monomial rest;
    for (const auto& [w, e] : m.exponents())
      if (w != v) rest.push(w, e);
    out.push_back({std::move(rest), c});
  }
  return from_terms(std::move(out));
}

std::map<int, Poly> Poly::coefficients_in(VarId v) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    for (const auto& [w, e] : m.exponents())
      if (w != v) rest.push(w, e);
    buckets[m.exponent(v)].push_back({std::move(rest), c});
  }
  std::map<int, Poly> out;
  for (auto& [k, ts] : buckets) out.emplace(k, from_terms(std::move(ts)));
  return out;
}

Rat evaluate_poly(const Poly& p, const std::vector<Rat>& point) {
  Rat acc(0);
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (const auto& [v, e] : m.exponents()) {
      assert(v < static_cast<VarId>(point.size()));
      t *= rat_pow(point[v], e);
    }
    acc += t;
  }
  return acc;
}

}  // namespace galord
