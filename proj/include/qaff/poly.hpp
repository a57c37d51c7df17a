#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qaff {

/// Dense univariate polynomial over a field F.
///
/// F must be default-constructible (= zero), support +,-,*,/ and provide
/// is_zero() and one().  Coefficients are stored low degree first with no
/// trailing zeros; the zero polynomial has an empty coefficient vector.
template <class F>
struct Poly {
  std::vector<F> c;

  Poly() = default;
  explicit Poly(F x) {
    if (!x.is_zero()) c.push_back(std::move(x));
  }
  static Poly monomial(F x, int deg) {
    Poly p;
    if (x.is_zero()) return p;
    p.c.assign(static_cast<size_t>(deg) + 1, F{});
    p.c.back() = std::move(x);
    return p;
  }
  static Poly one() { return Poly(F::one()); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
  const F& lead() const { return c.back(); }

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  F coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return F{};
    return c[i];
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
    }
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
      if (i < b.c.size()) r.c[i] = r.c[i] - b.c[i];
    }
    r.normalize();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = F{} - x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, F{});
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }
  friend Poly operator*(const Poly& a, const F& s) {
    Poly r = a;
    for (auto& x : r.c) x = x * s;
    r.normalize();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return (a - b).is_zero();
  }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly q;
    F inv_lead = F::one() / b.lead();
    int db = b.degree();
    if (a.degree() >= db) q.c.assign(a.degree() - db + 1, F{});
    while (!a.is_zero() && a.degree() >= db) {
      int k = a.degree() - db;
      F f = a.lead() * inv_lead;
      q.c[k] = f;
      for (int i = 0; i <= db; ++i) a.c[k + i] = a.c[k + i] - f * b.c[i];
      a.normalize();
    }
    q.normalize();
    return {q, a};
  }

  /// Monic gcd via the Euclidean algorithm.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      a = divmod(a, b).second;
      std::swap(a, b);
    }
    if (!a.is_zero()) a = a * (F::one() / a.lead());
    return a;
  }

  F eval(const F& x) const {
    F r{};
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }

  Poly derivative() const {
    Poly r;
    for (size_t i = 1; i < c.size(); ++i) {
      F k = F{};
      for (size_t j = 0; j < i; ++j) k = k + F::one();
      r.c.push_back(c[i] * k);
    }
    r.normalize();
    return r;
  }
};

/// Reduced fraction of polynomials over a field F: num/den with den monic
/// and gcd(num, den) = 1.
template <class F>
struct RatFn {
  Poly<F> num, den = Poly<F>::one();

  RatFn() = default;
  explicit RatFn(F x) : num(Poly<F>(std::move(x))) {}
  RatFn(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) {
    reduce();
  }
  static RatFn one() { return RatFn(F::one()); }
  static RatFn from_poly(Poly<F> p) {
    RatFn r;
    r.num = std::move(p);
    return r;
  }

  bool is_zero() const { return num.is_zero(); }

  void reduce() {
    if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num.is_zero()) {
      den = Poly<F>::one();
      return;
    }
    Poly<F> g = Poly<F>::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly<F>::divmod(num, g).first;
      den = Poly<F>::divmod(den, g).first;
    }
    F s = F::one() / den.lead();
    num = num * s;
    den = den * s;
  }

  friend RatFn operator+(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFn operator-(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  RatFn operator-() const {
    RatFn r = *this;
    r.num = -r.num;
    return r;
  }
  friend RatFn operator*(const RatFn& a, const RatFn& b) {
    return RatFn(a.num * b.num, a.den * b.den);
  }
  friend RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
    return RatFn(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const RatFn& a, const RatFn& b) {
    return (a.num * b.den - b.num * a.den).is_zero();
  }

  bool is_polynomial() const { return den.degree() == 0; }
};

}  // namespace qaff
