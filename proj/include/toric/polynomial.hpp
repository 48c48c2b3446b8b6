#pragma once

// Dense univariate polynomials over a field-like scalar T.
//
// Coefficients are stored from the constant term upward and kept trimmed:
// the leading coefficient of a nonzero polynomial is nonzero, and the zero
// polynomial has no coefficients (degree -1).

#include <algorithm>
#include <cassert>
#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/rational.hpp"

namespace toric {

template <typename T>
inline bool is_zero_scalar(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T(0);
  }
}

template <typename T>
class Poly {
 public:
  using Scalar = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }
  static Poly monomial(T c, int degree) {
    std::vector<T> v(static_cast<std::size_t>(degree) + 1, T(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  /// z - root
  static Poly linear_root(const T& root) { return Poly({-root, T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<T>& coeffs() const { return c_; }
  /// Coefficient of z^i (zero beyond the degree).
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  template <typename U>
  U eval(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    if (is_zero_scalar(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= T(-1); }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply by z^k.
  Poly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> v(static_cast<std::size_t>(k), T(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> v(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(v));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const T inv = T(1) / lead();
    Poly out = *this;
    for (auto& x : out.c_) x *= inv;
    return out;
  }

  /// Coefficients reversed: z^deg * p(1/z).
  Poly reversed() const {
    std::vector<T> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  /// p(z + a) by repeated synthetic division.
  Poly taylor_shift(const T& a) const {
    std::vector<T> v = c_;
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i)
      for (int j = n - 2; j >= i; --j) v[j] += a * v[j + 1];
    return Poly(std::move(v));
  }

  /// Quotient and remainder; the divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::InvalidInput, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<T> r = a.c_;
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
    const T inv = T(1) / b.lead();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      if (is_zero_scalar(r[i])) continue;
      const T f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Divide by (z - root), assuming root is a root. Synthetic division.
  Poly deflate(const T& root) const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> q(c_.size() - 1, T(0));
    T carry(0);
    for (int i = degree(); i >= 1; --i) {
      carry = carry * root + c_[i];
      q[i - 1] = carry;
    }
    return Poly(std::move(q));
  }

  /// Multiplicity of root as a zero of this polynomial (the zero polynomial
  /// is reported with multiplicity 0 by convention; callers check).
  int multiplicity(const T& root) const {
    int m = 0;
    Poly p = *this;
    while (!p.is_zero() && is_zero_scalar(p(root))) {
      p = p.deflate(root);
      ++m;
    }
    return m;
  }

  /// Order of vanishing at 0.
  int low_order() const {
    int i = 0;
    while (i < static_cast<int>(c_.size()) && is_zero_scalar(c_[i])) ++i;
    return i;
  }

  Poly pow(int e) const {
    Poly result = Poly::constant(T(1));
    Poly b = *this;
    while (e > 0) {
      if (e & 1) result *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return result;
  }

  /// Truncate to terms of degree < n.
  Poly truncated(int n) const {
    if (static_cast<int>(c_.size()) <= n) return *this;
    return Poly(std::vector<T>(c_.begin(), c_.begin() + n));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Monic gcd (zero iff both inputs are zero).
template <typename T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Square-free decomposition (Yun): p = lead * prod_i factors[i]^(i+1),
/// each factor monic and square-free, pairwise coprime. Characteristic 0.
template <typename T>
std::vector<Poly<T>> squarefree_decomposition(const Poly<T>& p) {
  std::vector<Poly<T>> out;
  if (p.degree() < 1) return out;
  const Poly<T> dp = p.derivative();
  Poly<T> a = gcd(p, dp);
  Poly<T> b = p / a;
  Poly<T> c = dp / a;
  Poly<T> d = c - b.derivative();
  while (b.degree() >= 1) {
    Poly<T> g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  // Strip trailing constant factors (multiplicities that do not occur).
  for (auto& f : out) f = f.monic();
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

/// Convert coefficients to complex<double>.
inline Poly<std::complex<double>> to_complex(const Poly<GaussRat>& p) {
  std::vector<std::complex<double>> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.push_back(c.to_complex());
  return Poly<std::complex<double>>(std::move(v));
}

using PolyQ = Poly<GaussRat>;

}  // namespace toric
