#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//
// Both types are closed under their own operators (no GMP expression
// templates leak out), so they can be used as Eigen scalars.

#include <compare>
#include <complex>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Core>

namespace toric {

class Rat {
 public:
  Rat() = default;
  template <std::integral I>
  Rat(I n) : q_(static_cast<long>(n)) {}
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rat(const mpz_class& n) : q_(n) {}

  /// Parses "p/q" or "p" (whitespace not allowed).
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer <= this.
  mpz_class floor() const;
  /// this - floor(this), in [0, 1).
  Rat frac() const;
  /// Integer value; requires is_integer() and that it fits in a long.
  long to_long() const;

  double to_double() const { return q_.get_d(); }
  /// Canonical "p/q" form; the denominator is always written.
  std::string str() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Element of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  template <std::integral I>
  GaussRat(I n) : re_(n) {}
  GaussRat(Rat re) : re_(std::move(re)) {}
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussRat conj() const { return {re_, -im_}; }
  /// |x|^2, exact.
  Rat norm2() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  std::string str() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;
  /// Lexicographic on (re, im); used only for deterministic ordering.
  friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

 private:
  Rat re_;
  Rat im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

/// Integer power with non-negative or negative exponent (base must be
/// nonzero for negative exponents).
GaussRat pow(const GaussRat& base, long e);

/// Best rational approximation of x with denominator <= max_den.
Rat rationalize(double x, long max_den);

/// Formal product prod_i base_i^{exp_i} with Gaussian-rational bases and
/// rational exponents. Only its modulus (and, for branch constants, its
/// principal value) is ever evaluated.
struct PowerProduct {
  std::vector<std::pair<GaussRat, Rat>> factors;

  bool empty() const { return factors.empty(); }
  /// log of prod |base|^{exp}.
  double log_modulus() const;
  double modulus() const;
  /// Principal-branch complex value.
  std::complex<double> principal_value() const;

  PowerProduct& operator*=(const PowerProduct& o);
};

/// A positive real constant factor * prod |base|^{exp}; used as the
/// per-component scale of a curve.
struct ModulusScale {
  Rat factor{1};
  PowerProduct moduli;

  double value() const;
  ModulusScale& operator*=(const ModulusScale& o);
};

}  // namespace toric

namespace Eigen {

template <>
struct NumTraits<toric::Rat> : GenericNumTraits<toric::Rat> {
  typedef toric::Rat Real;
  typedef toric::Rat NonInteger;
  typedef toric::Rat Nested;
  typedef toric::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return toric::Rat(0); }
  static inline Real dummy_precision() { return toric::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<toric::GaussRat> : GenericNumTraits<toric::GaussRat> {
  typedef toric::GaussRat Real;
  typedef toric::GaussRat NonInteger;
  typedef toric::GaussRat Nested;
  typedef toric::GaussRat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 96
  };
  static inline Real epsilon() { return toric::GaussRat(0); }
  static inline Real dummy_precision() { return toric::GaussRat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace toric {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MatrixXr = MatrixX<Rat>;
using MatrixXg = MatrixX<GaussRat>;

}  // namespace toric
