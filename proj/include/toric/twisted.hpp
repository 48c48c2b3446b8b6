#pragma once

// Twisted rational functions over a fixed finite branch locus:
//
//     F(z) = prod_j (z - p_j)^{mu_j} * numer(z) / prod_j (z - p_j)^{k_j}
//
// with rational twists mu_j in [0, 1), a polynomial numerator over Q(i) and
// non-negative integer pole orders k_j. The normal form is unique, so two
// values are equal iff they represent the same (multi-valued) function.

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "toric/polynomial.hpp"
#include "toric/rational.hpp"
#include "toric/roots.hpp"

namespace toric {

/// Ordered set of distinct finite points; exponent vectors index into it.
class BranchLocus {
 public:
  BranchLocus() : points_(std::make_shared<const std::vector<GaussRat>>()) {}
  explicit BranchLocus(std::vector<GaussRat> points);

  std::size_t size() const { return points_->size(); }
  bool empty() const { return points_->empty(); }
  const GaussRat& operator[](std::size_t i) const { return (*points_)[i]; }
  const std::vector<GaussRat>& points() const { return *points_; }
  /// Index of p, or -1.
  int index_of(const GaussRat& p) const;

  friend bool operator==(const BranchLocus& a, const BranchLocus& b) {
    return a.points_ == b.points_ || *a.points_ == *b.points_;
  }

 private:
  std::shared_ptr<const std::vector<GaussRat>> points_;
};

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of the Riemann sphere as the toolkit sees it.
using Point = std::variant<GaussRat, NumericRoot, Infinity>;

bool is_infinity(const Point& p);
std::string point_str(const Point& p);
std::complex<double> point_value(const Point& p);
/// Fixed total order: exact points lexicographic, then numeric points by
/// (re, im), infinity last.
bool point_less(const Point& a, const Point& b);
bool point_equal(const Point& a, const Point& b);

class TwistedFn {
 public:
  /// The zero function on an empty locus.
  TwistedFn() = default;

  /// prod_j (z - p_j)^{exponents_j} * numer, brought to normal form.
  /// exponents may be any rationals (integer parts are folded).
  static TwistedFn from_exponents(BranchLocus locus, std::vector<Rat> exponents, PolyQ numer);
  static TwistedFn from_poly(BranchLocus locus, PolyQ numer);
  static TwistedFn constant(BranchLocus locus, GaussRat c);
  static TwistedFn zero(BranchLocus locus);

  const BranchLocus& locus() const { return locus_; }
  const std::vector<Rat>& twist() const { return twist_; }
  const PolyQ& numer() const { return numer_; }
  const std::vector<long>& denom_exp() const { return denom_exp_; }

  bool is_zero() const { return numer_.is_zero(); }
  /// mu_j - k_j: the net exponent at each locus point excluding numerator zeros.
  Rat net_exponent(std::size_t j) const { return twist_[j] - Rat(denom_exp_[j]); }

  friend bool operator==(const TwistedFn& a, const TwistedFn& b) = default;

 private:
  BranchLocus locus_;
  std::vector<Rat> twist_;
  PolyQ numer_;
  std::vector<long> denom_exp_;
};

/// Sum; throws TwistMismatch unless the twist vectors agree (zero is
/// compatible with every twist).
TwistedFn tf_add(const TwistedFn& a, const TwistedFn& b);
TwistedFn tf_sub(const TwistedFn& a, const TwistedFn& b);
TwistedFn tf_mul(const TwistedFn& a, const TwistedFn& b);
TwistedFn tf_scale(const TwistedFn& a, const GaussRat& c);
TwistedFn tf_derivative(const TwistedFn& f);

inline TwistedFn operator+(const TwistedFn& a, const TwistedFn& b) { return tf_add(a, b); }
inline TwistedFn operator-(const TwistedFn& a, const TwistedFn& b) { return tf_sub(a, b); }
inline TwistedFn operator*(const TwistedFn& a, const TwistedFn& b) { return tf_mul(a, b); }
inline TwistedFn operator*(const GaussRat& c, const TwistedFn& a) { return tf_scale(a, c); }
inline TwistedFn operator-(const TwistedFn& a) { return tf_scale(a, GaussRat(-1)); }

/// Exponent of the leading term of the local expansion at p (in w = 1/z at
/// infinity). Throws ZeroFunction for f = 0.
Rat tf_order_at(const TwistedFn& f, const Point& p);

/// (z - p)^{lead_exp} * prefactor * (c_0 + c_1 (z - p) + ...), c_0 != 0.
/// At infinity the variable is w = 1/z and the prefactor is empty.
struct LocalSeries {
  Rat lead_exp;
  std::vector<GaussRat> coeffs;
  /// Branch constant prod base^exp (principal branch); empty means 1.
  PowerProduct prefactor;
};

/// Exact local expansion at an exact point or infinity.
LocalSeries tf_local_series(const TwistedFn& f, const Point& p, int len);

/// |F(z)|^2, branch independent. Throws EvalAtSingularity on the locus.
double tf_eval_abs2(const TwistedFn& f, std::complex<double> z);

/// Q with d/dz (z^alpha Q) = z^{alpha-1} P, alpha > 0.
PolyQ solve_euler_ode(const Rat& alpha, const PolyQ& p);

/// The locus {0} followed by {1/p_j : p_j != 0}, the image of the locus
/// under z -> 1/w together with the point w = 0 (i.e. z = infinity).
BranchLocus inverted_locus(const BranchLocus& locus);

/// f(1/w) over inverted_locus(f.locus()); the dropped constant's modulus is
/// returned so callers can keep |.|-level information exact.
struct InvertedFn {
  TwistedFn fn;
  PowerProduct dropped_modulus;
};
InvertedFn invert_component(const TwistedFn& f, const BranchLocus& target);

}  // namespace toric
