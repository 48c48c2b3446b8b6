#pragma once

// Curves in P^n given by n+1 twisted rational components, their associated
// curves Lambda_k = f ^ f' ^ ... ^ f^(k), vanishing orders and the
// ramification locus.

#include <vector>

#include "toric/twisted.hpp"

namespace toric {

/// Homogeneous representative [f_0 : ... : f_n] together with a positive
/// modulus scale per component (the actual component is scale_j * f_j).
/// Scales only matter for metric evaluation; all order data ignores them.
class Curve {
 public:
  Curve() = default;
  explicit Curve(std::vector<TwistedFn> components);
  Curve(std::vector<TwistedFn> components, std::vector<ModulusScale> scales);

  int n() const { return static_cast<int>(components_.size()) - 1; }
  const BranchLocus& locus() const { return components_.front().locus(); }
  const std::vector<TwistedFn>& components() const { return components_; }
  const TwistedFn& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ModulusScale>& scales() const { return scales_; }

 private:
  std::vector<TwistedFn> components_;
  std::vector<ModulusScale> scales_;
};

/// Divide out the common factor of all components (the largest twisted
/// factor prod (z - p_j)^{e_j} * g(z) dividing every nonzero component).
Curve reduced(const Curve& c);

/// Projective degree of a reduced curve with integral exponents at infinity:
/// -min_i ord_inf(f_i).
Rat pole_order_at_infinity(const Curve& c);

/// Lexicographically ordered (k+1)-subsets of {0, ..., n}.
std::vector<std::vector<int>> lex_subsets(int n, int k);

struct AssociatedCurve {
  int k = 0;
  std::vector<std::vector<int>> subsets;
  std::vector<TwistedFn> coords;
};

/// All levels Lambda_0, ..., Lambda_n of one curve, sharing the derivative
/// table.
struct AssociatedTower {
  Curve curve;
  /// derivs[i][j] = f_j^{(i)}
  std::vector<std::vector<TwistedFn>> derivs;
  std::vector<AssociatedCurve> levels;

  const TwistedFn& wronskian() const { return levels.back().coords.front(); }
};

AssociatedTower associated_tower(const Curve& c);
AssociatedCurve associated_curve(const Curve& c, int k);

bool nondegenerate(const Curve& c);
bool nondegenerate(const AssociatedTower& t);

/// min over the coordinates of Lambda_k of their order at p. At infinity the
/// order is taken in the coordinate w = 1/z for the curve f(1/w), i.e. after
/// the chain-rule factor w^{k(k+1)} has been removed.
Rat lambda_order_at(const AssociatedTower& t, int k, const Point& p);
Rat lambda_order_at(const Curve& c, int k, const Point& p);

struct RamificationPoint {
  Point point;
  int multiplicity = 0;
};

/// Zeros of the polynomial part of Lambda_n off the locus, sorted by
/// point_less; multiplicities from the square-free decomposition.
std::vector<RamificationPoint> ramification_locus(const AssociatedTower& t);
std::vector<RamificationPoint> ramification_locus(const Curve& c);

/// Components sum_j A_ij f_j (unit scales); TwistMismatch unless each row
/// only mixes components of one twist class.
Curve recombine(const Curve& c, const MatrixXg& a);

/// Every component rewritten in w = 1/z over inverted_locus. Unit-modulus
/// branch constants are dropped; the moduli are folded into the scales.
Curve tf_invert_coordinate(const Curve& c);

}  // namespace toric
