#pragma once

// Canonical exponents b_0 < ... < b_n and indices gamma_j = b_j - b_{j-1} - 1
// of a curve at a point, read off the orders of its associated curves.

#include <string>
#include <vector>

#include "toric/ensemble.hpp"
#include "toric/wronskian.hpp"

namespace toric {

enum class SingularityKind { Branch, Ramification, Unramified };

std::string to_string(SingularityKind k);
SingularityKind kind_from_string(const std::string& s);

struct SingularityDatum {
  Point point;
  std::vector<Rat> b;
  std::vector<Rat> gamma;
  SingularityKind kind = SingularityKind::Unramified;
};

/// b from the associated-curve orders o_0, ..., o_n; throws
/// NonIncreasingExponents unless b is strictly increasing.
SingularityDatum datum_from_orders(const Point& p, const std::vector<Rat>& orders);
/// b from a set of distinct exponents (sorted internally).
SingularityDatum datum_from_exponents(const Point& p, std::vector<Rat> exponents);

SingularityKind classify_gammas(const std::vector<Rat>& gamma);

SingularityDatum classify_at(const AssociatedTower& t, const Point& p);
SingularityDatum classify_at(const Curve& c, const Point& p);
SingularityDatum classify_at_infinity(const Curve& c);

/// Locus, ramification locus and infinity, unramified points dropped,
/// sorted by point_less.
std::vector<SingularityDatum> classify_all(const Curve& c);

bool branch_test_residue(const Ensemble& e, const GaussRat& p);
bool ensemble_zero_is_ramification(const Ensemble& e, const GaussRat& q);

struct QuasiDegreeForm {
  Curve curve;
  /// curve = T * input, componentwise.
  MatrixXg T;
  std::vector<Rat> quasi_degrees;
};

/// Componentwise z^beta * psi(z) with 0 the only twisted point: make the
/// quasi-degrees beta_i + deg psi_i pairwise distinct by constant row
/// operations. The output carries unit scales.
QuasiDegreeForm normalize_quasi_degrees(const Curve& c);
Rat quasi_degree(const TwistedFn& f);

/// Data at infinity read directly from pairwise distinct quasi-degrees: the
/// exponents in w = 1/z are their negatives.
SingularityDatum infinity_from_quasi_degrees(const std::vector<Rat>& quasi_degrees);

}  // namespace toric
