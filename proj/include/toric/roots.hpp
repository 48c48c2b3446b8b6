#pragma once

// Root isolation for polynomials over Q(i): exact square-free layer first,
// then simultaneous (Aberth-Ehrlich) iteration with Newton polishing, then
// exact recovery of Gaussian-rational roots.

#include <complex>
#include <vector>

#include "toric/polynomial.hpp"

namespace toric {

/// A root that is not known exactly: an approximation together with the
/// exact square-free factor it is a simple root of.
struct NumericRoot {
  std::complex<double> value;
  PolyQ factor;
  /// Relative backward error |p(r)| / sum |a_i| |r|^i after polishing.
  double residual = 0.0;
};

/// All complex roots of p (degree >= 1, assumed square-free for best
/// accuracy), polished by Newton iteration in extended precision.
std::vector<std::complex<double>> aberth_roots(const Poly<std::complex<double>>& p);

/// Relative backward error of r as a root of p.
double relative_residual(const Poly<std::complex<double>>& p, std::complex<double> r);

struct RootSet {
  std::vector<GaussRat> exact;
  std::vector<NumericRoot> numeric;
};

/// Gaussian-rational roots of a square-free polynomial, each verified
/// exactly; numeric roots that do not rationalize are skipped.
std::vector<GaussRat> gaussian_rational_roots(const PolyQ& squarefree);

/// Roots of a square-free polynomial: Gaussian-rational roots are recovered
/// and verified exactly, the remainder are reported numerically.
RootSet squarefree_roots(const PolyQ& squarefree);

/// Multiplicity of a numerically known root r of the square-free factor
/// r.factor in g, decided through exact gcds (never by a float threshold
/// on g itself).
int multiplicity_at(const PolyQ& g, const NumericRoot& r);

/// Residual tolerance after polishing.
inline constexpr double kRootResidualTol = 1e-12;

}  // namespace toric
