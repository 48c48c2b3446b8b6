#pragma once

// Numeric side: conformal factors e^{u_k} of the Toda solution induced by a
// curve (infinitesimal Pluecker formula), finite-difference PDE residuals,
// cone-angle fits and CSV export.

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toric/wronskian.hpp"

namespace toric {

using cplx = std::complex<double>;

/// Derivative table of a curve, prepared once for repeated evaluation.
class CurveEvaluator {
 public:
  explicit CurveEvaluator(const Curve& c);

  int n() const { return n_; }
  /// Row i holds |scale_j T_j(z)| * (rational part of f_j^{(i)})(z), where
  /// T_j is the twist factor of column j; column phases are irrelevant to
  /// every Gram determinant.
  Eigen::MatrixXcd derivative_matrix(cplx z) const;
  /// |Lambda_k|^2 for k = 0..n as Gram determinants.
  Eigen::VectorXd lambda_norms2(cplx z) const;
  /// e^{u_1}, ..., e^{u_n}
  Eigen::VectorXd conformal_factors(cplx z) const;

 private:
  int n_ = 0;
  BranchLocus locus_;
  std::vector<double> scale_;
  std::vector<std::vector<Rat>> twist_;
  /// [order][component]
  std::vector<std::vector<Poly<cplx>>> numer_;
  std::vector<std::vector<std::vector<long>>> denom_;
};

std::vector<double> conformal_factors(const Curve& c, cplx z);

/// Cartan matrix of su(n+1).
Eigen::MatrixXd cartan_matrix(int n);

struct GridSpec {
  double re_min = -1.0, re_max = 1.0;
  double im_min = -1.0, im_max = 1.0;
  int nx = 41, ny = 41;
  /// finite-difference step
  double h = 1e-3;
  /// exclusion radius around singular points; default 0.05 * diameter
  std::optional<double> safety;

  double diameter() const;
  double safety_radius() const;
  cplx point(int ix, int iy) const;
  void validate() const;
};

/// Finite singular points used for the safety exclusion: the branch locus
/// and the ramification locus.
std::vector<cplx> finite_singular_points(const Curve& c);

struct PDESample {
  cplx z;
  /// empty if z could not be evaluated (z is a singular point)
  std::vector<double> eu;
  /// empty inside the safety region
  std::vector<double> residual;
};

struct PDEReport {
  int n = 0;
  double h = 0.0;
  double safety = 0.0;
  std::vector<PDESample> samples;
  std::vector<double> max_abs;
  std::vector<double> rms;
  double max_eu = 0.0;
  /// max_i max |r_i| / max e^u
  double max_relative = 0.0;
  std::size_t evaluated = 0;
  std::size_t excluded = 0;
};

/// r_i = Laplacian(u_i) + 4 sum_j a_ij e^{u_j}, 5-point stencil with step h,
/// sampled row-major (imaginary part outer, real part inner).
PDEReport toda_residual(const Curve& c, const GridSpec& grid);
PDEReport toda_residual(const Curve& c, const GridSpec& grid, const std::vector<cplx>& singular);

/// Least-squares slope of the angle-averaged u_i against 2 log r.
std::vector<double> cone_angle_fit(const Curve& c, cplx p, const std::vector<double>& radii, int angles = 64);

void write_grid_csv(const PDEReport& report, std::ostream& os);
void export_grid(const Curve& c, const GridSpec& grid, const std::string& path);

}  // namespace toric
