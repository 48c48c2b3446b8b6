#include <doctest.h>

#include <algorithm>
#include <array>
#include <sstream>

#include <Eigen/QR>

#include "support.hpp"
#include "toric/metrics.hpp"

using namespace testing;

namespace {

std::vector<double> log_radii(double lo, double hi, int count) {
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(hi * std::pow(lo / hi, static_cast<double>(i) / (count - 1)));
  return r;
}

/// |Lambda_k|^2 as the sum of squared moduli of the wedge coordinates.
double minors_norm2(const Curve& c, int k, cd z) {
  double s = 0;
  for (const auto& f : associated_curve(c, k).coords)
    if (!f.is_zero()) s += tf_eval_abs2(f, z);
  return s;
}

Eigen::MatrixXcd random_unitary(Gen& g, int size) {
  Eigen::MatrixXcd m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = cd(g.real(-1, 1), g.real(-1, 1));
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

double gram_det(const Eigen::MatrixXcd& rows, int k) {
  const Eigen::MatrixXcd top = rows.topRows(k + 1);
  return (top * top.adjoint()).determinant().real();
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("Fubini-Study factor of the line") {
  const Curve line = poly_curve({P({1}), P({0, 1})});
  CHECK(conformal_factors(line, 0.0)[0] == doctest::Approx(1.0));
  for (const cd z : {cd(0.3, -0.2), cd(-1.5, 2.0), cd(4, 0)}) {
    const double fs = 1.0 / std::pow(1.0 + std::norm(z), 2);
    CHECK(conformal_factors(line, z)[0] == doctest::Approx(fs).epsilon(1e-13));
  }
  // oracle for the sign convention: u = -2 log(1 + |z|^2) satisfies
  // Laplacian(u) = -8 e^u, so 4 u_{z zbar} + 4 * 2 e^u = 0
  const double h = 1e-3;
  const cd z(0.4, 0.1);
  auto u = [](cd w) { return -2.0 * std::log(1.0 + std::norm(w)); };
  const double lap = (u(z + h) + u(z - h) + u(z + cd(0, h)) + u(z - cd(0, h)) - 4 * u(z)) / (h * h);
  CHECK(std::abs(lap + 8.0 * std::exp(u(z))) < 1e-5);
}

TEST_CASE("rational normal curve at the origin") {
  const Curve rnc = poly_curve({P({1}), P({0, 1}), P({0, 0, 1})});
  const auto eu = conformal_factors(rnc, 0.0);
  CHECK(eu[0] == doctest::Approx(1.0));
  const CurveEvaluator ev(rnc);
  CHECK(ev.lambda_norms2(0.0)(1) == doctest::Approx(1.0));
}

TEST_CASE("Gram determinants agree with the Cauchy-Binet sum of minors") {
  Gen g(5101);
  for (int it = 0; it < 10; ++it) {
    const Curve c = g.coin() ? construct_curve(random_prescribed(g, 3, 2, 2)).curve
                             : ensemble_curve_representative(random_ensemble(g, static_cast<int>(g.integer(1, 3)), 3));
    const CurveEvaluator ev(c);
    const cd z(g.real(0.5, 2.0), g.real(0.5, 2.0));
    const Eigen::VectorXd gram = ev.lambda_norms2(z);
    for (int k = 0; k <= c.n(); ++k) {
      const double minors = minors_norm2(c, k, z);
      CHECK(std::abs(gram(k) - minors) <= 1e-9 * minors);
    }
  }
}

TEST_CASE("conformal factors are unitary and torus invariant") {
  Gen g(5202);
  const Curve c = construct_curve(random_prescribed(g, 3, 2, 2)).curve;
  const CurveEvaluator ev(c);
  for (int it = 0; it < 10; ++it) {
    const cd z(g.real(0.5, 2.0), g.real(0.5, 2.0));
    const Eigen::MatrixXcd m = ev.derivative_matrix(z);
    const Eigen::MatrixXcd rotated = m * random_unitary(g, c.n() + 1);
    const Eigen::VectorXd norms = ev.lambda_norms2(z);
    for (int k = 0; k <= c.n(); ++k) {
      CHECK(std::abs(gram_det(m, k) - norms(k)) <= 1e-8 * norms(k));
      CHECK(std::abs(gram_det(rotated, k) - norms(k)) <= 1e-8 * norms(k));
    }
  }

  std::vector<TwistedFn> comps = c.components();
  comps[1] = GaussRat(Rat(3, 5), Rat(4, 5)) * comps[1];
  const Curve rotated(comps, c.scales());
  for (int it = 0; it < 5; ++it) {
    const cd z(g.real(0.5, 2.0), g.real(0.5, 2.0));
    const auto a = conformal_factors(c, z), b = conformal_factors(rotated, z);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-13 * a[i]);
  }
}

TEST_CASE("evaluation at a singular point is an error") {
  const Curve half = power_curve({R(0), R(1, 2)});
  try {
    (void)conformal_factors(half, 0.0);
    FAIL("expected EvalAtSingularity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvalAtSingularity);
  }
}

TEST_CASE("infinitesimal Pluecker formula by finite differences") {
  Gen g(5303);
  const double h = 1e-3;
  for (int it = 0; it < 6; ++it) {
    const Curve c = construct_curve(random_prescribed(g, 3, 1, 1)).curve;
    const CurveEvaluator ev(c);
    const cd z(g.real(0.6, 1.2), g.real(0.6, 1.2));
    bool near = false;
    for (const auto& s : finite_singular_points(c)) near = near || std::abs(s - z) < 0.3;
    if (near) continue;
    auto log_norms = [&](cd w) { return Eigen::VectorXd(ev.lambda_norms2(w).array().log()); };
    const Eigen::VectorXd lap =
        (log_norms(z + h) + log_norms(z - h) + log_norms(z + cd(0, h)) + log_norms(z - cd(0, h)) - 4 * log_norms(z)) / (h * h);
    const Eigen::VectorXd nz = ev.lambda_norms2(z);
    for (int k = 0; k < c.n(); ++k) {
      const double prev = k == 0 ? 1.0 : nz(k - 1);
      const double rhs = 4.0 * nz(k + 1) * prev / (nz(k) * nz(k));
      CHECK(std::abs(lap(k) - rhs) <= 1e-4 * std::abs(rhs));
    }
  }
}

TEST_CASE("Toda residual on a coarse grid") {
  GridSpec grid;
  grid.nx = grid.ny = 11;
  const Curve line = poly_curve({P({1}), P({0, 1})});
  const PDEReport fs = toda_residual(line, grid);
  CHECK(fs.evaluated == 121);
  CHECK(fs.excluded == 0);
  CHECK(fs.max_relative <= 1e-5);

  // closed-form oracle for (1, z, z^2): |L0|^2 = 1 + r^2 + r^4, |L1|^2 = 1 + 4r^2 + r^4, |L2|^2 = 4
  auto u = [](long double x, long double y) {
    const long double r2 = x * x + y * y;
    const long double l0 = 1 + r2 + r2 * r2, l1 = 1 + 4 * r2 + r2 * r2;
    return std::array<long double, 2>{std::log(l1) - 2 * std::log(l0), std::log(4.0L) + std::log(l0) - 2 * std::log(l1)};
  };
  long double worst = 0, max_eu = 0;
  const long double h = grid.h;
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix) {
      const cd z = grid.point(ix, iy);
      const long double x = z.real(), y = z.imag();
      const auto c = u(x, y), e = u(x + h, y), w = u(x - h, y), nn = u(x, y + h), s = u(x, y - h);
      const long double eu0 = std::exp(c[0]), eu1 = std::exp(c[1]);
      max_eu = std::max({max_eu, eu0, eu1});
      const long double r0 = (e[0] + w[0] + nn[0] + s[0] - 4 * c[0]) / (h * h) + 4 * (2 * eu0 - eu1);
      const long double r1 = (e[1] + w[1] + nn[1] + s[1] - 4 * c[1]) / (h * h) + 4 * (2 * eu1 - eu0);
      worst = std::max({worst, std::abs(r0), std::abs(r1)});
    }
  const PDEReport rnc = toda_residual(poly_curve({P({1}), P({0, 1}), P({0, 0, 1})}), grid);
  CHECK(rnc.excluded == 0);
  CHECK(std::abs(rnc.max_relative - static_cast<double>(worst / max_eu)) <= 1e-3 * rnc.max_relative);

  GridSpec half = grid;
  half.h = grid.h / 2;
  const double ratio = rnc.max_relative / toda_residual(poly_curve({P({1}), P({0, 1}), P({0, 0, 1})}), half).max_relative;
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);

  PrescribedData d;
  d.n = 2;
  d.gamma0 = {R(1, 2), R(1, 3)};
  const Curve branch = construct_curve(d).curve;
  GridSpec annulus = grid;
  annulus.safety = 0.2;
  annulus.h = 2.5e-4;
  const PDEReport rep = toda_residual(branch, annulus);
  CHECK(rep.excluded > 0);
  CHECK(rep.evaluated + rep.excluded == 121);
  CHECK(rep.max_relative <= 1e-4);
  GridSpec coarse = annulus;
  coarse.h = 5e-4;
  const double branch_ratio = toda_residual(branch, coarse).max_relative / rep.max_relative;
  CHECK(branch_ratio >= 3.5);
  CHECK(branch_ratio <= 4.5);
  for (const auto& s : rep.samples)
    if (std::abs(s.z) < rep.safety) CHECK(s.residual.empty());
}

TEST_CASE("cone-angle fits") {
  const auto radii = log_radii(1e-6, 1e-3, 7);
  const auto half = cone_angle_fit(power_curve({R(0), R(1, 2)}), 0.0, radii);
  CHECK(std::abs(half[0] + 0.5) <= 0.005);

  const auto cubic = cone_angle_fit(poly_curve({P({1}), P({0, 1}), P({0, 0, 0, 1})}), 0.0, radii);
  CHECK(std::abs(cubic[0]) <= 0.01);
  CHECK(std::abs(cubic[1] - 1.0) <= 0.01);

  const auto flat = cone_angle_fit(poly_curve({P({1}), P({0, 1}), P({0, 0, 1})}), cd(0.5, 0.5), radii);
  for (double x : flat) CHECK(std::abs(x) <= 1e-3);
}

TEST_CASE("grid export") {
  GridSpec grid;
  grid.nx = grid.ny = 10;
  const Curve line = poly_curve({P({1}), P({0, 1})});
  std::ostringstream a, b;
  write_grid_csv(toda_residual(line, grid), a);
  write_grid_csv(toda_residual(line, grid), b);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "re,im,u_1,eu_1,res_1");
  int rows = 0;
  while (std::getline(in, row)) ++rows;
  CHECK(rows == 100);

  GridSpec around = grid;
  around.safety = 0.3;
  std::ostringstream c;
  write_grid_csv(toda_residual(line, around, {cd(0, 0)}), c);
  bool saw_empty = false;
  std::istringstream in2(c.str());
  std::getline(in2, header);
  while (std::getline(in2, row)) saw_empty = saw_empty || row.back() == ',';
  CHECK(saw_empty);

  GridSpec bad = grid;
  bad.h = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = grid;
  bad.re_min = 2;
  CHECK_THROWS_AS(bad.validate(), Error);
}

}  // TEST_SUITE
