#include "toric/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

namespace toric {

CurveEvaluator::CurveEvaluator(const Curve& c) : n_(c.n()), locus_(c.locus()) {
  for (const auto& s : c.scales()) scale_.push_back(s.value());
  std::vector<TwistedFn> row = c.components();
  for (const auto& f : row) twist_.push_back(f.twist());
  for (int i = 0; i <= n_; ++i) {
    std::vector<Poly<cplx>> nums;
    std::vector<std::vector<long>> dens;
    for (const auto& f : row) {
      nums.push_back(to_complex(f.numer()));
      dens.push_back(f.denom_exp());
    }
    numer_.push_back(std::move(nums));
    denom_.push_back(std::move(dens));
    if (i < n_)
      for (auto& f : row) f = tf_derivative(f);
  }
}

Eigen::MatrixXcd CurveEvaluator::derivative_matrix(cplx z) const {
  const std::size_t m = locus_.size();
  std::vector<cplx> diff(m);
  std::vector<double> logabs(m);
  for (std::size_t l = 0; l < m; ++l) {
    diff[l] = z - locus_[l].to_complex();
    if (diff[l] == cplx(0.0)) {
      bool regular = true;
      for (int j = 0; j <= n_; ++j) {
        regular = regular && twist_[j][l] == Rat(0);
        for (int i = 0; i <= n_; ++i) regular = regular && (numer_[i][j].is_zero() || denom_[i][j][l] == 0);
      }
      if (!regular) throw Error(ErrorCode::EvalAtSingularity, "evaluation at locus point " + locus_[l].str());
      logabs[l] = 0.0;
      continue;
    }
    logabs[l] = std::log(std::abs(diff[l]));
  }
  const int size = n_ + 1;
  Eigen::MatrixXcd out(size, size);
  for (int j = 0; j < size; ++j) {
    double log_twist = 0.0;
    for (std::size_t l = 0; l < m; ++l) log_twist += twist_[j][l].to_double() * logabs[l];
    const double col = scale_[j] * std::exp(log_twist);
    for (int i = 0; i < size; ++i) {
      const auto& p = numer_[i][j];
      if (p.is_zero()) {
        out(i, j) = 0.0;
        continue;
      }
      cplx v = p.eval(z);
      for (std::size_t l = 0; l < m; ++l)
        if (denom_[i][j][l] != 0) v /= std::pow(diff[l], static_cast<int>(denom_[i][j][l]));
      out(i, j) = col * v;
    }
  }
  return out;
}

Eigen::VectorXd CurveEvaluator::lambda_norms2(cplx z) const {
  const Eigen::MatrixXcd m = derivative_matrix(z);
  // Gram determinant of the first k+1 rows = prod_{i<=k} |R_ii|^2 for
  // m^* = QR; one factorization serves every level.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m.adjoint());
  const Eigen::MatrixXcd& r = qr.matrixQR();
  Eigen::VectorXd out(n_ + 1);
  double acc = 1.0;
  for (int k = 0; k <= n_; ++k) {
    acc *= std::norm(r(k, k));
    if (!(acc > 0.0) || !std::isfinite(acc))
      throw Error(ErrorCode::NonPositiveGram, "Gram determinant of level " + std::to_string(k) + " is not positive");
    out(k) = acc;
  }
  return out;
}

Eigen::VectorXd CurveEvaluator::conformal_factors(cplx z) const {
  const Eigen::VectorXd g = lambda_norms2(z);
  Eigen::VectorXd eu(n_);
  for (int k = 1; k <= n_; ++k) {
    const double before2 = k >= 2 ? g(k - 2) : 1.0;
    eu(k - 1) = g(k) * before2 / (g(k - 1) * g(k - 1));
  }
  return eu;
}

std::vector<double> conformal_factors(const Curve& c, cplx z) {
  const Eigen::VectorXd eu = CurveEvaluator(c).conformal_factors(z);
  return {eu.data(), eu.data() + eu.size()};
}

Eigen::MatrixXd cartan_matrix(int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2.0;
    if (i > 0) a(i, i - 1) = -1.0;
    if (i + 1 < n) a(i, i + 1) = -1.0;
  }
  return a;
}

double GridSpec::diameter() const { return std::hypot(re_max - re_min, im_max - im_min); }

double GridSpec::safety_radius() const { return safety ? *safety : 0.05 * diameter(); }

cplx GridSpec::point(int ix, int iy) const {
  const double x = nx == 1 ? re_min : re_min + (re_max - re_min) * ix / (nx - 1);
  const double y = ny == 1 ? im_min : im_min + (im_max - im_min) * iy / (ny - 1);
  return {x, y};
}

void GridSpec::validate() const {
  if (!(re_min <= re_max) || !(im_min <= im_max)) throw Error(ErrorCode::InvalidInput, "grid ranges must be ordered");
  if (nx < 1 || ny < 1) throw Error(ErrorCode::InvalidInput, "grid sample counts must be positive");
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidInput, "finite-difference step h must be positive");
  if (safety && !(*safety > 0.0)) throw Error(ErrorCode::InvalidInput, "safety radius must be positive");
}

std::vector<cplx> finite_singular_points(const Curve& c) {
  std::vector<cplx> out;
  const auto& pts = c.locus().points();
  for (std::size_t l = 0; l < pts.size(); ++l) {
    bool regular = true;
    for (const auto& f : c.components())
      regular = regular && (f.is_zero() || (f.twist()[l] == Rat(0) && f.denom_exp()[l] == 0));
    if (!regular) out.push_back(pts[l].to_complex());
  }
  for (const auto& r : ramification_locus(c)) out.push_back(point_value(r.point));
  return out;
}

PDEReport toda_residual(const Curve& c, const GridSpec& grid) {
  return toda_residual(c, grid, finite_singular_points(c));
}

PDEReport toda_residual(const Curve& c, const GridSpec& grid, const std::vector<cplx>& singular) {
  grid.validate();
  const CurveEvaluator ev(c);
  const int n = ev.n();
  const Eigen::MatrixXd a = cartan_matrix(n);
  const double h = grid.h;
  PDEReport rep;
  rep.n = n;
  rep.h = h;
  rep.safety = grid.safety_radius();
  rep.max_abs.assign(n, 0.0);
  rep.rms.assign(n, 0.0);

  auto log_eu = [&](cplx z) {
    const Eigen::VectorXd eu = ev.conformal_factors(z);
    return Eigen::VectorXd(eu.array().log());
  };

  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      PDESample s;
      s.z = grid.point(ix, iy);
      double dist = std::numeric_limits<double>::infinity();
      for (const auto& p : singular) dist = std::min(dist, std::abs(s.z - p));
      Eigen::VectorXd eu;
      try {
        eu = ev.conformal_factors(s.z);
      } catch (const Error& e) {
        if (dist >= rep.safety) throw;
        ++rep.excluded;
        rep.samples.push_back(std::move(s));
        continue;
      }
      s.eu.assign(eu.data(), eu.data() + n);
      if (dist < rep.safety) {
        ++rep.excluded;
        rep.samples.push_back(std::move(s));
        continue;
      }
      const Eigen::VectorXd u0 = eu.array().log();
      const Eigen::VectorXd lap =
          (log_eu(s.z + h) + log_eu(s.z - h) + log_eu(s.z + cplx(0, h)) + log_eu(s.z - cplx(0, h)) - 4.0 * u0) /
          (h * h);
      const Eigen::VectorXd r = lap + 4.0 * a * eu;
      s.residual.assign(r.data(), r.data() + n);
      for (int i = 0; i < n; ++i) {
        rep.max_abs[i] = std::max(rep.max_abs[i], std::abs(r(i)));
        rep.rms[i] += r(i) * r(i);
        rep.max_eu = std::max(rep.max_eu, eu(i));
      }
      ++rep.evaluated;
      rep.samples.push_back(std::move(s));
    }
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    rep.rms[i] = rep.evaluated ? std::sqrt(rep.rms[i] / static_cast<double>(rep.evaluated)) : 0.0;
    worst = std::max(worst, rep.max_abs[i]);
  }
  rep.max_relative = rep.max_eu > 0.0 ? worst / rep.max_eu : 0.0;
  return rep;
}

std::vector<double> cone_angle_fit(const Curve& c, cplx p, const std::vector<double>& radii, int angles) {
  if (radii.size() < 2) throw Error(ErrorCode::InvalidInput, "cone_angle_fit needs at least two radii");
  if (angles < 1) throw Error(ErrorCode::InvalidInput, "cone_angle_fit needs at least one angle");
  const CurveEvaluator ev(c);
  const int n = ev.n();
  const std::size_t count = radii.size();
  std::vector<double> x(count);
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(count), n);
  for (std::size_t r = 0; r < count; ++r) {
    if (!(radii[r] > 0.0)) throw Error(ErrorCode::InvalidInput, "radii must be positive");
    x[r] = 2.0 * std::log(radii[r]);
    for (int k = 0; k < angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * (k + 0.5) / angles;
      const Eigen::VectorXd eu = ev.conformal_factors(p + std::polar(radii[r], theta));
      y.row(static_cast<Eigen::Index>(r)) += eu.array().log().matrix().transpose() / angles;
    }
  }
  double mx = 0.0;
  for (double v : x) mx += v / count;
  double sxx = 0.0;
  for (double v : x) sxx += (v - mx) * (v - mx);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double my = y.col(i).mean();
    double sxy = 0.0;
    for (std::size_t r = 0; r < count; ++r) sxy += (x[r] - mx) * (y(static_cast<Eigen::Index>(r), i) - my);
    out[i] = sxy / sxx;
  }
  return out;
}

namespace {

void put(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_grid_csv(const PDEReport& report, std::ostream& os) {
  const int n = report.n;
  os << "re,im";
  for (const char* prefix : {"u_", "eu_", "res_"})
    for (int i = 1; i <= n; ++i) os << ',' << prefix << i;
  os << '\n';
  for (const auto& s : report.samples) {
    put(os, s.z.real());
    os << ',';
    put(os, s.z.imag());
    for (int i = 0; i < n; ++i) {
      os << ',';
      if (!s.eu.empty()) put(os, std::log(s.eu[i]));
    }
    for (int i = 0; i < n; ++i) {
      os << ',';
      if (!s.eu.empty()) put(os, s.eu[i]);
    }
    for (int i = 0; i < n; ++i) {
      os << ',';
      if (!s.residual.empty()) put(os, s.residual[i]);
    }
    os << '\n';
  }
}

void export_grid(const Curve& c, const GridSpec& grid, const std::string& path) {
  const PDEReport rep = toda_residual(c, grid);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "' for writing");
  write_grid_csv(rep, out);
  if (!out) throw Error(ErrorCode::InvalidInput, "failed writing '" + path + "'");
}

}  // namespace toric
