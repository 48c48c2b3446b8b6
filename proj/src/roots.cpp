#include "toric/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toric {

namespace {

using cld = std::complex<long double>;

cld eval_ld(const Poly<std::complex<double>>& p, cld x, cld* deriv) {
  cld v(0), d(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * x + v;
    v = v * x + cld(it->real(), it->imag());
  }
  if (deriv) *deriv = d;
  return v;
}

}  // namespace

double relative_residual(const Poly<std::complex<double>>& p, std::complex<double> r) {
  const cld x(r.real(), r.imag());
  const cld v = eval_ld(p, x, nullptr);
  long double scale = 0;
  long double pw = 1;
  const long double ax = std::abs(x);
  for (const auto& c : p.coeffs()) {
    scale += std::abs(c) * pw;
    pw *= ax;
  }
  if (scale == 0) return 0.0;
  return static_cast<double>(std::abs(v) / scale);
}

std::vector<std::complex<double>> aberth_roots(const Poly<std::complex<double>>& p) {
  const int n = p.degree();
  std::vector<std::complex<double>> out;
  if (n < 1) return out;
  if (n == 1) {
    out.push_back(-p.coeff(0) / p.coeff(1));
    return out;
  }

  const Poly<std::complex<double>> q = p.monic();
  // Fujiwara bound on root moduli.
  double bound = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = std::pow(std::abs(q.coeff(i)) / (i == 0 ? 2.0 : 1.0), 1.0 / (n - i));
    bound = std::max(bound, t);
  }
  bound = std::max(2.0 * bound, 1e-3);
  const cld center(-q.coeff(n - 1).real() / n, -q.coeff(n - 1).imag() / n);

  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[k] = center + cld(0.5L * bound * std::cos(angle), 0.5L * bound * std::sin(angle));
  }

  for (int iter = 0; iter < 1000; ++iter) {
    long double max_step = 0;
    for (int i = 0; i < n; ++i) {
      cld d;
      const cld v = eval_ld(q, z[i], &d);
      if (v == cld(0)) continue;
      const cld ratio = v / d;
      cld sum(0);
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      const cld step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (max_step < 1e-18L) break;
  }

  // Newton polish on the original polynomial.
  for (auto& r : z) {
    for (int k = 0; k < 8; ++k) {
      cld d;
      const cld v = eval_ld(p, r, &d);
      if (d == cld(0)) break;
      const cld step = v / d;
      r -= step;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(r))) break;
    }
    out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  }
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<GaussRat> gaussian_rational_roots(const PolyQ& squarefree) {
  std::vector<GaussRat> out;
  PolyQ rest = squarefree.monic();
  if (rest.degree() < 1) return out;
  if (rest.degree() == 1) return {-rest.coeff(0)};
  for (const auto& r : aberth_roots(to_complex(rest))) {
    if (rest.degree() == 1) {
      out.push_back(-rest.coeff(0));
      break;
    }
    if (rest.degree() < 1) break;
    for (long max_den : {1000L, 1000000L}) {
      const GaussRat candidate(rationalize(r.real(), max_den), rationalize(r.imag(), max_den));
      if (rest(candidate).is_zero()) {
        out.push_back(candidate);
        rest = rest.deflate(candidate);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSet squarefree_roots(const PolyQ& squarefree) {
  RootSet set;
  PolyQ rest = squarefree.monic();
  if (rest.degree() < 1) return set;
  set.exact = gaussian_rational_roots(rest);
  for (const auto& r : set.exact) rest = rest.deflate(r);

  if (rest.degree() >= 1) {
    const auto cplx = to_complex(rest);
    for (const auto& r : aberth_roots(cplx)) {
      const double res = relative_residual(cplx, r);
      if (!(res < kRootResidualTol))
        throw Error(ErrorCode::NumericFailure,
                    "root polishing did not reach residual bound (residual " + std::to_string(res) + ")");
      set.numeric.push_back(NumericRoot{r, rest, res});
    }
  }
  return set;
}

int multiplicity_at(const PolyQ& g, const NumericRoot& r) {
  if (g.is_zero()) return 0;
  int count = 0;
  PolyQ h = g;
  for (;;) {
    const PolyQ d = gcd(h, r.factor);
    if (d.degree() < 1) break;
    const PolyQ e = r.factor / d;
    bool in_d = true;
    if (e.degree() >= 1) {
      in_d = relative_residual(to_complex(d), r.value) < relative_residual(to_complex(e), r.value);
    }
    if (!in_d) break;
    h = h / d;
    ++count;
  }
  return count;
}

}  // namespace toric
