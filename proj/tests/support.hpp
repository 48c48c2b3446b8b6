#pragma once

// Shared helpers for the test binaries: seeded generators for exact data
// and independent numeric oracles that never go through the library's
// normal form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "toric/construct.hpp"
#include "toric/ensemble.hpp"
#include "toric/singularity.hpp"
#include "toric/twisted.hpp"
#include "toric/wronskian.hpp"

namespace testing {

using namespace toric;
using cd = std::complex<double>;

inline GaussRat G(long re, long im = 0) { return GaussRat(Rat(re), Rat(im)); }
inline Rat R(long p, long q = 1) { return Rat(p, q); }

inline PolyQ P(std::initializer_list<long> c) {
  std::vector<GaussRat> v;
  for (long x : c) v.emplace_back(Rat(x));
  return PolyQ(std::move(v));
}

inline BranchLocus L(std::initializer_list<GaussRat> pts) { return BranchLocus(std::vector<GaussRat>(pts)); }

inline TwistedFn F(const BranchLocus& locus, std::vector<Rat> exps, PolyQ numer) {
  return TwistedFn::from_exponents(locus, std::move(exps), std::move(numer));
}

/// (z^{e_0}, ..., z^{e_n}) over the locus {0}.
inline Curve power_curve(const std::vector<Rat>& exps) {
  const BranchLocus locus = L({G(0)});
  std::vector<TwistedFn> comps;
  for (const auto& e : exps) comps.push_back(F(locus, {e}, P({1})));
  return Curve(std::move(comps));
}

/// Polynomial curve over the locus {0}.
inline Curve poly_curve(const std::vector<PolyQ>& polys) {
  const BranchLocus locus = L({G(0)});
  std::vector<TwistedFn> comps;
  for (const auto& p : polys) comps.push_back(TwistedFn::from_poly(locus, p));
  return Curve(std::move(comps));
}

/// Exact points compare exactly; numeric points within 1e-9.
inline bool same_point(const Point& a, const Point& b) {
  if (std::holds_alternative<NumericRoot>(a) && std::holds_alternative<NumericRoot>(b))
    return std::abs(point_value(a) - point_value(b)) < 1e-9;
  return point_equal(a, b);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rat rat(long range, long max_den) { return Rat(integer(-range, range), integer(1, max_den)); }
  Rat nonzero_rat(long range, long max_den) {
    for (;;) {
      Rat r = rat(range, max_den);
      if (!r.is_zero()) return r;
    }
  }
  Rat positive_rat(long range, long max_den) { return Rat(integer(1, range), integer(1, max_den)); }
  GaussRat gauss(long range, long max_den) {
    return GaussRat(rat(range, max_den), coin() ? rat(range, max_den) : Rat(0));
  }
  PolyQ poly(int max_degree, long range) {
    const int d = static_cast<int>(integer(0, max_degree));
    std::vector<GaussRat> c;
    for (int i = 0; i <= d; ++i) c.push_back(gauss(range, 3));
    if (c.back().is_zero()) c.back() = GaussRat(1);
    return PolyQ(std::move(c));
  }
  /// count distinct points with small Gaussian-integer-ish coordinates
  std::vector<GaussRat> distinct_points(int count, long range, bool allow_zero) {
    std::vector<GaussRat> pts;
    while (static_cast<int>(pts.size()) < count) {
      GaussRat p = gauss(range, 2);
      if (!allow_zero && p.is_zero()) continue;
      if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
      pts.push_back(p);
    }
    return pts;
  }
  std::vector<Rat> distinct_nonzero_rats(int count, long range, long max_den) {
    std::vector<Rat> out;
    while (static_cast<int>(out.size()) < count) {
      Rat r = nonzero_rat(range, max_den);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Principal-branch value of prod (z - p_j)^{e_j} * N(z), evaluated from raw
/// exponent data.
inline cd principal_value(const std::vector<GaussRat>& pts, const std::vector<Rat>& exps, const PolyQ& numer, cd z) {
  cd v = to_complex(numer).eval(z);
  for (std::size_t j = 0; j < pts.size(); ++j) v *= std::pow(z - pts[j].to_complex(), exps[j].to_double());
  return v;
}

/// Principal-branch value of a TwistedFn read off its fields.
inline cd principal_value(const TwistedFn& f, cd z) {
  std::vector<Rat> exps;
  for (std::size_t j = 0; j < f.locus().size(); ++j) exps.push_back(f.net_exponent(j));
  return principal_value(f.locus().points(), exps, f.numer(), z);
}

/// Central difference along the real axis (holomorphic functions only).
template <typename Fn>
cd numeric_derivative(Fn&& f, cd z, double h = 1e-5) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// Leibniz-formula determinant of a square matrix of polynomials.
inline PolyQ leibniz_det(const std::vector<std::vector<PolyQ>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  PolyQ acc;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    PolyQ term = PolyQ::constant(GaussRat(inversions % 2 == 0 ? 1 : -1));
    for (int i = 0; i < n; ++i) term = term * m[i][perm[i]];
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// Wronskian of polynomials by brute force: rows are derivatives.
inline PolyQ brute_wronskian(const std::vector<PolyQ>& polys) {
  const std::size_t n = polys.size();
  std::vector<std::vector<PolyQ>> m(n, std::vector<PolyQ>(n));
  for (std::size_t j = 0; j < n; ++j) {
    PolyQ d = polys[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = d;
      d = d.derivative();
    }
  }
  return leibniz_det(m);
}

/// Falling factorial lambda (lambda - 1) ... (lambda - k + 1).
inline Rat falling(const Rat& lambda, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= lambda - Rat(i);
  return r;
}

/// Lambda_n of (z^{l_0}, ..., z^{l_n}) divided by z^{sum l - n(n+1)/2}: the
/// determinant of falling factorials, computed by exact Gaussian elimination.
inline Rat power_wronskian_constant(const std::vector<Rat>& lambdas) {
  const int size = static_cast<int>(lambdas.size());
  MatrixXr m(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m(i, j) = falling(lambdas[j], i);
  Rat det(1);
  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && m(piv, c).is_zero()) ++piv;
    if (piv == size) return Rat(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < size; ++r) {
      const Rat f = m(r, c) / m(c, c);
      for (int k = c; k < size; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Random valid prescribed data: n <= max_n, m <= max_m, entries <= max_entry.
inline PrescribedData random_prescribed(Gen& g, int max_n, int max_m, long max_entry) {
  PrescribedData d;
  d.n = static_cast<int>(g.integer(1, max_n));
  for (int j = 0; j < d.n; ++j) {
    Rat gam;
    do {
      gam = Rat(g.integer(-3, 3 * max_entry), g.integer(1, 4));
    } while (!(Rat(-1) < gam));
    d.gamma0.push_back(gam);
  }
  const int m = static_cast<int>(g.integer(0, max_m));
  d.points = g.distinct_points(m, 3, false);
  for (int i = 0; i < m; ++i) {
    std::vector<long> row;
    for (int j = 0; j < d.n; ++j) row.push_back(g.integer(0, max_entry));
    d.ram.push_back(std::move(row));
  }
  return d;
}

/// Random ensemble with n forms and up to max_poles exact poles in total.
inline Ensemble random_ensemble(Gen& g, int n, int max_poles) {
  for (;;) {
    const int count = static_cast<int>(g.integer(1, max_poles));
    const auto pts = g.distinct_points(count, 3, true);
    std::vector<OneForm> forms;
    for (int k = 0; k < n; ++k) {
      std::vector<std::pair<GaussRat, Rat>> poles;
      for (const auto& p : pts)
        if (g.integer(0, 3) != 0) poles.emplace_back(p, g.nonzero_rat(4, 3));
      if (poles.empty()) poles.emplace_back(pts.front(), g.nonzero_rat(4, 3));
      forms.push_back(OneForm::from_poles(poles));
    }
    Ensemble e = make_ensemble(std::move(forms));
    if (is_character_ensemble(e)) return e;
  }
}

/// Random invertible constant matrix that only mixes components sharing a
/// twist vector (unit lower times unit upper triangular).
inline MatrixXg random_class_matrix(const Curve& c, Gen& g) {
  const int size = c.n() + 1;
  MatrixXg lower = MatrixXg::Identity(size, size);
  MatrixXg upper = MatrixXg::Identity(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (i == j || c[i].twist() != c[j].twist()) continue;
      (i > j ? lower : upper)(i, j) = GaussRat(g.integer(-3, 3));
    }
  return lower * upper;
}

}  // namespace testing
