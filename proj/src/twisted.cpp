#include "toric/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toric {

// ---------------------------------------------------------------------------
// BranchLocus and points

BranchLocus::BranchLocus(std::vector<GaussRat> points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw Error(ErrorCode::InvalidInput, "branch locus points must be distinct (" + points[i].str() + ")");
  points_ = std::make_shared<const std::vector<GaussRat>>(std::move(points));
}

int BranchLocus::index_of(const GaussRat& p) const {
  for (std::size_t i = 0; i < points_->size(); ++i)
    if ((*points_)[i] == p) return static_cast<int>(i);
  return -1;
}

bool is_infinity(const Point& p) { return std::holds_alternative<Infinity>(p); }

std::string point_str(const Point& p) {
  if (const auto* g = std::get_if<GaussRat>(&p)) return g->str();
  if (const auto* r = std::get_if<NumericRoot>(&p)) {
    std::ostringstream os;
    os.precision(12);
    os << "~(" << r->value.real() << (r->value.imag() < 0 ? " - " : " + ") << std::abs(r->value.imag()) << "i)";
    return os.str();
  }
  return "infinity";
}

std::complex<double> point_value(const Point& p) {
  if (const auto* g = std::get_if<GaussRat>(&p)) return g->to_complex();
  if (const auto* r = std::get_if<NumericRoot>(&p)) return r->value;
  return {INFINITY, 0.0};
}

bool point_less(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ga = std::get_if<GaussRat>(&a)) return *ga < std::get<GaussRat>(b);
  if (const auto* ra = std::get_if<NumericRoot>(&a)) {
    const auto& rb = std::get<NumericRoot>(b);
    if (ra->value.real() != rb.value.real()) return ra->value.real() < rb.value.real();
    return ra->value.imag() < rb.value.imag();
  }
  return false;
}

bool point_equal(const Point& a, const Point& b) { return !point_less(a, b) && !point_less(b, a); }

// ---------------------------------------------------------------------------
// Normal form

namespace {

PolyQ linear(const GaussRat& p) { return PolyQ::linear_root(p); }

void require_same_locus(const TwistedFn& a, const TwistedFn& b) {
  if (!(a.locus() == b.locus())) throw Error(ErrorCode::InvalidInput, "twisted functions on different loci");
}

/// (z - p)^e for integer e >= 0.
PolyQ linear_pow(const GaussRat& p, long e) { return linear(p).pow(static_cast<int>(e)); }

}  // namespace

TwistedFn TwistedFn::from_exponents(BranchLocus locus, std::vector<Rat> exponents, PolyQ numer) {
  if (exponents.size() != locus.size())
    throw Error(ErrorCode::InvalidInput, "exponent vector length does not match locus");
  TwistedFn f;
  f.locus_ = std::move(locus);
  const std::size_t m = f.locus_.size();
  f.twist_.assign(m, Rat(0));
  f.denom_exp_.assign(m, 0);
  if (numer.is_zero()) return f;

  for (std::size_t j = 0; j < m; ++j) {
    const GaussRat& p = f.locus_[j];
    const mpz_class fl = exponents[j].floor();
    if (!fl.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "exponent out of range");
    f.twist_[j] = exponents[j] - Rat(fl);
    long net = fl.get_si();
    // Pull all factors (z - p) out of the numerator so the split is unique.
    while (!numer.is_zero() && numer(p).is_zero()) {
      numer = numer.deflate(p);
      ++net;
    }
    if (net >= 0) {
      if (net > 0) numer = numer * linear_pow(p, net);
      f.denom_exp_[j] = 0;
    } else {
      f.denom_exp_[j] = -net;
    }
  }
  f.numer_ = std::move(numer);
  return f;
}

TwistedFn TwistedFn::from_poly(BranchLocus locus, PolyQ numer) {
  std::vector<Rat> e(locus.size(), Rat(0));
  return from_exponents(std::move(locus), std::move(e), std::move(numer));
}

TwistedFn TwistedFn::constant(BranchLocus locus, GaussRat c) {
  return from_poly(std::move(locus), PolyQ::constant(std::move(c)));
}

TwistedFn TwistedFn::zero(BranchLocus locus) { return from_poly(std::move(locus), PolyQ()); }

namespace {

std::vector<Rat> net_exponents(const TwistedFn& f) {
  std::vector<Rat> e;
  e.reserve(f.locus().size());
  for (std::size_t j = 0; j < f.locus().size(); ++j) e.push_back(f.net_exponent(j));
  return e;
}

}  // namespace

TwistedFn tf_add(const TwistedFn& a, const TwistedFn& b) {
  require_same_locus(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.twist() != b.twist())
    throw Error(ErrorCode::TwistMismatch, "sum of twisted functions with different twists");
  const BranchLocus& locus = a.locus();
  PolyQ na = a.numer();
  PolyQ nb = b.numer();
  std::vector<Rat> exps(locus.size());
  for (std::size_t j = 0; j < locus.size(); ++j) {
    const long ka = a.denom_exp()[j];
    const long kb = b.denom_exp()[j];
    const long k = std::max(ka, kb);
    if (k > ka) na = na * linear_pow(locus[j], k - ka);
    if (k > kb) nb = nb * linear_pow(locus[j], k - kb);
    exps[j] = a.twist()[j] - Rat(k);
  }
  return TwistedFn::from_exponents(locus, std::move(exps), na + nb);
}

TwistedFn tf_scale(const TwistedFn& a, const GaussRat& c) {
  if (c.is_zero() || a.is_zero()) return TwistedFn::zero(a.locus());
  return TwistedFn::from_exponents(a.locus(), net_exponents(a), a.numer() * c);
}

TwistedFn tf_sub(const TwistedFn& a, const TwistedFn& b) { return tf_add(a, tf_scale(b, GaussRat(-1))); }

TwistedFn tf_mul(const TwistedFn& a, const TwistedFn& b) {
  require_same_locus(a, b);
  if (a.is_zero() || b.is_zero()) return TwistedFn::zero(a.locus());
  std::vector<Rat> exps(a.locus().size());
  for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = a.net_exponent(j) + b.net_exponent(j);
  return TwistedFn::from_exponents(a.locus(), std::move(exps), a.numer() * b.numer());
}

TwistedFn tf_derivative(const TwistedFn& f) {
  if (f.is_zero()) return f;
  const BranchLocus& locus = f.locus();
  const std::size_t m = locus.size();
  // F'/F = sum_j e_j/(z - p_j) + N'/N, cleared over L = prod_{e_j != 0} (z - p_j).
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < m; ++j)
    if (!f.net_exponent(j).is_zero()) active.push_back(j);

  PolyQ big_l = PolyQ::constant(GaussRat(1));
  for (auto j : active) big_l = big_l * linear(locus[j]);

  PolyQ numer = f.numer().derivative() * big_l;
  for (auto j : active) {
    PolyQ lj = PolyQ::constant(GaussRat(1));
    for (auto i : active)
      if (i != j) lj = lj * linear(locus[i]);
    numer += f.numer() * lj * GaussRat(f.net_exponent(j));
  }
  std::vector<Rat> exps = net_exponents(f);
  for (auto j : active) exps[j] -= Rat(1);
  return TwistedFn::from_exponents(locus, std::move(exps), std::move(numer));
}

// ---------------------------------------------------------------------------
// Orders and local data

Rat tf_order_at(const TwistedFn& f, const Point& p) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "order of the zero function");
  const BranchLocus& locus = f.locus();
  if (is_infinity(p)) {
    Rat acc = Rat(-f.numer().degree());
    for (std::size_t j = 0; j < locus.size(); ++j) acc -= f.net_exponent(j);
    return acc;
  }
  if (const auto* r = std::get_if<NumericRoot>(&p)) {
    for (std::size_t j = 0; j < locus.size(); ++j)
      if (std::abs(locus[j].to_complex() - r->value) < 1e-9)
        throw Error(ErrorCode::IllConditionedRoot, "numeric point coincides with a locus point");
    return Rat(multiplicity_at(f.numer(), *r));
  }
  const auto& g = std::get<GaussRat>(p);
  const int idx = locus.index_of(g);
  const Rat mult(f.numer().multiplicity(g));
  if (idx < 0) return mult;
  return f.net_exponent(static_cast<std::size_t>(idx)) + mult;
}

namespace {

/// Truncated (1 + x t)^e.
std::vector<GaussRat> binomial_series(const Rat& e, const GaussRat& x, int len) {
  std::vector<GaussRat> out(static_cast<std::size_t>(len), GaussRat(0));
  GaussRat term(1);
  for (int k = 0; k < len; ++k) {
    out[k] = term;
    term = term * GaussRat((e - Rat(k)) / Rat(k + 1)) * x;
  }
  return out;
}

std::vector<GaussRat> mul_trunc(const std::vector<GaussRat>& a, const std::vector<GaussRat>& b, int len) {
  std::vector<GaussRat> out(static_cast<std::size_t>(len), GaussRat(0));
  for (int i = 0; i < len && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < len && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

LocalSeries tf_local_series(const TwistedFn& f, const Point& p, int len) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "series of the zero function");
  if (len < 1) throw Error(ErrorCode::InvalidInput, "series length must be positive");
  if (std::holds_alternative<NumericRoot>(p))
    throw Error(ErrorCode::InvalidInput, "local series needs an exact point or infinity");
  const BranchLocus& locus = f.locus();
  LocalSeries out;

  if (is_infinity(p)) {
    // f(1/w) = w^{-sum e_j - deg N} prod_{p_j != 0} (1 - p_j w)^{e_j} * rev(N)(w)
    Rat lead(-f.numer().degree());
    std::vector<GaussRat> series = f.numer().reversed().truncated(len).coeffs();
    series.resize(static_cast<std::size_t>(len), GaussRat(0));
    for (std::size_t j = 0; j < locus.size(); ++j) {
      const Rat e = f.net_exponent(j);
      lead -= e;
      if (locus[j].is_zero() || e.is_zero()) continue;
      series = mul_trunc(series, binomial_series(e, -locus[j], len), len);
    }
    out.lead_exp = lead;
    out.coeffs = std::move(series);
    return out;
  }

  const GaussRat& at = std::get<GaussRat>(p);
  const int idx = locus.index_of(at);
  PolyQ shifted = f.numer().taylor_shift(at);
  const int m = shifted.low_order();
  std::vector<GaussRat> series(shifted.coeffs().begin() + m, shifted.coeffs().end());
  series.resize(std::max<std::size_t>(series.size(), static_cast<std::size_t>(len)), GaussRat(0));
  series.resize(static_cast<std::size_t>(len));
  Rat lead(m);
  GaussRat constant(1);
  for (std::size_t j = 0; j < locus.size(); ++j) {
    const Rat e = f.net_exponent(j);
    if (static_cast<int>(j) == idx) {
      lead += e;
      continue;
    }
    if (e.is_zero()) continue;
    const GaussRat q = at - locus[j];
    // (q + t)^e = q^e (1 + t/q)^e
    const mpz_class fl = e.floor();
    constant *= pow(q, fl.get_si());
    const Rat fr = e - Rat(fl);
    if (!fr.is_zero()) out.prefactor.factors.emplace_back(q, fr);
    series = mul_trunc(series, binomial_series(e, GaussRat(1) / q, len), len);
  }
  for (auto& c : series) c *= constant;
  out.lead_exp = lead;
  out.coeffs = std::move(series);
  return out;
}

double tf_eval_abs2(const TwistedFn& f, std::complex<double> z) {
  const BranchLocus& locus = f.locus();
  double log_mod = 0.0;
  for (std::size_t j = 0; j < locus.size(); ++j) {
    const double d = std::abs(z - locus[j].to_complex());
    if (d == 0.0) throw Error(ErrorCode::EvalAtSingularity, "evaluation at locus point " + locus[j].str());
    log_mod += 2.0 * f.net_exponent(j).to_double() * std::log(d);
  }
  if (f.is_zero()) return 0.0;
  const std::complex<double> n = to_complex(f.numer()).eval(z);
  return std::norm(n) * std::exp(log_mod);
}

PolyQ solve_euler_ode(const Rat& alpha, const PolyQ& p) {
  if (alpha.sign() <= 0) throw Error(ErrorCode::InvalidInput, "solve_euler_ode needs alpha > 0");
  std::vector<GaussRat> q;
  q.reserve(p.coeffs().size());
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    q.push_back(p.coeffs()[j] / GaussRat(alpha + Rat(static_cast<long>(j))));
  return PolyQ(std::move(q));
}

// ---------------------------------------------------------------------------
// Coordinate inversion z = 1/w

BranchLocus inverted_locus(const BranchLocus& locus) {
  std::vector<GaussRat> pts{GaussRat(0)};
  for (const auto& p : locus.points())
    if (!p.is_zero()) pts.push_back(GaussRat(1) / p);
  return BranchLocus(std::move(pts));
}

InvertedFn invert_component(const TwistedFn& f, const BranchLocus& target) {
  InvertedFn out;
  if (f.is_zero()) {
    out.fn = TwistedFn::zero(target);
    return out;
  }
  const BranchLocus& locus = f.locus();
  std::vector<Rat> exps(target.size(), Rat(0));
  const int origin = target.index_of(GaussRat(0));
  if (origin < 0) throw Error(ErrorCode::InvalidInput, "inverted locus must contain 0");
  GaussRat c(1);

  // N(1/w) = w^{-d} rev(N)(w)
  exps[origin] -= Rat(f.numer().degree());
  for (std::size_t j = 0; j < locus.size(); ++j) {
    const Rat e = f.net_exponent(j);
    const GaussRat& p = locus[j];
    exps[origin] -= e;
    if (p.is_zero()) continue;
    // (1 - p w)^e = (-p)^e (w - 1/p)^e; the integer part of (-p)^e is kept
    // exactly, the fractional part contributes only a modulus.
    const int idx = target.index_of(GaussRat(1) / p);
    if (idx < 0) throw Error(ErrorCode::InvalidInput, "inverted locus is missing 1/" + p.str());
    exps[idx] += e;
    const mpz_class fl = e.floor();
    c *= pow(-p, fl.get_si());
    const Rat fr = e - Rat(fl);
    if (!fr.is_zero()) out.dropped_modulus.factors.emplace_back(-p, fr);
  }
  out.fn = TwistedFn::from_exponents(target, std::move(exps), f.numer().reversed() * c);
  return out;
}

}  // namespace toric
