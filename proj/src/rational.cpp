#include "toric/rational.hpp"

#include <cmath>
#include <ostream>

#include "toric/error.hpp"

namespace toric {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TwistMismatch: return "TwistMismatch";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::EvalAtSingularity: return "EvalAtSingularity";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::IllConditionedRoot: return "IllConditionedRoot";
    case ErrorCode::NonIncreasingExponents: return "NonIncreasingExponents";
    case ErrorCode::NotAPole: return "NotAPole";
    case ErrorCode::NotPurePowerForm: return "NotPurePowerForm";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::BasepointIsPole: return "BasepointIsPole";
    case ErrorCode::ComplexResidue: return "ComplexResidue";
    case ErrorCode::DuplicateLambda: return "DuplicateLambda";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::NonPositiveGram: return "NonPositiveGram";
    case ErrorCode::UnrepresentableTwist: return "UnrepresentableTwist";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty rational");
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

long Rat::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw Error(ErrorCode::InvalidInput, "rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

std::string Rat::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  if (r.is_integer()) return os << r.num().get_str();
  return os << r.str();
}

std::string GaussRat::str() const {
  if (im_.is_zero()) return re_.is_integer() ? re_.num().get_str() : re_.str();
  return "(" + re_.str() + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str() + "i)";
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Rat n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

GaussRat pow(const GaussRat& base, long e) {
  if (e < 0) return GaussRat(1) / pow(base, -e);
  GaussRat result(1);
  GaussRat b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

Rat rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NumericFailure, "cannot rationalize non-finite value");
  // Continued-fraction convergents.
  long double v = x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(v);
    if (std::fabs(a) > 1e18L) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    const long double rem = v - a;
    if (rem < 1e-18L) break;
    v = 1.0L / rem;
  }
  if (q1 == 0) return Rat(static_cast<long>(std::llround(x)));
  mpq_class q(p1, q1);
  q.canonicalize();
  return Rat(std::move(q));
}

double PowerProduct::log_modulus() const {
  double acc = 0.0;
  for (const auto& [base, e] : factors) acc += 0.5 * std::log(base.norm2().to_double()) * e.to_double();
  return acc;
}

double PowerProduct::modulus() const { return std::exp(log_modulus()); }

std::complex<double> PowerProduct::principal_value() const {
  std::complex<double> acc(1.0, 0.0);
  for (const auto& [base, e] : factors) acc *= std::pow(base.to_complex(), e.to_double());
  return acc;
}

PowerProduct& PowerProduct::operator*=(const PowerProduct& o) {
  factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  return *this;
}

double ModulusScale::value() const { return factor.to_double() * moduli.modulus(); }

ModulusScale& ModulusScale::operator*=(const ModulusScale& o) {
  factor *= o.factor;
  moduli *= o.moduli;
  return *this;
}

}  // namespace toric
