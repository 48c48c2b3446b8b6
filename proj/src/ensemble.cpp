#include "toric/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toric {

namespace {

bool poly_less(const PolyQ& a, const PolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

void drop_trivial(std::vector<FormTerm>& terms) {
  std::erase_if(terms, [](const FormTerm& t) { return t.residue.is_zero() || t.locator.degree() < 1; });
}

std::vector<FormTerm> canonicalize(std::vector<FormTerm> terms) {
  for (auto& t : terms) {
    if (t.locator.degree() < 1) throw Error(ErrorCode::InvalidInput, "pole locator must be non-constant");
    t.locator = t.locator.monic();
    if (gcd(t.locator, t.locator.derivative()).degree() >= 1)
      throw Error(ErrorCode::InvalidInput, "pole locator must be square-free");
  }
  drop_trivial(terms);

  // Coprime refinement; the total locator degree drops on every split.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < terms.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < terms.size() && !changed; ++j) {
        const PolyQ g = gcd(terms[i].locator, terms[j].locator);
        if (g.degree() < 1) continue;
        FormTerm a{terms[i].locator / g, terms[i].residue};
        FormTerm b{terms[j].locator / g, terms[j].residue};
        FormTerm shared{g, terms[i].residue + terms[j].residue};
        terms.erase(terms.begin() + static_cast<long>(j));
        terms.erase(terms.begin() + static_cast<long>(i));
        for (auto* t : {&a, &b, &shared})
          if (t->locator.degree() >= 1) terms.push_back(std::move(*t));
        changed = true;
      }
    }
  }

  std::vector<FormTerm> linear;
  std::vector<FormTerm> clusters;
  for (auto& t : terms) {
    PolyQ rest = t.locator;
    for (const auto& r : gaussian_rational_roots(rest)) {
      linear.push_back({PolyQ::linear_root(r), t.residue});
      rest = rest.deflate(r);
    }
    if (rest.degree() < 1) continue;
    rest = rest.monic();
    auto same = std::find_if(clusters.begin(), clusters.end(),
                             [&](const FormTerm& c) { return c.residue == t.residue; });
    if (same != clusters.end()) {
      same->locator = same->locator * rest;
    } else {
      clusters.push_back({rest, t.residue});
    }
  }
  drop_trivial(linear);
  drop_trivial(clusters);
  std::sort(linear.begin(), linear.end(),
            [](const FormTerm& a, const FormTerm& b) { return -a.locator.coeff(0) < -b.locator.coeff(0); });
  std::sort(clusters.begin(), clusters.end(), [](const FormTerm& a, const FormTerm& b) {
    if (a.residue != b.residue) return a.residue < b.residue;
    return poly_less(a.locator, b.locator);
  });
  linear.insert(linear.end(), clusters.begin(), clusters.end());
  return linear;
}

bool is_linear_at(const FormTerm& t, const GaussRat& p) {
  return t.locator.degree() == 1 && -t.locator.coeff(0) == p;
}

}  // namespace

OneForm::OneForm(std::vector<FormTerm> terms) : terms_(canonicalize(std::move(terms))) {}

OneForm OneForm::from_poles(const std::vector<std::pair<GaussRat, Rat>>& poles) {
  std::vector<FormTerm> terms;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (poles[i].first == poles[j].first)
        throw Error(ErrorCode::InvalidInput, "duplicate pole " + poles[i].first.str());
    terms.push_back({PolyQ::linear_root(poles[i].first), poles[i].second});
  }
  return OneForm(std::move(terms));
}

Rat OneForm::residue_at(const GaussRat& p) const {
  for (const auto& t : terms_)
    if (is_linear_at(t, p)) return t.residue;
  return Rat(0);
}

bool OneForm::has_pole(const GaussRat& p) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const FormTerm& t) { return t.locator(p).is_zero(); });
}

Rat OneForm::residue_at_infinity() const {
  Rat sum(0);
  for (const auto& t : terms_) sum += t.residue * Rat(t.locator.degree());
  return -sum;
}

std::vector<std::pair<GaussRat, Rat>> OneForm::exact_poles() const {
  std::vector<std::pair<GaussRat, Rat>> out;
  for (const auto& t : terms_)
    if (t.locator.degree() == 1) out.emplace_back(-t.locator.coeff(0), t.residue);
  return out;
}

std::pair<PolyQ, PolyQ> OneForm::as_fraction() const {
  PolyQ num;
  PolyQ den = PolyQ::constant(GaussRat(1));
  for (const auto& t : terms_) den = den * t.locator;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    PolyQ term = terms_[i].locator.derivative() * GaussRat(terms_[i].residue);
    for (std::size_t j = 0; j < terms_.size(); ++j)
      if (j != i) term = term * terms_[j].locator;
    num += term;
  }
  return {num, den};
}

std::complex<double> OneForm::eval(std::complex<double> z) const {
  std::complex<double> acc(0.0);
  for (const auto& t : terms_) {
    const auto s = to_complex(t.locator);
    acc += t.residue.to_double() * s.derivative().eval(z) / s.eval(z);
  }
  return acc;
}

int OneForm::vanishing_order(const GaussRat& q) const {
  if (has_pole(q)) throw Error(ErrorCode::InvalidInput, "vanishing order requested at a pole " + q.str());
  const PolyQ num = as_fraction().first;
  if (num.is_zero()) throw Error(ErrorCode::ZeroFunction, "the zero form vanishes to infinite order");
  return num.multiplicity(q);
}

OneForm operator+(const OneForm& a, const OneForm& b) {
  std::vector<FormTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return OneForm(std::move(terms));
}

OneForm operator*(const Rat& s, const OneForm& a) {
  std::vector<FormTerm> terms = a.terms_;
  for (auto& t : terms) t.residue *= s;
  return OneForm(std::move(terms));
}

Ensemble make_ensemble(std::vector<OneForm> forms) {
  if (forms.empty()) throw Error(ErrorCode::InvalidInput, "an ensemble needs at least one form");
  Ensemble e;
  e.n = static_cast<int>(forms.size());
  e.forms = std::move(forms);
  return e;
}

BranchLocus ensemble_locus(const Ensemble& e) {
  std::vector<GaussRat> pts;
  for (const auto& f : e.forms)
    for (const auto& [p, r] : f.exact_poles()) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return BranchLocus(std::move(pts));
}

Curve ensemble_curve_representative(const Ensemble& e) {
  if (e.n < 1 || static_cast<int>(e.forms.size()) != e.n)
    throw Error(ErrorCode::InvalidInput, "ensemble dimension does not match its forms");
  const BranchLocus locus = ensemble_locus(e);
  std::vector<TwistedFn> comps{TwistedFn::constant(locus, GaussRat(1))};
  for (const auto& form : e.forms) {
    std::vector<Rat> exps(locus.size(), Rat(0));
    PolyQ numer = PolyQ::constant(GaussRat(1));
    for (const auto& t : form.terms()) {
      if (t.locator.degree() == 1) {
        exps[static_cast<std::size_t>(locus.index_of(-t.locator.coeff(0)))] = t.residue;
        continue;
      }
      if (!t.residue.is_integer() || t.residue.sign() < 0)
        throw Error(ErrorCode::UnrepresentableTwist,
                    "residue " + t.residue.str() + " at irrational poles is not a non-negative integer");
      numer = numer * t.locator.pow(static_cast<int>(t.residue.to_long()));
    }
    comps.push_back(TwistedFn::from_exponents(locus, std::move(exps), std::move(numer)));
  }
  return Curve(std::move(comps));
}

Curve ensemble_to_curve(const Ensemble& e, const std::vector<Rat>& rho, const GaussRat& basepoint) {
  if (static_cast<int>(rho.size()) != e.n) throw Error(ErrorCode::InvalidInput, "rho must have n entries");
  for (const auto& r : rho)
    if (r.sign() <= 0) throw Error(ErrorCode::InvalidInput, "rho entries must be positive");
  for (const auto& f : e.forms)
    if (f.has_pole(basepoint)) throw Error(ErrorCode::BasepointIsPole, "basepoint " + basepoint.str() + " is a pole");

  const Curve rep = ensemble_curve_representative(e);
  std::vector<ModulusScale> scales(rep.components().size());
  for (int k = 1; k <= e.n; ++k) {
    ModulusScale& s = scales[static_cast<std::size_t>(k)];
    s.factor = rho[static_cast<std::size_t>(k - 1)];
    for (const auto& t : e.forms[static_cast<std::size_t>(k - 1)].terms())
      s.moduli.factors.emplace_back(t.locator(basepoint), -t.residue);
  }
  return Curve(rep.components(), std::move(scales));
}

bool is_character_ensemble(const Ensemble& e) {
  for (const auto& f : e.forms)
    if (f.is_zero()) return false;
  return nondegenerate(ensemble_curve_representative(e));
}

OneForm log_derivative(const TwistedFn& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "log derivative of the zero function");
  std::vector<FormTerm> terms;
  for (std::size_t j = 0; j < f.locus().size(); ++j)
    terms.push_back({PolyQ::linear_root(f.locus()[j]), f.net_exponent(j)});
  const auto factors = squarefree_decomposition(f.numer());
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].degree() >= 1) terms.push_back({factors[i], Rat(static_cast<long>(i) + 1)});
  return OneForm(std::move(terms));
}

Ensemble curve_to_ensemble(const Curve& c) {
  if (c[0].is_zero()) throw Error(ErrorCode::InvalidInput, "curve_to_ensemble needs f_0 != 0");
  if (!nondegenerate(c)) throw Error(ErrorCode::DegenerateCurve, "Lambda_n vanishes identically");
  const OneForm base = log_derivative(c[0]);
  std::vector<OneForm> forms;
  for (int k = 1; k <= c.n(); ++k) forms.push_back(log_derivative(c[k]) + Rat(-1) * base);
  return make_ensemble(std::move(forms));
}

Ensemble scaled_ensemble(const OneForm& base, const std::vector<Rat>& lambdas) {
  if (lambdas.empty()) throw Error(ErrorCode::InvalidInput, "at least one lambda is required");
  std::vector<OneForm> forms;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i].is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda_" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j)
      if (lambdas[i] == lambdas[j])
        throw Error(ErrorCode::DuplicateLambda, "lambda " + lambdas[i].str() + " appears twice");
    forms.push_back(lambdas[i] * base);
  }
  return make_ensemble(std::move(forms));
}

std::vector<Rat> monodromy_at(const Ensemble& e, const GaussRat& p) {
  bool pole = false;
  std::vector<Rat> out;
  for (const auto& f : e.forms) {
    pole = pole || f.has_pole(p);
    out.push_back(f.residue_at(p).frac());
  }
  if (!pole) throw Error(ErrorCode::NotAPole, p.str() + " is not a pole of any form");
  return out;
}

std::complex<double> turn_to_phase(const Rat& turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns.frac().to_double());
}

MatrixXr inverse_cartan(int n) {
  MatrixXr a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a(i - 1, j - 1) = Rat(static_cast<long>(std::min(i, j)) * (n + 1 - std::max(i, j)), n + 1);
  return a;
}

MatrixXr inverse_cartan_printed(int n) {
  MatrixXr a(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a(i - 1, j - 1) = Rat(static_cast<long>(j) * (n + 1 - i), n + 1);
  return a;
}

RhoVector compute_rho(const std::vector<std::vector<Rat>>& gamma, long genus, int n) {
  return compute_rho(gamma, genus, n, inverse_cartan(n));
}

RhoVector compute_rho(const std::vector<std::vector<Rat>>& gamma, long genus, int n, const MatrixXr& ainv) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be non-negative");
  for (const auto& row : gamma)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidInput, "gamma rows must have n entries");
  RhoVector out;
  // Gauss-Bonnet: the background curvature integrates to pi (4 - 4g).
  const Rat curvature(4 - 4 * genus);
  for (int i = 0; i < n; ++i) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) {
      Rat col(0);
      for (const auto& row : gamma) col += row[j];
      acc += ainv(i, j) * (Rat(4) * col + curvature);
    }
    const Rat quarter = acc / Rat(4);
    out.over_pi.push_back(acc);
    out.in_4pi_n.push_back(quarter.is_integer() && quarter.sign() > 0);
  }
  return out;
}

std::vector<std::vector<Rat>> family_gamma_matrix(const RhoFamily& f) {
  if (static_cast<int>(f.lambdas.size()) != f.n) throw Error(ErrorCode::InvalidInput, "family needs n lambdas");
  auto lam = [&](int j) { return j == 0 ? Rat(0) : f.lambdas[static_cast<std::size_t>(j - 1)]; };
  std::vector<std::vector<Rat>> g(2, std::vector<Rat>(static_cast<std::size_t>(f.n)));
  for (int j = 1; j <= f.n; ++j) {
    g[0][j - 1] = (lam(j) - lam(j - 1)) * f.a - Rat(1);
    g[1][j - 1] = (lam(f.n - j + 1) - lam(f.n - j)) * f.a - Rat(1);
  }
  for (long k : f.ks) g.emplace_back(static_cast<std::size_t>(f.n), Rat(k));
  return g;
}

std::vector<Rat> family_rho_printed_closed_form(const RhoFamily& f) {
  long ksum = 0;
  for (long k : f.ks) ksum += k;
  const Rat a_lambda_n = f.a * f.lambdas.back();
  std::vector<Rat> out;
  for (int i = 1; i <= f.n; ++i) {
    const Rat w(f.n + 1 - i);
    out.push_back(Rat(4) * w * a_lambda_n + Rat(4) * Rat(ksum - 1 - f.genus) * Rat(f.n) * w);
  }
  return out;
}

}  // namespace toric
