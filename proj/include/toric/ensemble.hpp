#pragma once

// Meromorphic one-forms with simple poles and real rational residues on the
// Riemann sphere, the curves they generate by componentwise exp(integral),
// and the inverse map Omega_k = d log(f_k / f_0).

#include <complex>
#include <vector>

#include "toric/wronskian.hpp"

namespace toric {

/// residue * s'(z)/s(z) dz: a simple pole with the given residue at every
/// root of the monic square-free locator s. A pole at an exact point p is
/// the locator z - p; irrational poles are grouped under one locator.
struct FormTerm {
  PolyQ locator;
  Rat residue;

  friend bool operator==(const FormTerm&, const FormTerm&) = default;
};

/// Canonical form: locators pairwise coprime, every Gaussian-rational pole
/// split out as its own linear term, remaining poles grouped by residue,
/// no zero residues, deterministic order (linear terms by point first).
class OneForm {
 public:
  OneForm() = default;
  explicit OneForm(std::vector<FormTerm> terms);
  static OneForm from_poles(const std::vector<std::pair<GaussRat, Rat>>& poles);

  const std::vector<FormTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Residue at an exact point (0 if it is not a pole).
  Rat residue_at(const GaussRat& p) const;
  bool has_pole(const GaussRat& p) const;
  /// -sum of all finite residues.
  Rat residue_at_infinity() const;
  /// Exact linear poles in canonical order.
  std::vector<std::pair<GaussRat, Rat>> exact_poles() const;

  /// The form as N(z)/D(z) dz with D = prod of locators.
  std::pair<PolyQ, PolyQ> as_fraction() const;
  std::complex<double> eval(std::complex<double> z) const;
  /// Order of vanishing of the coefficient at a non-pole point.
  int vanishing_order(const GaussRat& q) const;

  friend OneForm operator+(const OneForm& a, const OneForm& b);
  friend OneForm operator*(const Rat& s, const OneForm& a);
  friend bool operator==(const OneForm&, const OneForm&) = default;

 private:
  std::vector<FormTerm> terms_;
};

struct Ensemble {
  int n = 0;
  std::vector<OneForm> forms;

  friend bool operator==(const Ensemble&, const Ensemble&) = default;
};

Ensemble make_ensemble(std::vector<OneForm> forms);

/// Union of the exact poles of all forms, sorted.
BranchLocus ensemble_locus(const Ensemble& e);

/// The representative (1, exp int Omega_1, ...) with unit scales.
Curve ensemble_curve_representative(const Ensemble& e);

/// Component k is rho_k * c_k * prod (z - p_j)^{res_j}, with c_k > 0 chosen
/// so that its modulus at the basepoint equals rho_k.
Curve ensemble_to_curve(const Ensemble& e, const std::vector<Rat>& rho, const GaussRat& basepoint);

bool is_character_ensemble(const Ensemble& e);

Ensemble curve_to_ensemble(const Curve& c);

/// d log f as a one-form.
OneForm log_derivative(const TwistedFn& f);

Ensemble scaled_ensemble(const OneForm& base, const std::vector<Rat>& lambdas);

/// Rotation numbers frac(Res_p Omega_k) in [0, 1): the phase is
/// exp(2 pi i * value).
std::vector<Rat> monodromy_at(const Ensemble& e, const GaussRat& p);
std::complex<double> turn_to_phase(const Rat& turns);

/// Symmetric inverse of the su(n+1) Cartan matrix, exact.
MatrixXr inverse_cartan(int n);
/// The literal lower-triangular display j(n+1-i)/(n+1) for every (i, j).
MatrixXr inverse_cartan_printed(int n);

struct RhoVector {
  /// rho_i / pi
  std::vector<Rat> over_pi;
  /// rho_i in 4 pi N, with N = {1, 2, ...}
  std::vector<bool> in_4pi_n;
};

RhoVector compute_rho(const std::vector<std::vector<Rat>>& gamma, long genus, int n);
RhoVector compute_rho(const std::vector<std::vector<Rat>>& gamma, long genus, int n, const MatrixXr& ainv);

/// The scaled-ensemble family on a genus-g surface: poles with residues
/// a and -a, and extra zeros of the base form of orders ks.
struct RhoFamily {
  int n = 1;
  Rat a;
  std::vector<Rat> lambdas;
  std::vector<long> ks;
  long genus = 0;
};

std::vector<std::vector<Rat>> family_gamma_matrix(const RhoFamily& f);
/// 4 (n+1-i) a lambda_n + 4 (sum k - 1 - g) n (n+1-i), as multiples of pi.
std::vector<Rat> family_rho_printed_closed_form(const RhoFamily& f);

}  // namespace toric
