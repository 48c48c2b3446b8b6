#pragma once

// Curves with prescribed data: indices gamma0 at z = 0 and integral
// ramification rows at finitely many nonzero points.

#include <vector>

#include "toric/singularity.hpp"
#include "toric/wronskian.hpp"

namespace toric {

struct PrescribedData {
  int n = 1;
  std::vector<Rat> gamma0;
  std::vector<GaussRat> points;
  /// ram[i][j] = gamma_{i, j+1} at points[i]
  std::vector<std::vector<long>> ram;

  /// GammaOutOfRange for gamma_j <= -1, InvalidInput for shape problems.
  void validate() const;
  int m() const { return static_cast<int>(points.size()); }
};

/// beta_0 = 0, beta_j - beta_{j-1} = 1 + gamma_j.
std::vector<Rat> betas_from_gammas(const std::vector<Rat>& gamma0);

struct ConstructedCurve {
  Curve curve;
  std::vector<Rat> betas;
  /// phi_0 = 1, phi_1, ..., phi_n
  std::vector<PolyQ> phis;

  std::vector<long> degree_vector() const;
};

/// (1, z^{beta_1} phi_1, ..., z^{beta_n} phi_n) over the locus {0}.
ConstructedCurve construct_curve(const PrescribedData& d);

/// sum_i sum_j (n+1-j) gamma_{i,j}
long total_ram_weight(const PrescribedData& d);

/// gamma_{inf,i} = beta_{n+1-i} - beta_{n-i} - 1 + sum_l gamma_{l, n+1-i}
std::vector<Rat> infinity_data_closed_form(const PrescribedData& d);

struct DegreeCandidate {
  std::vector<long> degrees;
  std::vector<Rat> gamma_inf;
};

/// Compositions of total_ram_weight into n+1 parts whose quasi-degrees
/// beta_j + d_j are pairwise distinct, in lexicographic order.
std::vector<DegreeCandidate> enumerate_degree_vectors(const PrescribedData& d);

/// binom(A + n + 1, n)
mpz_class degree_vector_bound(long total_weight, int n);

}  // namespace toric
