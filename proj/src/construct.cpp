#include "toric/construct.hpp"

#include <functional>

namespace toric {

void PrescribedData::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "n must be at least 1");
  if (static_cast<int>(gamma0.size()) != n)
    throw Error(ErrorCode::InvalidInput, "gamma0 must have n = " + std::to_string(n) + " entries");
  for (int j = 0; j < n; ++j)
    if (!(Rat(-1) < gamma0[j]))
      throw Error(ErrorCode::GammaOutOfRange,
                  "gamma0[" + std::to_string(j + 1) + "] = " + gamma0[j].str() + " is not > -1");
  if (ram.size() != points.size()) throw Error(ErrorCode::InvalidInput, "ram must have one row per point");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].is_zero()) throw Error(ErrorCode::InvalidInput, "prescribed points must be nonzero");
    for (std::size_t k = 0; k < i; ++k)
      if (points[k] == points[i]) throw Error(ErrorCode::InvalidInput, "duplicate point " + points[i].str());
    if (static_cast<int>(ram[i].size()) != n)
      throw Error(ErrorCode::InvalidInput, "ram row " + std::to_string(i + 1) + " must have n entries");
    for (std::size_t j = 0; j < ram[i].size(); ++j)
      if (ram[i][j] < 0)
        throw Error(ErrorCode::GammaOutOfRange, "ram[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                                    "] = " + std::to_string(ram[i][j]) + " is negative");
  }
}

std::vector<Rat> betas_from_gammas(const std::vector<Rat>& gamma0) {
  std::vector<Rat> beta{Rat(0)};
  for (std::size_t j = 0; j < gamma0.size(); ++j) {
    if (!(Rat(-1) < gamma0[j]))
      throw Error(ErrorCode::GammaOutOfRange,
                  "gamma[" + std::to_string(j + 1) + "] = " + gamma0[j].str() + " is not > -1");
    beta.push_back(beta.back() + Rat(1) + gamma0[j]);
  }
  return beta;
}

std::vector<long> ConstructedCurve::degree_vector() const {
  std::vector<long> out;
  for (const auto& p : phis) out.push_back(p.degree());
  return out;
}

ConstructedCurve construct_curve(const PrescribedData& d) {
  d.validate();
  const int n = d.n;
  ConstructedCurve out;
  out.betas = betas_from_gammas(d.gamma0);
  const auto& beta = out.betas;

  // prod_i (z - z_i)^{gamma_{i,k}} for k = 1..n
  std::vector<PolyQ> pi(static_cast<std::size_t>(n) + 1, PolyQ::constant(GaussRat(1)));
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < d.m(); ++i)
      pi[k] = pi[k] * PolyQ::linear_root(d.points[i]).pow(static_cast<int>(d.ram[i][k - 1]));

  // level[j] holds phi_j^{(k)} for j >= k.
  std::vector<PolyQ> level(static_cast<std::size_t>(n) + 1);
  level[n] = PolyQ::constant(GaussRat(1));
  for (int k = n; k >= 1; --k) {
    std::vector<PolyQ> next(static_cast<std::size_t>(n) + 1);
    next[k - 1] = PolyQ::constant(GaussRat(1));
    for (int j = k; j <= n; ++j) next[j] = solve_euler_ode(beta[j] - beta[k - 1], pi[k] * level[j]);
    level = std::move(next);
  }

  const BranchLocus locus(std::vector<GaussRat>{GaussRat(0)});
  std::vector<TwistedFn> comps;
  for (int j = 0; j <= n; ++j) comps.push_back(TwistedFn::from_exponents(locus, {beta[j]}, level[j]));
  out.phis = level;
  out.curve = Curve(std::move(comps));
  return out;
}

long total_ram_weight(const PrescribedData& d) {
  long a = 0;
  for (const auto& row : d.ram)
    for (std::size_t j = 0; j < row.size(); ++j) a += static_cast<long>(d.n - j) * row[j];
  return a;
}

std::vector<Rat> infinity_data_closed_form(const PrescribedData& d) {
  d.validate();
  const auto beta = betas_from_gammas(d.gamma0);
  std::vector<Rat> out;
  for (int i = 1; i <= d.n; ++i) {
    const int j = d.n + 1 - i;
    Rat g = beta[j] - beta[j - 1] - Rat(1);
    for (const auto& row : d.ram) g += Rat(row[j - 1]);
    out.push_back(g);
  }
  return out;
}

std::vector<DegreeCandidate> enumerate_degree_vectors(const PrescribedData& d) {
  d.validate();
  const auto beta = betas_from_gammas(d.gamma0);
  const long total = total_ram_weight(d);
  const int parts = d.n + 1;
  std::vector<DegreeCandidate> out;
  std::vector<long> cur(static_cast<std::size_t>(parts), 0);

  std::function<void(int, long)> rec = [&](int idx, long left) {
    if (idx == parts - 1) {
      cur[idx] = left;
      std::vector<Rat> q;
      for (int j = 0; j < parts; ++j) q.push_back(beta[j] + Rat(cur[j]));
      for (int i = 0; i < parts; ++i)
        for (int j = i + 1; j < parts; ++j)
          if (q[i] == q[j]) return;
      out.push_back({cur, infinity_from_quasi_degrees(q).gamma});
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

mpz_class degree_vector_bound(long total_weight, int n) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(total_weight + n + 1), static_cast<unsigned long>(n));
  return r;
}

}  // namespace toric
