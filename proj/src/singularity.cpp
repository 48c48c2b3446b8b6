#include "toric/singularity.hpp"

#include <algorithm>

namespace toric {

std::string to_string(SingularityKind k) {
  switch (k) {
    case SingularityKind::Branch: return "branch";
    case SingularityKind::Ramification: return "ramification";
    case SingularityKind::Unramified: return "unramified";
  }
  return "unramified";
}

SingularityKind kind_from_string(const std::string& s) {
  if (s == "branch") return SingularityKind::Branch;
  if (s == "ramification") return SingularityKind::Ramification;
  if (s == "unramified") return SingularityKind::Unramified;
  throw Error(ErrorCode::InvalidInput, "unknown singularity kind '" + s + "'");
}

SingularityKind classify_gammas(const std::vector<Rat>& gamma) {
  bool all_zero = true;
  for (const auto& g : gamma) {
    if (!g.is_integer()) return SingularityKind::Branch;
    all_zero = all_zero && g.is_zero();
  }
  return all_zero ? SingularityKind::Unramified : SingularityKind::Ramification;
}

namespace {

SingularityDatum finish(const Point& p, std::vector<Rat> b) {
  SingularityDatum d;
  d.point = p;
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!(b[j - 1] < b[j]))
      throw Error(ErrorCode::NonIncreasingExponents,
                  "exponents at " + point_str(p) + " are not strictly increasing (" + b[j - 1].str() + ", " +
                      b[j].str() + ")");
    d.gamma.push_back(b[j] - b[j - 1] - Rat(1));
  }
  d.b = std::move(b);
  d.kind = classify_gammas(d.gamma);
  return d;
}

}  // namespace

SingularityDatum datum_from_orders(const Point& p, const std::vector<Rat>& orders) {
  std::vector<Rat> b;
  for (std::size_t k = 0; k < orders.size(); ++k)
    b.push_back(k == 0 ? orders[0] : orders[k] - orders[k - 1] + Rat(static_cast<long>(k)));
  return finish(p, std::move(b));
}

SingularityDatum datum_from_exponents(const Point& p, std::vector<Rat> exponents) {
  std::sort(exponents.begin(), exponents.end());
  return finish(p, std::move(exponents));
}

SingularityDatum classify_at(const AssociatedTower& t, const Point& p) {
  if (is_infinity(p)) return classify_at_infinity(t.curve);
  if (!nondegenerate(t)) throw Error(ErrorCode::DegenerateCurve, "Lambda_n vanishes identically");
  std::vector<Rat> orders;
  for (int k = 0; k <= t.curve.n(); ++k) orders.push_back(lambda_order_at(t, k, p));
  return datum_from_orders(p, orders);
}

SingularityDatum classify_at(const Curve& c, const Point& p) {
  if (is_infinity(p)) return classify_at_infinity(c);
  return classify_at(associated_tower(c), p);
}

SingularityDatum classify_at_infinity(const Curve& c) {
  SingularityDatum d = classify_at(associated_tower(tf_invert_coordinate(c)), Point{GaussRat(0)});
  d.point = Infinity{};
  return d;
}

std::vector<SingularityDatum> classify_all(const Curve& c) {
  const AssociatedTower t = associated_tower(c);
  if (!nondegenerate(t)) throw Error(ErrorCode::DegenerateCurve, "Lambda_n vanishes identically");
  std::vector<Point> candidates;
  for (const auto& p : c.locus().points()) candidates.emplace_back(p);
  for (auto& r : ramification_locus(t)) candidates.push_back(std::move(r.point));

  std::vector<SingularityDatum> out;
  for (const auto& p : candidates) {
    SingularityDatum d = classify_at(t, p);
    if (d.kind != SingularityKind::Unramified) out.push_back(std::move(d));
  }
  SingularityDatum inf = classify_at_infinity(c);
  if (inf.kind != SingularityKind::Unramified) out.push_back(std::move(inf));
  std::stable_sort(out.begin(), out.end(),
                   [](const SingularityDatum& a, const SingularityDatum& b) { return point_less(a.point, b.point); });
  return out;
}

bool branch_test_residue(const Ensemble& e, const GaussRat& p) {
  bool pole = false;
  bool branch = false;
  for (const auto& f : e.forms) {
    if (!f.has_pole(p)) continue;
    pole = true;
    branch = branch || !f.residue_at(p).is_integer();
  }
  if (!pole) throw Error(ErrorCode::NotAPole, p.str() + " is not a pole of any form");
  return branch;
}

bool ensemble_zero_is_ramification(const Ensemble& e, const GaussRat& q) {
  for (const auto& f : e.forms)
    if (f.has_pole(q)) throw Error(ErrorCode::InvalidInput, q.str() + " is a pole of a component form");
  for (const auto& f : e.forms)
    if (!f.is_zero() && f.vanishing_order(q) == 0) return false;
  return true;
}

namespace {

void require_pure_power(const TwistedFn& f) {
  const BranchLocus& locus = f.locus();
  for (std::size_t j = 0; j < locus.size(); ++j)
    if (!locus[j].is_zero() && !f.net_exponent(j).is_zero())
      throw Error(ErrorCode::NotPurePowerForm, "component is twisted or singular at " + locus[j].str());
}

Rat exponent_at_zero(const TwistedFn& f) {
  const int idx = f.locus().index_of(GaussRat(0));
  const Rat e = idx < 0 ? Rat(0) : f.net_exponent(static_cast<std::size_t>(idx));
  return e + Rat(f.numer().low_order());
}

}  // namespace

Rat quasi_degree(const TwistedFn& f) {
  require_pure_power(f);
  const int idx = f.locus().index_of(GaussRat(0));
  const Rat e = idx < 0 ? Rat(0) : f.net_exponent(static_cast<std::size_t>(idx));
  return e + Rat(f.numer().degree());
}

QuasiDegreeForm normalize_quasi_degrees(const Curve& c) {
  const int size = c.n() + 1;
  std::vector<TwistedFn> comps = c.components();
  for (const auto& f : comps) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateCurve, "a component vanishes identically");
    require_pure_power(f);
  }
  MatrixXg T = MatrixXg::Identity(size, size);

  for (;;) {
    std::vector<Rat> q;
    for (const auto& f : comps) q.push_back(quasi_degree(f));
    // Highest quasi-degree shared by two or more components.
    bool found = false;
    Rat top;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (q[i] == q[j] && (!found || top < q[i])) {
          top = q[i];
          found = true;
        }
    if (!found) {
      QuasiDegreeForm out{Curve(std::move(comps)), std::move(T), std::move(q)};
      return out;
    }
    std::vector<int> tied;
    for (int i = 0; i < size; ++i)
      if (q[i] == top) tied.push_back(i);
    int pivot = tied.front();
    for (int i : tied)
      if (!(exponent_at_zero(comps[i]) < exponent_at_zero(comps[pivot]))) pivot = i;
    for (int i : tied) {
      if (i == pivot) continue;
      const GaussRat ratio = comps[i].numer().lead() / comps[pivot].numer().lead();
      comps[i] = comps[i] - ratio * comps[pivot];
      if (comps[i].is_zero())
        throw Error(ErrorCode::DegenerateCurve, "components are linearly dependent over the constants");
      for (int col = 0; col < size; ++col) T(i, col) -= ratio * T(pivot, col);
    }
  }
}

SingularityDatum infinity_from_quasi_degrees(const std::vector<Rat>& quasi_degrees) {
  std::vector<Rat> exps;
  for (const auto& q : quasi_degrees) exps.push_back(-q);
  return datum_from_exponents(Infinity{}, std::move(exps));
}

}  // namespace toric
