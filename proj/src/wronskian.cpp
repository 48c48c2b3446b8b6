#include "toric/wronskian.hpp"

#include <algorithm>
#include <unordered_map>

namespace toric {

Curve::Curve(std::vector<TwistedFn> components)
    : Curve(std::move(components), {}) {}

Curve::Curve(std::vector<TwistedFn> components, std::vector<ModulusScale> scales)
    : components_(std::move(components)), scales_(std::move(scales)) {
  if (components_.size() < 2) throw Error(ErrorCode::InvalidInput, "a curve needs at least two components");
  if (scales_.empty()) scales_.assign(components_.size(), ModulusScale{});
  if (scales_.size() != components_.size())
    throw Error(ErrorCode::InvalidInput, "scale vector length does not match components");
  bool any = false;
  for (const auto& f : components_) {
    if (!(f.locus() == components_.front().locus()))
      throw Error(ErrorCode::InvalidInput, "curve components live on different loci");
    any = any || !f.is_zero();
  }
  if (!any) throw Error(ErrorCode::ZeroFunction, "all components of the curve vanish");
  for (const auto& s : scales_)
    if (s.factor.sign() <= 0) throw Error(ErrorCode::InvalidInput, "component scales must be positive");
}

Curve reduced(const Curve& c) {
  const BranchLocus& locus = c.locus();
  const std::size_t m = locus.size();
  std::vector<Rat> common(m);
  std::vector<bool> seen(m, false);
  PolyQ g;
  std::vector<std::vector<Rat>> orders(c.components().size());
  std::vector<PolyQ> stripped(c.components().size());

  for (std::size_t i = 0; i < c.components().size(); ++i) {
    const TwistedFn& f = c[i];
    if (f.is_zero()) continue;
    PolyQ nm = f.numer();
    for (std::size_t j = 0; j < m; ++j) {
      Rat ord = f.net_exponent(j);
      while (nm(locus[j]).is_zero()) {
        nm = nm.deflate(locus[j]);
        ord += Rat(1);
      }
      if (!seen[j] || ord < common[j]) common[j] = ord;
      seen[j] = true;
      orders[i].push_back(ord);
    }
    stripped[i] = nm;
    g = gcd(g, nm);
  }

  std::vector<TwistedFn> out;
  for (std::size_t i = 0; i < c.components().size(); ++i) {
    if (c[i].is_zero()) {
      out.push_back(c[i]);
      continue;
    }
    std::vector<Rat> exps(m);
    for (std::size_t j = 0; j < m; ++j) exps[j] = orders[i][j] - common[j];
    out.push_back(TwistedFn::from_exponents(locus, std::move(exps), stripped[i] / g));
  }
  return Curve(std::move(out), c.scales());
}

Rat pole_order_at_infinity(const Curve& c) {
  bool first = true;
  Rat lo;
  for (const auto& f : c.components()) {
    if (f.is_zero()) continue;
    const Rat o = tf_order_at(f, Infinity{});
    if (first || o < lo) lo = o;
    first = false;
  }
  return -lo;
}

std::vector<std::vector<int>> lex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = k;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j <= k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

unsigned mask_of(const std::vector<int>& s) {
  unsigned m = 0;
  for (int i : s) m |= 1u << i;
  return m;
}

}  // namespace

AssociatedTower associated_tower(const Curve& c) {
  AssociatedTower t;
  t.curve = c;
  const int n = c.n();
  t.derivs.push_back(c.components());
  for (int i = 1; i <= n; ++i) {
    std::vector<TwistedFn> row;
    for (const auto& f : t.derivs.back()) row.push_back(tf_derivative(f));
    t.derivs.push_back(std::move(row));
  }

  std::unordered_map<unsigned, std::size_t> prev_index;
  for (int k = 0; k <= n; ++k) {
    AssociatedCurve level;
    level.k = k;
    level.subsets = lex_subsets(n, k);
    std::unordered_map<unsigned, std::size_t> index;
    for (const auto& s : level.subsets) {
      index[mask_of(s)] = level.coords.size();
      if (k == 0) {
        level.coords.push_back(c[s[0]]);
        continue;
      }
      TwistedFn acc = TwistedFn::zero(c.locus());
      const unsigned full = mask_of(s);
      for (int pos = 0; pos <= k; ++pos) {
        const TwistedFn& minor = t.levels.back().coords[prev_index.at(full & ~(1u << s[pos]))];
        if (minor.is_zero()) continue;
        TwistedFn term = t.derivs[k][s[pos]] * minor;
        acc = ((k + pos) % 2 == 0) ? acc + term : acc - term;
      }
      level.coords.push_back(std::move(acc));
    }
    prev_index = std::move(index);
    t.levels.push_back(std::move(level));
  }
  return t;
}

AssociatedCurve associated_curve(const Curve& c, int k) {
  if (k < 0 || k > c.n()) throw Error(ErrorCode::InvalidInput, "associated curve level out of range");
  return associated_tower(c).levels[static_cast<std::size_t>(k)];
}

bool nondegenerate(const AssociatedTower& t) { return !t.wronskian().is_zero(); }

bool nondegenerate(const Curve& c) { return nondegenerate(associated_tower(c)); }

Rat lambda_order_at(const AssociatedTower& t, int k, const Point& p) {
  if (!nondegenerate(t)) throw Error(ErrorCode::DegenerateCurve, "Lambda_n vanishes identically");
  if (k < 0 || k >= static_cast<int>(t.levels.size()))
    throw Error(ErrorCode::InvalidInput, "associated curve level out of range");
  bool first = true;
  Rat lo;
  for (const auto& f : t.levels[k].coords) {
    if (f.is_zero()) continue;
    const Rat o = tf_order_at(f, p);
    if (first || o < lo) lo = o;
    first = false;
  }
  if (is_infinity(p)) lo -= Rat(static_cast<long>(k) * (k + 1));
  return lo;
}

Rat lambda_order_at(const Curve& c, int k, const Point& p) {
  return lambda_order_at(associated_tower(c), k, p);
}

std::vector<RamificationPoint> ramification_locus(const AssociatedTower& t) {
  if (!nondegenerate(t)) throw Error(ErrorCode::DegenerateCurve, "Lambda_n vanishes identically");
  const BranchLocus& locus = t.curve.locus();
  PolyQ w = t.wronskian().numer();
  for (const auto& p : locus.points())
    while (w(p).is_zero()) w = w.deflate(p);

  std::vector<RamificationPoint> out;
  const auto factors = squarefree_decomposition(w);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    const int mult = static_cast<int>(i) + 1;
    RootSet roots = squarefree_roots(factors[i]);
    for (auto& r : roots.exact) out.push_back({r, mult});
    for (auto& r : roots.numeric) {
      for (const auto& p : locus.points())
        if (std::abs(p.to_complex() - r.value) < 1e-9)
          throw Error(ErrorCode::IllConditionedRoot, "ramification root within 1e-9 of locus point " + p.str());
      out.push_back({std::move(r), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RamificationPoint& a, const RamificationPoint& b) { return point_less(a.point, b.point); });
  return out;
}

std::vector<RamificationPoint> ramification_locus(const Curve& c) {
  return ramification_locus(associated_tower(c));
}

Curve recombine(const Curve& c, const MatrixXg& a) {
  const int size = c.n() + 1;
  if (a.rows() != size || a.cols() != size) throw Error(ErrorCode::InvalidInput, "recombination matrix has wrong shape");
  std::vector<TwistedFn> out;
  for (int i = 0; i < size; ++i) {
    TwistedFn acc = TwistedFn::zero(c.locus());
    for (int j = 0; j < size; ++j)
      if (!a(i, j).is_zero()) acc = acc + a(i, j) * c[j];
    out.push_back(std::move(acc));
  }
  return Curve(std::move(out));
}

Curve tf_invert_coordinate(const Curve& c) {
  const BranchLocus target = inverted_locus(c.locus());
  std::vector<TwistedFn> comps;
  std::vector<ModulusScale> scales = c.scales();
  for (std::size_t i = 0; i < c.components().size(); ++i) {
    InvertedFn inv = invert_component(c[i], target);
    comps.push_back(std::move(inv.fn));
    scales[i] *= ModulusScale{Rat(1), std::move(inv.dropped_modulus)};
  }
  return Curve(std::move(comps), std::move(scales));
}

}  // namespace toric
