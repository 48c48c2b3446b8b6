#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<Rat> zeros(int n) { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)); }

Curve random_curve(Gen& g) {
  return g.coin() ? construct_curve(random_prescribed(g, 3, 2, 2)).curve
                  : ensemble_curve_representative(random_ensemble(g, static_cast<int>(g.integer(1, 3)), 3));
}

/// -4 dz/z + (1/2) dz/(z-1) + (9/2) dz/(z+1) = (z-2)^2 / (z (z^2 - 1)) dz
OneForm double_zero_form() {
  return OneForm::from_poles({{G(0), R(-4)}, {G(1), R(1, 2)}, {G(-1), R(9, 2)}});
}

}  // namespace

TEST_SUITE("singularity") {

TEST_CASE("classify_at examples") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<PolyQ> ps;
    for (int k = 0; k < n; ++k) ps.push_back(PolyQ::monomial(G(1), k));
    ps.push_back(PolyQ::monomial(G(1), n + 1));
    const SingularityDatum d = classify_at(poly_curve(ps), G(0));
    std::vector<Rat> expected = zeros(n);
    expected.back() = Rat(1);
    CHECK(d.gamma == expected);
    CHECK(d.kind == SingularityKind::Ramification);
  }

  const SingularityDatum half = classify_at(power_curve({R(0), R(1, 2)}), G(0));
  CHECK(half.b == std::vector<Rat>{R(0), R(1, 2)});
  CHECK(half.gamma == std::vector<Rat>{R(-1, 2)});
  CHECK(half.kind == SingularityKind::Branch);

  const Curve rnc = poly_curve({P({1}), P({0, 1}), P({0, 0, 1})});
  for (const GaussRat& p : {G(0), G(3), GaussRat(Rat(1, 2), Rat(-7))}) {
    const SingularityDatum d = classify_at(rnc, p);
    CHECK(d.gamma == zeros(2));
    CHECK(d.kind == SingularityKind::Unramified);
  }
}

TEST_CASE("classify_at_infinity examples") {
  const SingularityDatum line = classify_at_infinity(poly_curve({P({1}), P({0, 1})}));
  CHECK(is_infinity(line.point));
  CHECK(line.gamma == std::vector<Rat>{R(0)});

  const SingularityDatum half = classify_at_infinity(power_curve({R(0), R(1, 2)}));
  CHECK(half.b == std::vector<Rat>{R(-1, 2), R(0)});
  CHECK(half.gamma == std::vector<Rat>{R(-1, 2)});
  CHECK(half.kind == SingularityKind::Branch);
}

TEST_CASE("classify_all examples") {
  const auto cubic = classify_all(poly_curve({P({1}), P({0, 1}), P({0, 0, 0, 1})}));
  REQUIRE(cubic.size() == 2);
  CHECK(point_equal(cubic[0].point, G(0)));
  CHECK(cubic[0].gamma == std::vector<Rat>{R(0), R(1)});
  CHECK(is_infinity(cubic[1].point));
  CHECK(cubic[1].b == std::vector<Rat>{R(-3), R(-1), R(0)});
  CHECK(cubic[1].gamma == std::vector<Rat>{R(1), R(0)});

  CHECK(classify_all(poly_curve({P({1}), P({0, 1}), P({0, 0, 1})})).empty());

  const Ensemble e = make_ensemble({OneForm::from_poles({{G(0), R(1, 2)}})});
  const auto half = classify_all(ensemble_to_curve(e, {R(1)}, G(1)));
  REQUIRE(half.size() == 2);
  CHECK(point_equal(half[0].point, G(0)));
  CHECK(is_infinity(half[1].point));
  for (const auto& d : half) CHECK(d.kind == SingularityKind::Branch);
}

TEST_CASE("datum helpers") {
  const SingularityDatum d = datum_from_exponents(G(0), {R(3), R(0), R(1)});
  CHECK(d.b == std::vector<Rat>{R(0), R(1), R(3)});
  CHECK(d.gamma == std::vector<Rat>{R(0), R(1)});
  try {
    (void)datum_from_orders(G(0), {R(0), R(-1)});
    FAIL("expected NonIncreasingExponents");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIncreasingExponents);
  }
  CHECK(classify_gammas({R(0), R(0)}) == SingularityKind::Unramified);
  CHECK(classify_gammas({R(2), R(0)}) == SingularityKind::Ramification);
  CHECK(classify_gammas({R(2), R(1, 3)}) == SingularityKind::Branch);
  CHECK(kind_from_string(to_string(SingularityKind::Branch)) == SingularityKind::Branch);
}

TEST_CASE("branch_test_residue examples") {
  const Ensemble half = make_ensemble({OneForm::from_poles({{G(0), R(1, 2)}})});
  CHECK(branch_test_residue(half, G(0)));
  const Ensemble three = make_ensemble({OneForm::from_poles({{G(0), R(3)}})});
  CHECK_FALSE(branch_test_residue(three, G(0)));

  const Ensemble two = make_ensemble({OneForm::from_poles({{G(0), R(1)}}), OneForm::from_poles({{G(0), R(2)}})});
  CHECK_FALSE(branch_test_residue(two, G(0)));
  const SingularityDatum d = classify_at(ensemble_curve_representative(two), G(0));
  CHECK(d.kind == SingularityKind::Unramified);

  try {
    (void)branch_test_residue(half, G(5));
    FAIL("expected NotAPole");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPole);
  }
}

TEST_CASE("ensemble_zero_is_ramification examples") {
  // 1/z + 1/(z-2) and 2/(z+1) + 3/(z-4) both vanish simply at z = 1
  const Ensemble e = make_ensemble({OneForm::from_poles({{G(0), R(1)}, {G(2), R(1)}}),
                                    OneForm::from_poles({{G(-1), R(2)}, {G(4), R(3)}})});
  REQUIRE(is_character_ensemble(e));
  CHECK(ensemble_zero_is_ramification(e, G(1)));
  const SingularityDatum d = classify_at(ensemble_curve_representative(e), G(1));
  CHECK(d.kind == SingularityKind::Ramification);
  CHECK(d.gamma.front() == R(1));

  CHECK_FALSE(ensemble_zero_is_ramification(e, G(5)));
  CHECK_THROWS_AS(ensemble_zero_is_ramification(e, G(0)), Error);

  const OneForm base = double_zero_form();
  CHECK(base.vanishing_order(G(2)) == 2);
  const Ensemble scaled = scaled_ensemble(base, {R(1), R(2), R(-3)});
  CHECK(ensemble_zero_is_ramification(scaled, G(2)));
  CHECK(classify_at(ensemble_curve_representative(scaled), G(2)).gamma == std::vector<Rat>{R(2), R(2), R(2)});
}

TEST_CASE("normalize_quasi_degrees examples") {
  const QuasiDegreeForm a = normalize_quasi_degrees(poly_curve({P({1}), P({1, 1})}));
  CHECK(a.T == MatrixXg::Identity(2, 2));
  CHECK(a.quasi_degrees == std::vector<Rat>{R(0), R(1)});

  const Curve bc = poly_curve({P({1, 1}), P({0, 1})});
  const QuasiDegreeForm b = normalize_quasi_degrees(bc);
  CHECK(b.curve[0] == TwistedFn::constant(bc.locus(), G(1)));
  CHECK(b.curve[1] == bc[1]);
  CHECK(b.quasi_degrees == std::vector<Rat>{R(0), R(1)});
  CHECK(recombine(bc, b.T).components() == b.curve.components());

  const BranchLocus l = L({G(0)});
  const Curve cc({F(l, {R(1, 2)}, P({1, 1})), F(l, {R(3, 2)}, P({1}))});
  const QuasiDegreeForm c = normalize_quasi_degrees(cc);
  CHECK(c.curve[0] == F(l, {R(1, 2)}, P({1})));
  CHECK(c.curve[1] == cc[1]);
  CHECK(c.quasi_degrees == std::vector<Rat>{R(1, 2), R(3, 2)});

  const BranchLocus two = L({G(0), G(1)});
  const Curve bad({F(two, {R(0), R(1, 2)}, P({1})), TwistedFn::constant(two, G(1))});
  try {
    (void)normalize_quasi_degrees(bad);
    FAIL("expected NotPurePowerForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPurePowerForm);
  }
}

TEST_CASE("property: order sums reproduce lambda orders") {
  Gen g(2101);
  for (int it = 0; it < 20; ++it) {
    const Curve c = random_curve(g);
    const AssociatedTower t = associated_tower(c);
    std::vector<Point> pts{Infinity{}};
    for (const auto& p : c.locus().points()) pts.emplace_back(p);
    for (const auto& r : ramification_locus(t)) pts.push_back(r.point);
    for (const auto& p : pts) {
      const SingularityDatum d = classify_at(t, p);
      Rat sum(0);
      for (int k = 0; k <= c.n(); ++k) {
        sum += d.b[k];
        CHECK(sum - Rat(k * (k + 1) / 2) == lambda_order_at(t, k, p));
      }
      for (std::size_t j = 0; j < d.gamma.size(); ++j) {
        CHECK(d.gamma[j] == d.b[j + 1] - d.b[j] - Rat(1));
        CHECK(Rat(-1) < d.gamma[j]);
      }
    }
  }
}

TEST_CASE("property: Pluecker degree balance over all singular points") {
  Gen g(2202);
  for (int it = 0; it < 20; ++it) {
    const Curve c = random_curve(g);
    const int n = c.n();
    Rat weighted(0);
    for (const auto& d : classify_all(c))
      for (int j = 1; j <= n; ++j) weighted += Rat(n + 1 - j) * d.gamma[j - 1];
    const Rat degree = pole_order_at_infinity(reduced(c));
    CHECK(weighted == Rat(n + 1) * (degree - Rat(n)));
  }
}

TEST_CASE("property: residue criterion agrees with the classifier at poles") {
  Gen g(2303);
  for (int it = 0; it < 25; ++it) {
    const Ensemble e = random_ensemble(g, static_cast<int>(g.integer(1, 3)), 4);
    const AssociatedTower t = associated_tower(ensemble_curve_representative(e));
    const BranchLocus locus = ensemble_locus(e);
    for (const auto& p : locus.points())
      CHECK(branch_test_residue(e, p) == (classify_at(t, p).kind == SingularityKind::Branch));
  }
}

TEST_CASE("property: infinity via quasi-degrees matches infinity via inversion") {
  Gen g(2404);
  for (int it = 0; it < 20; ++it) {
    const Curve c = construct_curve(random_prescribed(g, 3, 3, 3)).curve;
    const SingularityDatum direct = infinity_from_quasi_degrees(normalize_quasi_degrees(c).quasi_degrees);
    const SingularityDatum inverted = classify_at_infinity(c);
    CHECK(direct.b == inverted.b);
    CHECK(direct.gamma == inverted.gamma);
    CHECK(direct.kind == inverted.kind);
  }
}

TEST_CASE("property: classification is invariant under twist-class recombination") {
  Gen g(2505);
  for (int it = 0; it < 20; ++it) {
    const Curve c = random_curve(g);
    const Curve mixed = recombine(c, random_class_matrix(c, g));
    const auto a = classify_all(c);
    const auto b = classify_all(mixed);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(same_point(a[i].point, b[i].point));
      CHECK(a[i].b == b[i].b);
      CHECK(a[i].gamma == b[i].gamma);
    }
  }
}

}  // TEST_SUITE
