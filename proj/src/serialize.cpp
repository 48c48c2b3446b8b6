#include "toric/serialize.hpp"

namespace toric {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) bad(std::string("field '") + key + "' must be an array");
  return a;
}

long int_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

json to_json(const GaussRat& g) { return json{{"re", g.re().str()}, {"im", g.im().str()}}; }

json to_json(const PolyQ& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const Point& p) {
  if (const auto* g = std::get_if<GaussRat>(&p)) return to_json(*g);
  if (const auto* r = std::get_if<NumericRoot>(&p))
    return json{{"approx", {{"re", r->value.real()}, {"im", r->value.imag()}}},
                {"factor", to_json(r->factor)},
                {"residual", r->residual}};
  return "infinity";
}

json to_json(const TwistedFn& f) {
  json locus = json::array();
  for (const auto& p : f.locus().points()) locus.push_back(to_json(p));
  return json{{"locus", locus}, {"twist", to_json(f.twist())}, {"numer", to_json(f.numer())},
              {"denomExp", f.denom_exp()}};
}

json to_json(const ModulusScale& s) {
  json moduli = json::array();
  for (const auto& [base, e] : s.moduli.factors) moduli.push_back(json{{"base", to_json(base)}, {"exp", to_json(e)}});
  return json{{"factor", to_json(s.factor)}, {"moduli", moduli}, {"value", s.value()}};
}

json to_json(const Curve& c) {
  json out{{"n", c.n()}, {"components", to_json(c.components())}};
  bool trivial = true;
  for (const auto& s : c.scales()) trivial = trivial && s.factor == Rat(1) && s.moduli.empty();
  if (!trivial) out["scales"] = to_json(c.scales());
  return out;
}

json to_json(const PrescribedData& d) {
  return json{{"n", d.n}, {"gamma0", to_json(d.gamma0)}, {"points", to_json(d.points)}, {"ram", d.ram}};
}

json to_json(const OneForm& f) {
  json out = json::array();
  for (const auto& t : f.terms()) {
    if (t.locator.degree() == 1)
      out.push_back(json{{"pole", to_json(-t.locator.coeff(0))}, {"residue", to_json(t.residue)}});
    else
      out.push_back(json{{"locator", to_json(t.locator)}, {"residue", to_json(t.residue)}});
  }
  return out;
}

json to_json(const Ensemble& e) { return json{{"n", e.n}, {"forms", to_json(e.forms)}}; }

json to_json(const SingularityDatum& d) {
  return json{{"point", to_json(d.point)}, {"b", to_json(d.b)}, {"gamma", to_json(d.gamma)}, {"kind", to_string(d.kind)}};
}

json to_json(const RhoVector& r) {
  json rho = json::array();
  for (std::size_t i = 0; i < r.over_pi.size(); ++i)
    rho.push_back(json{{"over_pi", to_json(r.over_pi[i])}, {"value", r.over_pi[i].to_double() * 3.14159265358979323846},
                       {"in_4pi_N", static_cast<bool>(r.in_4pi_n[i])}});
  return rho;
}

json to_json(const DegreeCandidate& d) { return json{{"degrees", d.degrees}, {"gamma_inf", to_json(d.gamma_inf)}}; }

json to_json(const GridSpec& g) {
  return json{{"re", {g.re_min, g.re_max}}, {"im", {g.im_min, g.im_max}}, {"nx", g.nx}, {"ny", g.ny},
              {"h", g.h}, {"safety", g.safety_radius()}};
}

json summary_json(const PDEReport& r) {
  return json{{"n", r.n},           {"h", r.h},
              {"safety", r.safety}, {"evaluated", r.evaluated},
              {"excluded", r.excluded}, {"max_abs_residual", r.max_abs},
              {"rms_residual", r.rms},  {"max_eu", r.max_eu},
              {"max_relative_residual", r.max_relative}};
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) bad("rational must be a string \"p/q\" or an integer, got " + j.dump());
  return Rat::parse(j.get<std::string>());
}

GaussRat gauss_from_json(const json& j) {
  if (j.is_object()) {
    const Rat re = rat_from_json(field(j, "re"));
    const Rat im = j.contains("im") ? rat_from_json(j.at("im")) : Rat(0);
    return GaussRat(re, im);
  }
  return GaussRat(rat_from_json(j));
}

PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<GaussRat> c;
  for (const auto& x : j) c.push_back(gauss_from_json(x));
  return PolyQ(std::move(c));
}

namespace {

BranchLocus locus_from_json(const json& j) {
  if (!j.is_array()) bad("locus must be an array");
  std::vector<GaussRat> pts;
  for (const auto& x : j) pts.push_back(gauss_from_json(x));
  return BranchLocus(std::move(pts));
}

TwistedFn twisted_on(const BranchLocus& locus, const json& j) {
  const json& tw = array_field(j, "twist");
  const json& de = array_field(j, "denomExp");
  if (tw.size() != locus.size() || de.size() != locus.size()) bad("twist and denomExp must match the locus length");
  std::vector<Rat> exps;
  for (std::size_t i = 0; i < locus.size(); ++i) {
    const long k = int_from_json(de[i], "denomExp entry");
    if (k < 0) bad("denomExp entries must be non-negative");
    exps.push_back(rat_from_json(tw[i]) - Rat(k));
  }
  return TwistedFn::from_exponents(locus, std::move(exps), poly_from_json(field(j, "numer")));
}

}  // namespace

TwistedFn twisted_from_json(const json& j) { return twisted_on(locus_from_json(array_field(j, "locus")), j); }

Curve curve_from_json(const json& j) {
  const json& comps = array_field(j, "components");
  if (comps.size() < 2) bad("a curve needs at least two components");
  const BranchLocus locus = locus_from_json(array_field(comps[0], "locus"));
  std::vector<TwistedFn> fs;
  for (const auto& c : comps) {
    if (!(locus_from_json(array_field(c, "locus")) == locus)) bad("curve components must share one locus");
    fs.push_back(twisted_on(locus, c));
  }
  if (j.contains("n") && int_from_json(j.at("n"), "n") + 1 != static_cast<long>(fs.size()))
    bad("n does not match the number of components");
  std::vector<ModulusScale> scales;
  if (j.contains("scales")) {
    for (const auto& s : j.at("scales")) {
      ModulusScale ms;
      ms.factor = rat_from_json(field(s, "factor"));
      if (s.contains("moduli"))
        for (const auto& m : s.at("moduli"))
          ms.moduli.factors.emplace_back(gauss_from_json(field(m, "base")), rat_from_json(field(m, "exp")));
      scales.push_back(std::move(ms));
    }
  }
  return Curve(std::move(fs), std::move(scales));
}

PrescribedData prescribed_from_json(const json& j) {
  PrescribedData d;
  d.n = static_cast<int>(int_from_json(field(j, "n"), "n"));
  for (const auto& g : array_field(j, "gamma0")) d.gamma0.push_back(rat_from_json(g));
  if (j.contains("points"))
    for (const auto& p : j.at("points")) d.points.push_back(gauss_from_json(p));
  if (j.contains("ram")) {
    for (const auto& row : j.at("ram")) {
      if (!row.is_array()) bad("ram rows must be arrays");
      std::vector<long> r;
      for (const auto& x : row) r.push_back(int_from_json(x, "ram entry"));
      d.ram.push_back(std::move(r));
    }
  }
  d.validate();
  return d;
}

OneForm form_from_json(const json& j) {
  if (!j.is_array()) bad("a form must be an array of poles");
  std::vector<std::pair<GaussRat, Rat>> poles;
  std::vector<FormTerm> clusters;
  for (const auto& t : j) {
    const Rat res = rat_from_json(field(t, "residue"));
    if (res.is_zero()) bad("pole residues must be nonzero");
    if (t.contains("pole")) {
      const GaussRat p = gauss_from_json(t.at("pole"));
      for (const auto& q : poles)
        if (q.first == p) bad("duplicate pole " + p.str());
      poles.emplace_back(p, res);
    } else {
      clusters.push_back({poly_from_json(field(t, "locator")), res});
    }
  }
  std::vector<FormTerm> terms = OneForm::from_poles(poles).terms();
  terms.insert(terms.end(), clusters.begin(), clusters.end());
  return OneForm(std::move(terms));
}

Ensemble ensemble_from_json(const json& j) {
  const long n = int_from_json(field(j, "n"), "n");
  const json& forms = array_field(j, "forms");
  if (n < 1 || static_cast<long>(forms.size()) != n) bad("forms must contain exactly n forms");
  std::vector<OneForm> fs;
  for (const auto& f : forms) fs.push_back(form_from_json(f));
  return make_ensemble(std::move(fs));
}

SingularityDatum datum_from_json(const json& j) {
  SingularityDatum d;
  const json& p = field(j, "point");
  if (p.is_string() && p.get<std::string>() == "infinity") {
    d.point = Infinity{};
  } else if (p.is_object() && p.contains("approx")) {
    NumericRoot r;
    r.value = {field(p.at("approx"), "re").get<double>(), field(p.at("approx"), "im").get<double>()};
    r.factor = poly_from_json(field(p, "factor"));
    r.residual = p.value("residual", 0.0);
    d.point = r;
  } else {
    d.point = gauss_from_json(p);
  }
  for (const auto& b : array_field(j, "b")) d.b.push_back(rat_from_json(b));
  for (const auto& g : array_field(j, "gamma")) d.gamma.push_back(rat_from_json(g));
  d.kind = kind_from_string(field(j, "kind").get<std::string>());
  return d;
}

GridSpec grid_from_json(const json& j) {
  GridSpec g;
  auto range = [&](const char* key, double& lo, double& hi) {
    if (!j.contains(key)) return;
    const json& r = j.at(key);
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      bad(std::string("grid field '") + key + "' must be [min, max]");
    lo = r[0].get<double>();
    hi = r[1].get<double>();
  };
  range("re", g.re_min, g.re_max);
  range("im", g.im_min, g.im_max);
  if (j.contains("nx")) g.nx = static_cast<int>(int_from_json(j.at("nx"), "nx"));
  if (j.contains("ny")) g.ny = static_cast<int>(int_from_json(j.at("ny"), "ny"));
  if (j.contains("h")) g.h = j.at("h").get<double>();
  if (j.contains("safety")) g.safety = j.at("safety").get<double>();
  g.validate();
  return g;
}

}  // namespace toric
