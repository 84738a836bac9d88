#include "ncgeo/suites.hpp"

#include "ncgeo/christoffel.hpp"
#include "ncgeo/errors.hpp"
#include "ncgeo/hopf.hpp"
#include "ncgeo/sampling.hpp"

namespace ncgeo {

namespace {

void check(SuiteReport& rep, const std::string& name, bool pass, const std::string& detail = "") {
  rep.checks.push_back({name, pass, detail});
}

std::vector<AlgebraElement> lc_samples(const PresentationPtr& pres, std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<AlgebraElement> out;
  for (int i = 1; i <= pres->rank(); ++i) out.push_back(AlgebraElement::generator(pres, i));
  for (int i = 0; i < count; ++i) out.push_back(s.random_monomial(pres, 2));
  return out;
}

}  // namespace

std::vector<DeformationParameter> builtin_deformation_parameters(const PresentationPtr& pres) {
  std::vector<DeformationParameter> out;
  auto add = [&](const std::string& label, const AlgebraElement& k,
                 std::optional<AlgebraElement> kinv) {
    out.push_back({label, k, std::move(kinv)});
  };
  switch (pres->backend()) {
    case Backend::NCTorus: {
      add("U1", AlgebraElement::generator(pres, 1), std::nullopt);
      add("U2", AlgebraElement::generator(pres, 2), std::nullopt);
      add("U1*U2", AlgebraElement::generator(pres, 1) * AlgebraElement::generator(pres, 2),
          std::nullopt);
      break;
    }
    case Backend::FreeGroup: {
      add("g1", AlgebraElement::generator(pres, 1), std::nullopt);
      add("g2", AlgebraElement::generator(pres, 2), std::nullopt);
      add("g1*g2", AlgebraElement::generator(pres, 1) * AlgebraElement::generator(pres, 2),
          std::nullopt);
      break;
    }
    case Backend::Cuntz: {
      add("2", AlgebraElement::from_rational(pres, Rat(2)), std::nullopt);
      // Self-inverse unitary S_1 S_2^* + S_2 S_1^* (+ diagonal rest for n > 2).
      AlgebraElement u = AlgebraElement::generator(pres, 1) *
                             AlgebraElement::generator_star(pres, 2) +
                         AlgebraElement::generator(pres, 2) * AlgebraElement::generator_star(pres, 1);
      for (int i = 3; i <= pres->rank(); ++i)
        u += AlgebraElement::generator(pres, i) * AlgebraElement::generator_star(pres, i);
      add("S1S2*+S2S1*", u, u);
      break;
    }
  }
  return out;
}

SuiteReport algebra_suite(const PresentationPtr& pres, std::uint64_t seed) {
  SuiteReport rep{"algebra", {}};
  Sampler s(seed);
  State tau = State::canonical(pres);
  int n = pres->rank();

  bool assoc = true;
  for (int t = 0; t < 200 && assoc; ++t) {
    AlgebraElement a = s.random_element(pres, 2, 2);
    AlgebraElement b = s.random_element(pres, 2, 2);
    AlgebraElement c = s.random_element(pres, 2, 2);
    assoc = ((a * b) * c == a * (b * c));
  }
  check(rep, "associativity_200", assoc);

  bool unital = true;
  AlgebraElement one = AlgebraElement::one(pres);
  for (int t = 0; t < 20 && unital; ++t) {
    AlgebraElement a = s.random_element(pres, 3, 2);
    unital = (a * one == a) && (one * a == a);
  }
  check(rep, "unital", unital);

  bool inv = true, leibniz = true, commuting = true, starred = true;
  for (int t = 0; t < 100 && (inv && leibniz && commuting && starred); ++t) {
    AlgebraElement a = s.random_element(pres, 2, 2);
    AlgebraElement b = s.random_element(pres, 2, 2);
    inv = (a.star().star() == a);
    int i = static_cast<int>(s.range(1, n));
    int j = static_cast<int>(s.range(1, n));
    leibniz = ((a * b).derive(i) == a.derive(i) * b + a * b.derive(i));
    commuting = (a.derive(i).derive(j) == a.derive(j).derive(i));
    starred = (a.star().derive(i) == -(a.derive(i).star()));
  }
  check(rep, "star_involution", inv);
  check(rep, "leibniz", leibniz);
  check(rep, "derivations_commute", commuting);
  check(rep, "star_derivation", starred);

  check(rep, "state_unital", tau(one).is_one());
  bool invstate = true;
  for (int t = 0; t < 100 && invstate; ++t) {
    AlgebraElement a = s.random_element(pres, 3, 2);
    for (int i = 1; i <= n && invstate; ++i) invstate = tau(a.derive(i)).is_zero();
  }
  check(rep, "state_kills_derivations", invstate);

  if (pres->backend() != Backend::Cuntz) {
    bool tracial = true;
    for (int t = 0; t < 100 && tracial; ++t) {
      AlgebraElement a = s.random_element(pres, 2, 2);
      AlgebraElement b = s.random_element(pres, 2, 2);
      tracial = (tau(a * b) == tau(b * a));
    }
    check(rep, "trace_property", tracial);
  } else {
    // KMS values on diagonal words.
    bool kms = true;
    Rat nn{pres->rank()};
    for (int t = 0; t < 50 && kms; ++t) {
      Word w = s.random_word(pres, 3);
      const auto& cw = std::get<CuntzWord>(w);
      CuntzWord diag{cw.mu, cw.mu};
      AlgebraElement a = AlgebraElement::monomial(pres, Word{diag}, Scalar::one());
      Rat expect(1);
      for (std::size_t i = 0; i < cw.mu.size(); ++i) expect /= nn;
      kms = (tau(a) == pres->scalar_from_rational(expect));
    }
    check(rep, "kms_diagonal_values", kms);
  }
  return rep;
}

SuiteReport levi_civita_suite(const Metric& g, std::uint64_t seed) {
  SuiteReport rep{"levi-civita", {}};
  const auto& pres = g.presentation();
  ChristoffelSymbols gamma = christoffel_canonical(g);
  LeviCivitaReport lc = verify_levi_civita(g, gamma, lc_samples(pres, seed, 50));
  bool torsion = true, compat = true, pig = true;
  for (const auto& c : lc.checks) {
    if (c.check == "torsion" && !c.pass) torsion = false;
    if (c.check == "compatibility" && !c.pass) compat = false;
    if (c.check == "pi_g_equals_d_g" && !c.pass) pig = false;
  }
  check(rep, "torsion_free", torsion);
  check(rep, "metric_compatibility", compat);
  check(rep, "pi_g_equals_d_compose_g", pig);

  check(rep, "general_formula_gamma0_zero_agrees",
        christoffel_general(g, ChristoffelSymbols(pres)) == gamma);
  if (g.derivation_closed()) {
    check(rep, "reduced_formula_agrees", christoffel_reduced(g) == gamma);
    bool comm = true;
    int n = g.rank();
    for (int a = 1; a <= n && comm; ++a)
      for (int b = 1; b <= n && comm; ++b)
        for (int c = 1; c <= n && comm; ++c)
          for (int d = 1; d <= n && comm; ++d)
            for (int e = 1; e <= n && comm; ++e)
              for (int f = 1; f <= n && comm; ++f)
                comm = commute_check(gamma.gamma(a, b, c), gamma.gamma(d, e, f));
    check(rep, "christoffel_entries_commute", comm);
  }
  if (g.conformal_factor()) {
    const auto& [k, kinv] = *g.conformal_factor();
    check(rep, "conformal_closed_form_agrees",
          christoffel_conformal(pres, k, kinv) == gamma);
  }
  return rep;
}

SuiteReport bianchi_suite(const Metric& g, std::uint64_t seed) {
  SuiteReport rep{"bianchi", {}};
  const auto& pres = g.presentation();
  ChristoffelSymbols gamma = christoffel_canonical(g);
  FormMatrix omega = connection_forms(gamma);
  FormMatrix Omega = curvature_forms(gamma);
  check(rep, "structure_equation", check_structure_equation(omega, Omega));
  check(rep, "bianchi_identity", check_bianchi(omega, Omega));

  CurvatureComponents r = curvature_components(gamma);
  bool antisym = true;
  int n = g.rank();
  for (int i = 1; i <= n && antisym; ++i)
    for (int j = 1; j <= n && antisym; ++j)
      for (int k = 1; k <= n && antisym; ++k)
        for (int l = 1; l <= n && antisym; ++l)
          antisym = (r.r(i, j, k, l) == -r.r(i, j, l, k));
  check(rep, "components_antisymmetric", antisym);

  Sampler s(seed);
  bool dd = true;
  for (int t = 0; t < 50 && dd; ++t) {
    AlgebraElement a = s.random_element(pres, 2, 2);
    dd = d(d0(a)).is_zero();
    GradedForm w = s.random_one_form(pres, 2, 2);
    dd = dd && d(d(w)).is_zero() && (d1_defining_formula(w) == d(w));
  }
  check(rep, "d_squared_zero_and_defining_formula", dd);
  return rep;
}

SuiteReport gb_verification_suite(const PresentationPtr& pres,
                                  const std::vector<DeformationParameter>& extra,
                                  std::uint64_t seed) {
  (void)seed;
  SuiteReport rep{"gb", {}};
  std::vector<DeformationParameter> ks = builtin_deformation_parameters(pres);
  for (const auto& dp : extra) ks.push_back(dp);
  State tau = State::canonical(pres);
  auto reports = gb_suite(pres, ks, tau, pres->backend() == Backend::NCTorus);
  for (const auto& r : reports) {
    std::string detail = r.error.empty() ? ("integral=" + r.integral.to_string()) : r.error;
    check(rep, r.metric, r.ok, detail);
  }
  return rep;
}

SuiteReport hopf_suite(int n, std::uint64_t seed) {
  SuiteReport rep{"hopf", {}};
  PresentationPtr pres = Presentation::free_group(n);
  Sampler s(seed);

  bool basis_left = true, basis_right = true;
  for (int i = 1; i <= n; ++i) {
    basis_left = basis_left && (basis_one_form_coaction(pres, i, MixedCoaction::Side::Left) ==
                                MixedCoaction::unit_basis(pres, i, MixedCoaction::Side::Left));
    basis_right = basis_right && (basis_one_form_coaction(pres, i, MixedCoaction::Side::Right) ==
                                  MixedCoaction::unit_basis(pres, i, MixedCoaction::Side::Right));
  }
  check(rep, "basis_one_forms_left_invariant", basis_left);
  check(rep, "basis_one_forms_right_invariant", basis_right);

  bool cocomm = true;
  for (int t = 0; t < 50 && cocomm; ++t) {
    AlgebraElement a = s.random_element(pres, 3, 3);
    CoalgebraElement d = coproduct(a);
    cocomm = (d.flip() == d);
  }
  check(rep, "cocommutative", cocomm);

  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
    AlgebraElement b = AlgebraElement::monomial(pres, s.random_null_word(pres), Scalar::one());
    pairs.emplace_back(s.random_element(pres, 2, 2), b);
    if (s.range(0, 1)) {
      AlgebraElement a = s.random_element(pres, 2, 2);
      AlgebraElement c = s.random_element(pres, 2, 3);
      pairs.emplace_back(a, c);
      pairs.emplace_back(-a, c);
    }
    bool pass = false;
    std::string detail;
    try {
      CovarianceResult res = check_covariance(pairs);
      pass = res.left && res.right;
      detail = std::string("left=") + (res.left ? "1" : "0") + " right=" + (res.right ? "1" : "0");
    } catch (const Error& e) {
      detail = e.what();
    }
    check(rep, "relation_instance_" + std::to_string(t), pass, detail);
  }
  return rep;
}

}  // namespace ncgeo
