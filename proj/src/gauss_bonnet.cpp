#include "ncgeo/gauss_bonnet.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

Scalar integrate_two_form(const GradedForm& theta, const State& tau) {
  const auto& pres = theta.presentation();
  if (!pres || pres->rank() != 2)
    fail(ErrorKind::WrongRank, "two-form integration requires a rank-two calculus");
  if (theta.degree() != 2) fail(ErrorKind::WrongRank, "integrand must be a two-form");
  return tau(theta.coefficient_e(1, 2));
}

GradedForm gauss_bonnet_form(const Metric& g) {
  if (g.rank() != 2) fail(ErrorKind::WrongRank, "Gauss-Bonnet form requires a rank-two calculus");
  ChristoffelSymbols gamma = christoffel_canonical(g);
  FormMatrix Omega = curvature_forms(gamma);
  return Omega[0][1];
}

std::pair<Scalar, Scalar> surface_integral_K(PresentationPtr pres, const AlgebraElement& k,
                                             std::optional<AlgebraElement> k_inv,
                                             bool positivity_asserted, const State& tau) {
  if (pres->rank() != 2) fail(ErrorKind::WrongRank, "surface integral requires a rank-two calculus");
  bool automatic = false;
  if (k.is_scalar()) {
    Scalar v = k.scalar_value();
    automatic = v.is_rational() && !v.is_float() && v.as_rational() > 0;
  }
  if (!automatic && !positivity_asserted)
    fail(ErrorKind::PositivityNotCertified,
         "positivity of the deformation parameter is not certified: " + k.to_string());
  AlgebraElement kinv = certified_inverse(k, k_inv, "deformation parameter");
  Metric g = Metric::conformal(pres, k, kinv);
  ChristoffelSymbols gamma = christoffel_canonical(g);
  AlgebraElement gaussian = ricci_scalar(g, gamma).gaussian;
  return {tau(gaussian * kinv), tau(kinv * gaussian)};
}

namespace {

GBReport conformal_report(const PresentationPtr& pres, const DeformationParameter& dp,
                          const State& tau) {
  GBReport rep;
  rep.metric = "conformal(" + dp.label + ")";
  try {
    AlgebraElement kinv = certified_inverse(dp.k, dp.k_inv, "deformation parameter");
    Metric g = Metric::conformal(pres, dp.k, kinv);
    ChristoffelSymbols gamma = christoffel_canonical(g);
    FormMatrix Omega = curvature_forms(gamma);
    rep.integral = integrate_two_form(Omega[0][1], tau);
    bool zero = rep.integral.is_zero();
    rep.checks.push_back({"integral_zero", zero, rep.integral.to_string()});
    bool antis = (Omega[0][1] + Omega[1][0]).is_zero();
    rep.checks.push_back({"Omega12_antisymmetric", antis, ""});
    rep.ok = zero && antis;
  } catch (const Error& e) {
    rep.ok = false;
    rep.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
  }
  return rep;
}

}  // namespace

std::vector<GBReport> gb_suite(PresentationPtr pres, const std::vector<DeformationParameter>& ks,
                               const State& tau, bool include_badmetric) {
  std::vector<GBReport> out;
  if (pres->rank() != 2) fail(ErrorKind::WrongRank, "Gauss-Bonnet suite requires rank two");
  for (const auto& dp : ks) out.push_back(conformal_report(pres, dp, tau));

  for (const auto& a : ks) {
    for (const auto& b : ks) {
      GBReport rep;
      rep.metric = "conformal(" + a.label + "*" + b.label + ")";
      try {
        AlgebraElement ainv = certified_inverse(a.k, a.k_inv, "deformation parameter");
        AlgebraElement binv = certified_inverse(b.k, b.k_inv, "deformation parameter");
        AlgebraElement prod = a.k * b.k;
        AlgebraElement prod_inv = binv * ainv;
        Metric g = Metric::conformal(pres, prod, prod_inv);
        Scalar lhs = integrate_two_form(curvature_forms(christoffel_canonical(g))[0][1], tau);
        Metric ga = Metric::conformal(pres, a.k, ainv);
        Metric gb = Metric::conformal(pres, b.k, binv);
        Scalar ra = integrate_two_form(curvature_forms(christoffel_canonical(ga))[0][1], tau);
        Scalar rb = integrate_two_form(curvature_forms(christoffel_canonical(gb))[0][1], tau);
        rep.integral = lhs;
        bool additive = (lhs == ra + rb);
        rep.checks.push_back({"additivity", additive,
                              lhs.to_string() + " vs " + (ra + rb).to_string()});
        rep.ok = additive;
      } catch (const Error& e) {
        rep.ok = false;
        rep.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
      }
      out.push_back(std::move(rep));
    }
  }

  if (include_badmetric && pres->backend() == Backend::NCTorus) {
    for (const auto& dp : ks) {
      GBReport rep;
      rep.metric = "diag(" + dp.label + ",1)";
      try {
        Metric g = Metric::diagonal(pres, {dp.k, AlgebraElement::one(pres)},
                                    {dp.k_inv, AlgebraElement::one(pres)});
        rep.integral = integrate_two_form(gauss_bonnet_form(g), tau);
        rep.checks.push_back({"integral_reported", true, rep.integral.to_string()});
        rep.ok = true;
      } catch (const Error& e) {
        rep.ok = false;
        rep.error = std::string(error_kind_name(e.kind())) + ": " + e.what();
      }
      out.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace ncgeo
