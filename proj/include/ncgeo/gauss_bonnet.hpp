#pragma once

#include "ncgeo/curvature.hpp"
#include "ncgeo/state.hpp"

namespace ncgeo {

// Integral of a two-form against a state on a rank-two calculus, with the
// orientation e_1 ^ e_2: the integral of e_1 ^ e_2 a is tau(a).
// Throws Error(WrongRank) off rank two.
Scalar integrate_two_form(const GradedForm& theta, const State& tau);

// Omega_12 of the Levi-Civita connection of g (rank two).
GradedForm gauss_bonnet_form(const Metric& g);

// Surface integrals of the Gaussian curvature for a conformal metric k g_0
// with k certified positive: (tau(K k^{-1}), tau(k^{-1} K)). Positivity is
// automatic only for positive rational scalars; otherwise the caller asserts
// it or Error(PositivityNotCertified) is thrown.
std::pair<Scalar, Scalar> surface_integral_K(PresentationPtr pres, const AlgebraElement& k,
                                             std::optional<AlgebraElement> k_inv,
                                             bool positivity_asserted, const State& tau);

struct GBCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct GBReport {
  std::string metric;
  Scalar integral;
  std::vector<GBCheck> checks;
  bool ok = true;
  std::string error;  // nonempty when the item failed to build
};

struct DeformationParameter {
  std::string label;
  AlgebraElement k;
  std::optional<AlgebraElement> k_inv;
};

// For each conformal parameter: integral of the Gauss-Bonnet form (expected 0
// for the invariant states used here), Omega_12 = -Omega_21; for each ordered
// pair: additivity of the integral under k1 k2. When include_badmetric is set
// (NC torus, rank two) the failing family g = diag(k, 1) is reported with its
// (possibly nonzero) integrals.
std::vector<GBReport> gb_suite(PresentationPtr pres, const std::vector<DeformationParameter>& ks,
                               const State& tau, bool include_badmetric);

}  // namespace ncgeo
