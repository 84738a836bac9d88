#pragma once

#include <cstdint>
#include <optional>

#include "ncgeo/gauss_bonnet.hpp"

namespace ncgeo {

struct SuiteCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Backend integrity: normal-form confluence via associativity, star and
// derivation laws, state properties.
SuiteReport algebra_suite(const PresentationPtr& pres, std::uint64_t seed);

// Torsion, compatibility, Pi_g = d o g on seeded samples, agreement of all
// applicable Christoffel routes.
SuiteReport levi_civita_suite(const Metric& g, std::uint64_t seed);

// Structure equation, Bianchi identity, antisymmetry of the curvature
// components, d o d = 0 on seeded forms.
SuiteReport bianchi_suite(const Metric& g, std::uint64_t seed);

// Gauss-Bonnet: zero integrals and additivity for the backend's built-in
// deformation parameters (plus extra ones), badmetric values reported on the
// torus. Requires rank two.
SuiteReport gb_verification_suite(const PresentationPtr& pres,
                                  const std::vector<DeformationParameter>& extra,
                                  std::uint64_t seed);

// Bicovariance of the free-group calculus C[F_n].
SuiteReport hopf_suite(int n, std::uint64_t seed);

// Built-in deformation parameters with certified inverses per backend.
std::vector<DeformationParameter> builtin_deformation_parameters(const PresentationPtr& pres);

}  // namespace ncgeo
