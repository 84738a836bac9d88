#pragma once

#include "ncgeo/christoffel.hpp"

namespace ncgeo {

using FormMatrix = std::vector<std::vector<GradedForm>>;

// Components r^i_{jkl} of the curvature operator
// R(nabla)(e_i) = sum e_j (x) e_k (x) e_l r^i_{jkl}:
// r^i_{jkl} = 1/2 [ sum_p (Gamma^p_{jk} Gamma^i_{pl} - Gamma^p_{jl} Gamma^i_{pk})
//                   - d_l(Gamma^i_{jk}) + d_k(Gamma^i_{jl}) ],
// the p-sum scoped to the quadratic terms. Antisymmetric in (k,l).
class CurvatureComponents {
 public:
  CurvatureComponents() = default;
  explicit CurvatureComponents(PresentationPtr pres);

  const PresentationPtr& presentation() const { return pres_; }
  int rank() const { return n_; }
  const AlgebraElement& r(int i, int j, int k, int l) const;
  void set_r(int i, int j, int k, int l, AlgebraElement v);
  bool is_zero() const;

 private:
  PresentationPtr pres_;
  int n_ = 0;
  std::vector<AlgebraElement> r_;
};

CurvatureComponents curvature_components(const ChristoffelSymbols& gamma);

// omega_ij = sum_k e_k Gamma^i_{jk}.
FormMatrix connection_forms(const ChristoffelSymbols& gamma);

// Omega_ij = sum_{k<l} e_k ^ e_l (2 r^i_{jkl}).
FormMatrix curvature_forms(const ChristoffelSymbols& gamma);

// Omega_ij == d omega_ij + sum_p omega_pj ^ omega_ip.
bool check_structure_equation(const FormMatrix& omega, const FormMatrix& Omega);

// d Omega_ij == sum_p (Omega_pj ^ omega_ip - omega_pj ^ Omega_ip).
bool check_bianchi(const FormMatrix& omega, const FormMatrix& Omega);

struct RicciScalar {
  std::vector<std::vector<AlgebraElement>> ric;  // Ric_jl = 2 sum_k r^k_{jkl}
  AlgebraElement scal;                           // Scal = sum_{j,l} g_jl Ric_jl
  AlgebraElement gaussian;                       // K = Scal / 2
};

RicciScalar ricci_scalar(const Metric& g, const ChristoffelSymbols& gamma);

}  // namespace ncgeo
