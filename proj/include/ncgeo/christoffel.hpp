#pragma once

#include <string>
#include <vector>

#include "ncgeo/metric.hpp"

namespace ncgeo {

// Christoffel symbols Gamma^i_{jk} of a connection on the free bimodule of
// one-forms: nabla(e_i) = sum_{j,k} e_j (x) e_k Gamma^i_{jk}.
class ChristoffelSymbols {
 public:
  ChristoffelSymbols() = default;
  explicit ChristoffelSymbols(PresentationPtr pres);

  const PresentationPtr& presentation() const { return pres_; }
  int rank() const { return n_; }
  const AlgebraElement& gamma(int i, int j, int k) const;  // 1-based
  void set_gamma(int i, int j, int k, AlgebraElement v);

  bool is_zero() const;
  bool torsion_free() const;  // Gamma^i_{jk} == Gamma^i_{kj}
  bool operator==(const ChristoffelSymbols& o) const;
  bool operator!=(const ChristoffelSymbols& o) const { return !(*this == o); }

  // nabla applied to the basis one-form e_i.
  TensorBicovector covariant_derivative_basis(int i) const;

 private:
  PresentationPtr pres_;
  int n_ = 0;
  std::vector<AlgebraElement> g_;
};

// The closed form for the Levi-Civita symbols of the calculus with d(e_i)=0:
// Gamma^p_{ml} = 1/2 ( sum_j g^{lj} d_m(g_pj) + sum_i g^{mi} d_l(g_ip)
//                      - sum_{ijn} g_pn g^{li} g^{mj} d_n(g_ij) ).
ChristoffelSymbols christoffel_canonical(const Metric& g);

// Reduced form, valid when A_G is closed under the derivations:
// Gamma^p_{ml} = -1/2 sum_n g_pn ( d_m(g^{ln}) + d_l(g^{mn}) - d_n(g^{ml}) ).
// Throws Error(DerivationClosureViolated) when the precondition check fails.
ChristoffelSymbols christoffel_reduced(const Metric& g);

// Conformally deformed metric k g_0:
// Gamma^i_{jl} = 1/2 ( delta_il k^{-1} d_j(k) + delta_ij k^{-1} d_l(k)
//                      - delta_jl k^{-1} d_i(k) ).
ChristoffelSymbols christoffel_conformal(PresentationPtr pres, const AlgebraElement& k,
                                         std::optional<AlgebraElement> k_inv = std::nullopt);

// General formula with an arbitrary reference connection Gamma_0, including
// all six correction terms.
ChristoffelSymbols christoffel_general(const Metric& g, const ChristoffelSymbols& gamma0);

// Pi_g(nabla) applied to a bicovector, extended from the central basis by
// Pi_g(e_i (x) e_j a) = Pi^0_g(e_i (x) e_j) a + g_ij d(a), with
// Pi^0_g(e_i (x) e_j) = sum_l e_l sum_k ( g_kj Gamma^i_{kl} + g_ki Gamma^j_{kl} ).
GradedForm pi_g_apply(const Metric& g, const ChristoffelSymbols& gamma,
                      const TensorBicovector& t);

struct LeviCivitaCheck {
  std::string check;
  std::vector<int> indices;
  bool pass;
  std::string lhs, rhs;
};

struct LeviCivitaReport {
  std::vector<LeviCivitaCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Torsion symmetry, metric compatibility, and Pi_g = d о g on the sample
// elements.
LeviCivitaReport verify_levi_civita(const Metric& g, const ChristoffelSymbols& gamma,
                                    const std::vector<AlgebraElement>& samples);

}  // namespace ncgeo
