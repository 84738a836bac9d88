#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncgeo/tensor.hpp"

namespace ncgeo {

// Strongly sigma-compatible pseudo-Riemannian metric: symmetric n x n matrix
// G of pairwise commuting algebra elements with det(G) invertible in the
// commutative subalgebra A_G. Caches det, adj and the inverse entries.
class Metric {
 public:
  // entries[i][j] = g_{i+1,j+1}. A certified inverse of det(G) may be
  // supplied; it is verified by multiplication. Throws Error(NotSymmetric /
  // NotStronglySigmaCompatible / NotInvertible).
  static Metric build(PresentationPtr pres, std::vector<std::vector<AlgebraElement>> entries,
                      std::optional<AlgebraElement> det_inverse = std::nullopt,
                      std::string descriptor = "");
  // g_0: g_ij = delta_ij.
  static Metric euclidean(PresentationPtr pres);
  // k g_0. k_inv optional when k is an invertible monomial.
  static Metric conformal(PresentationPtr pres, const AlgebraElement& k,
                          std::optional<AlgebraElement> k_inv = std::nullopt);
  static Metric diagonal(PresentationPtr pres, std::vector<AlgebraElement> entries,
                         std::vector<std::optional<AlgebraElement>> entry_invs = {});

  const PresentationPtr& presentation() const { return pres_; }
  int rank() const { return n_; }
  const AlgebraElement& entry(int i, int j) const;          // g_ij
  const AlgebraElement& inverse_entry(int i, int j) const;  // g^{ij}
  const AlgebraElement& determinant() const { return det_; }
  const AlgebraElement& determinant_inverse() const { return det_inv_; }
  const AlgebraElement& adjugate_entry(int i, int j) const;

  // g(sum e_i (x) e_j t_ij) = sum g_ij t_ij.
  AlgebraElement apply(const TensorBicovector& t) const;

  // Operational check that A_G is closed under the derivations: every
  // d_a(g_ij) and d_a(g^{ij}) commutes with every entry of G and G^{-1}.
  bool derivation_closed() const;

  const std::string& descriptor() const { return desc_; }

  // Conformal data when built via conformal(); used by closed-form routes.
  const std::optional<std::pair<AlgebraElement, AlgebraElement>>& conformal_factor() const {
    return conformal_;
  }

 private:
  Metric() = default;

  PresentationPtr pres_;
  int n_ = 0;
  std::vector<AlgebraElement> g_, ginv_, adj_;
  AlgebraElement det_, det_inv_;
  std::string desc_;
  std::optional<std::pair<AlgebraElement, AlgebraElement>> conformal_;
};

// Inverse of a single-term invertible element; wraps AlgebraElement::inverse
// with Error(NotInvertible) on failure unless a certified inverse is given
// (which is then verified by multiplication).
AlgebraElement certified_inverse(const AlgebraElement& x,
                                 const std::optional<AlgebraElement>& hint,
                                 const std::string& what);

}  // namespace ncgeo
