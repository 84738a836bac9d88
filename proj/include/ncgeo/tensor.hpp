#pragma once

#include <vector>

#include "ncgeo/forms.hpp"

namespace ncgeo {

// Element of Omega^1 (x)_A Omega^1 on the central basis: sum e_i (x) e_j t_ij
// with coefficients on the right, stored densely.
class TensorBicovector {
 public:
  TensorBicovector() = default;
  explicit TensorBicovector(PresentationPtr pres);

  static TensorBicovector basis(PresentationPtr pres, int i, int j);  // e_i (x) e_j

  const PresentationPtr& presentation() const { return pres_; }
  int rank() const { return n_; }
  const AlgebraElement& entry(int i, int j) const;  // 1-based
  void set_entry(int i, int j, AlgebraElement a);

  TensorBicovector operator+(const TensorBicovector& o) const;
  TensorBicovector operator-(const TensorBicovector& o) const;
  TensorBicovector operator-() const;
  TensorBicovector scaled(const Scalar& c) const;

  // Flip on the central basis: sigma(e_i (x) e_j a) = e_j (x) e_i a.
  TensorBicovector sigma() const;
  // (sigma + id)/2.
  TensorBicovector p_sym() const;
  // Multiplication map: sum_{i<j} e_i ^ e_j (t_ij - t_ji).
  GradedForm wedge() const;

  bool is_zero() const;
  bool operator==(const TensorBicovector& o) const;
  bool operator!=(const TensorBicovector& o) const { return !(*this == o); }

 private:
  PresentationPtr pres_;
  int n_ = 0;
  std::vector<AlgebraElement> t_;  // row-major, t_[(i-1)*n + (j-1)]
};

}  // namespace ncgeo
