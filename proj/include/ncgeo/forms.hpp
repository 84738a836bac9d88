#pragma once

#include <cstdint>
#include <map>

#include "ncgeo/element.hpp"

namespace ncgeo {

// Degree-p element of the free exterior module on the central basis
// {e_1,...,e_n}: sum over strictly increasing multi-indices I of e_I * a_I,
// coefficients on the right. Multi-indices are bitmasks (bit i-1 <=> e_i).
class GradedForm {
 public:
  GradedForm() = default;

  static GradedForm zero(PresentationPtr pres, int degree);
  static GradedForm from_element(const AlgebraElement& a);  // degree 0
  static GradedForm basis(PresentationPtr pres, int i);     // e_i
  static GradedForm basis_two(PresentationPtr pres, int i, int j);  // e_i ^ e_j, i < j
  static GradedForm monomial(PresentationPtr pres, int degree, std::uint32_t mask,
                             AlgebraElement coeff);

  const PresentationPtr& presentation() const { return pres_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, AlgebraElement>& terms() const { return terms_; }
  AlgebraElement coefficient(std::uint32_t mask) const;
  AlgebraElement coefficient_e(int i) const;         // degree 1
  AlgebraElement coefficient_e(int i, int j) const;  // degree 2, i < j

  GradedForm operator+(const GradedForm& o) const;
  GradedForm operator-(const GradedForm& o) const;
  GradedForm operator-() const;
  GradedForm& operator+=(const GradedForm& o) { return *this = *this + o; }
  // Right module action; the basis is central so left and right agree.
  GradedForm operator*(const AlgebraElement& a) const;
  GradedForm scaled(const Scalar& c) const;

  GradedForm wedge(const GradedForm& o) const;

  bool operator==(const GradedForm& o) const;
  bool operator!=(const GradedForm& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void add_term(std::uint32_t mask, const AlgebraElement& a);

  PresentationPtr pres_;
  int degree_ = 0;
  std::map<std::uint32_t, AlgebraElement> terms_;
};

// Left module action a (e_I b) = e_I (a b); the basis is central, so only
// the coefficient order distinguishes it from the right action.
GradedForm operator*(const AlgebraElement& a, const GradedForm& f);

// Sign of e_I ^ e_J for disjoint masks: (-1)^{#inversions}.
int wedge_sign(std::uint32_t lhs, std::uint32_t rhs);

// d(a) = sum_i e_i d_i(a).
GradedForm d0(const AlgebraElement& a);

// Exterior derivative in the free Grassmann model: d(e_I a) = (-1)^{|I|} e_I ^ d0(a).
GradedForm d(const GradedForm& w);

// Degree-1 exterior derivative written exactly as the defining formula of the
// calculus, d(sum e_i a_i) = sum_{p<q} e_p^e_q sum_i (d_p(a_i S_i^*) d_q(S_i)
// - d_q(a_i S_i^*) d_p(S_i)); must agree with d().
GradedForm d1_defining_formula(const GradedForm& w);

}  // namespace ncgeo
