#pragma once

#include <tuple>

#include "ncgeo/forms.hpp"

namespace ncgeo {

// Element of A (x) A over the group algebra C[F_n], in bilinear canonical
// form (terms keyed by pairs of reduced words).
class CoalgebraElement {
 public:
  CoalgebraElement() = default;
  explicit CoalgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {}

  const PresentationPtr& presentation() const { return pres_; }
  const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& u, const Word& v, const Scalar& c);
  CoalgebraElement operator+(const CoalgebraElement& o) const;
  CoalgebraElement operator-(const CoalgebraElement& o) const;
  CoalgebraElement flip() const;
  bool operator==(const CoalgebraElement& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  PresentationPtr pres_;
  std::map<std::pair<Word, Word>, Scalar> terms_;
};

// Element of A (x) Omega^1 (side Left) or Omega^1 (x) A (side Right) with the
// one-form part expanded over the central basis: terms (i, u, v) represent
// delta_u (x) e_i delta_v, respectively e_i delta_u (x) delta_v.
class MixedCoaction {
 public:
  enum class Side { Left, Right };

  MixedCoaction() = default;
  MixedCoaction(PresentationPtr pres, Side side) : pres_(std::move(pres)), side_(side) {}

  static MixedCoaction unit_basis(PresentationPtr pres, int i, Side side);  // 1 (x) e_i / e_i (x) 1

  const PresentationPtr& presentation() const { return pres_; }
  Side side() const { return side_; }
  const std::map<std::tuple<int, Word, Word>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int i, const Word& u, const Word& v, const Scalar& c);
  bool operator==(const MixedCoaction& o) const {
    return side_ == o.side_ && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  PresentationPtr pres_;
  Side side_ = Side::Left;
  std::map<std::tuple<int, Word, Word>, Scalar> terms_;
};

// Linear extension of delta_g -> delta_g (x) delta_g; free group only
// (Error(UnsupportedBackend) otherwise).
CoalgebraElement coproduct(const AlgebraElement& a);

// sum_k Delta(a_k) (id (x) d) Delta(b_k) for Side::Left, and the right-
// covariant analogue sum_k Delta(a_k) (d (x) id) Delta(b_k) for Side::Right.
MixedCoaction coaction_one_form(const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs,
                                MixedCoaction::Side side);

struct CovarianceResult {
  bool left = false;
  bool right = false;
};

// Requires sum_k a_k d(b_k) = 0 (Error(NotARelation) otherwise); evaluates
// both covariance conditions exactly.
CovarianceResult check_covariance(
    const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs);

// Delta_{Omega^1}(e_i), computed from the pair (delta_{g_i}^*, delta_{g_i}).
MixedCoaction basis_one_form_coaction(PresentationPtr pres, int i, MixedCoaction::Side side);

}  // namespace ncgeo
