#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncgeo/word.hpp"

namespace ncgeo {

// Finite linear combination of canonical words, always held in normal form:
// no zero coefficients, Cuntz combinations with the linear relation
// S_mu S_nu^* = sum_i S_{mu i} S_{nu i}^* eliminated downward.
class AlgebraElement {
 public:
  AlgebraElement() = default;  // unbound zero, usable as additive identity

  static AlgebraElement zero(PresentationPtr pres);
  static AlgebraElement one(PresentationPtr pres);
  static AlgebraElement from_scalar(PresentationPtr pres, const Scalar& c);
  static AlgebraElement from_rational(PresentationPtr pres, const Rat& q);
  static AlgebraElement monomial(PresentationPtr pres, Word w, Scalar c);
  // U_i / delta_{g_i} / S_i (1-based index).
  static AlgebraElement generator(PresentationPtr pres, int i);
  static AlgebraElement generator_star(PresentationPtr pres, int i);
  // U_i^k / delta_{g_i^k}; torus and free group only.
  static AlgebraElement generator_pow(PresentationPtr pres, int i, long k);

  const PresentationPtr& presentation() const { return pres_; }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_scalar() const;
  Scalar scalar_value() const;  // requires is_scalar()
  Scalar coefficient(const Word& w) const;
  std::size_t term_count() const { return terms_.size(); }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }
  AlgebraElement scaled(const Scalar& c) const;

  AlgebraElement star() const;
  // Separating derivation d_i, 1-based; throws Error(IndexError) out of range.
  AlgebraElement derive(int i) const;
  AlgebraElement pow(long k) const;
  // Inverse when the normal form is a single invertible term (any monomial on
  // the torus or free group, scalars on Cuntz); nullopt otherwise.
  std::optional<AlgebraElement> inverse() const;

  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void add_term(const Word& w, const Scalar& c);
  void normalize();

  PresentationPtr pres_;
  std::map<Word, Scalar> terms_;

  friend AlgebraElement raw_combination(PresentationPtr, std::map<Word, Scalar>);
};

// Builds an element from unnormalized terms (normal form applied). Used by
// parser, multiplication and tests.
AlgebraElement raw_combination(PresentationPtr pres, std::map<Word, Scalar> terms);

bool commute_check(const AlgebraElement& a, const AlgebraElement& b);

inline AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) { return a.scaled(c); }

}  // namespace ncgeo
