#pragma once

#include <complex>
#include <map>
#include <string>

#include "ncgeo/rational.hpp"

namespace ncgeo {

// Exact complex scalar in the cyclotomic field Q(zeta_N), stored in the power
// basis modulo the N-th cyclotomic polynomial and always reduced to the
// minimal conductor, so equality is structural. A value can instead carry a
// floating complex number (float fallback mode); the two kinds are never
// mixed inside one algebra element.
class Scalar {
 public:
  Scalar() = default;  // exact zero

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_rational(Rat(1)); }
  static Scalar from_rational(const Rat& q);
  static Scalar from_long(long v) { return from_rational(Rat(v)); }
  static Scalar imaginary_unit() { return root_of_unity(1, 4); }
  // e^{2 pi i p/q}
  static Scalar root_of_unity(const Int& p, const Int& q);
  // e^{2 pi i turns} for rational turns
  static Scalar from_turns(const Rat& turns);
  static Scalar from_complex(std::complex<double> z);

  static constexpr double kTolerance = 1e-9;

  bool is_float() const { return flt_; }
  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_rational() const;
  // Requires is_rational() in exact mode.
  Rat as_rational() const;
  std::complex<double> to_complex() const;

  long conductor() const { return n_; }
  // Exponent -> coefficient map (exact mode).
  const std::map<long, Rat>& coefficients() const { return coeffs_; }
  std::size_t term_count() const { return flt_ ? 1 : coeffs_.size(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar conj() const;
  Scalar inv() const;  // throws Error(DivisionByZero) on zero
  Scalar pow(long k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Scalar(long n, std::map<long, Rat> coeffs) : n_(n), coeffs_(std::move(coeffs)) { canonicalize(); }

  void canonicalize();
  void fold_two_mod_four();
  bool fixed_by_subgroup(long m) const;
  void rebase(long m);

  long n_ = 1;                  // conductor; 1, odd >= 3, or divisible by 4
  std::map<long, Rat> coeffs_;  // exponent in [0, phi(n)) -> nonzero coefficient
  bool flt_ = false;
  std::complex<double> fval_{0.0, 0.0};
};

inline Scalar operator*(const Rat& q, const Scalar& s) { return Scalar::from_rational(q) * s; }

long euler_phi(long n);

}  // namespace ncgeo
