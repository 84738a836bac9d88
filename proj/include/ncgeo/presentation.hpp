#pragma once

#include <memory>
#include <vector>

#include "ncgeo/cyclotomic.hpp"
#include "ncgeo/rational.hpp"

namespace ncgeo {

enum class Backend { NCTorus, FreeGroup, Cuntz };

const char* backend_name(Backend b);

// Generator/relation presentation shared by all elements of one algebra.
// Immutable after construction.
class Presentation {
 public:
  // theta must be exactly skew-symmetric with zero diagonal.
  static std::shared_ptr<const Presentation> nc_torus(int n, std::vector<std::vector<Rat>> theta,
                                                      bool float_mode = false);
  // NC torus with irrational angles; always float mode.
  static std::shared_ptr<const Presentation> nc_torus_float(int n,
                                                            std::vector<std::vector<double>> theta);
  static std::shared_ptr<const Presentation> free_group(int n, bool float_mode = false);
  static std::shared_ptr<const Presentation> cuntz(int n, bool float_mode = false);

  Backend backend() const { return backend_; }
  int rank() const { return n_; }
  bool float_mode() const { return float_mode_; }

  const Rat& theta(int k, int l) const;       // 1-based
  double theta_double(int k, int l) const;    // 1-based

  // e^{2 pi i turns}, exact or float per mode.
  Scalar phase(const Rat& turns) const;
  Scalar phase_double(double turns) const;
  Scalar scalar_one() const { return float_mode_ ? Scalar::from_complex({1.0, 0.0}) : Scalar::one(); }
  Scalar scalar_from_rational(const Rat& q) const;

  bool same_as(const Presentation& o) const;

 private:
  Presentation() = default;

  Backend backend_ = Backend::NCTorus;
  int n_ = 2;
  bool float_mode_ = false;
  bool theta_rational_ = true;
  std::vector<std::vector<Rat>> theta_;
  std::vector<std::vector<double>> theta_f_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace ncgeo
