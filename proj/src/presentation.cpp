#include "ncgeo/presentation.hpp"

#include <cmath>

#include "ncgeo/errors.hpp"

namespace ncgeo {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::NCTorus: return "nc-torus";
    case Backend::FreeGroup: return "free-group";
    case Backend::Cuntz: return "cuntz";
  }
  return "?";
}

std::shared_ptr<const Presentation> Presentation::nc_torus(int n, std::vector<std::vector<Rat>> theta,
                                                           bool float_mode) {
  if (n < 2) fail(ErrorKind::InvalidConfig, "rank must be at least 2");
  if (theta.size() != static_cast<std::size_t>(n))
    fail(ErrorKind::InvalidConfig, "theta must be an n x n matrix");
  for (const auto& row : theta)
    if (row.size() != static_cast<std::size_t>(n))
      fail(ErrorKind::InvalidConfig, "theta must be an n x n matrix");
  for (int k = 0; k < n; ++k) {
    if (theta[k][k] != 0) fail(ErrorKind::InvalidConfig, "theta diagonal must vanish");
    for (int l = 0; l < n; ++l)
      if (theta[k][l] != -theta[l][k])
        fail(ErrorKind::InvalidConfig, "theta must be skew-symmetric");
  }
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->backend_ = Backend::NCTorus;
  p->n_ = n;
  p->float_mode_ = float_mode;
  p->theta_ = std::move(theta);
  return p;
}

std::shared_ptr<const Presentation> Presentation::nc_torus_float(
    int n, std::vector<std::vector<double>> theta) {
  if (n < 2) fail(ErrorKind::InvalidConfig, "rank must be at least 2");
  if (theta.size() != static_cast<std::size_t>(n))
    fail(ErrorKind::InvalidConfig, "theta must be an n x n matrix");
  for (int k = 0; k < n; ++k) {
    if (theta[k].size() != static_cast<std::size_t>(n))
      fail(ErrorKind::InvalidConfig, "theta must be an n x n matrix");
    if (theta[k][k] != 0.0) fail(ErrorKind::InvalidConfig, "theta diagonal must vanish");
    for (int l = 0; l < n; ++l)
      if (theta[k][l] != -theta[l][k])
        fail(ErrorKind::InvalidConfig, "theta must be skew-symmetric");
  }
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->backend_ = Backend::NCTorus;
  p->n_ = n;
  p->float_mode_ = true;
  p->theta_rational_ = false;
  p->theta_f_ = std::move(theta);
  return p;
}

std::shared_ptr<const Presentation> Presentation::free_group(int n, bool float_mode) {
  if (n < 2) fail(ErrorKind::InvalidConfig, "rank must be at least 2");
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->backend_ = Backend::FreeGroup;
  p->n_ = n;
  p->float_mode_ = float_mode;
  return p;
}

std::shared_ptr<const Presentation> Presentation::cuntz(int n, bool float_mode) {
  if (n < 2) fail(ErrorKind::InvalidConfig, "rank must be at least 2");
  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->backend_ = Backend::Cuntz;
  p->n_ = n;
  p->float_mode_ = float_mode;
  return p;
}

const Rat& Presentation::theta(int k, int l) const {
  static const Rat zero{0};
  if (backend_ != Backend::NCTorus || !theta_rational_) return zero;
  return theta_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
}

double Presentation::theta_double(int k, int l) const {
  if (backend_ != Backend::NCTorus) return 0.0;
  if (theta_rational_)
    return static_cast<double>(theta_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)]);
  return theta_f_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
}

Scalar Presentation::phase(const Rat& turns) const {
  if (float_mode_) return phase_double(static_cast<double>(turns));
  return Scalar::from_turns(turns);
}

Scalar Presentation::phase_double(double turns) const {
  constexpr double two_pi = 6.28318530717958647692;
  return Scalar::from_complex({std::cos(two_pi * turns), std::sin(two_pi * turns)});
}

Scalar Presentation::scalar_from_rational(const Rat& q) const {
  if (float_mode_) return Scalar::from_complex({static_cast<double>(q), 0.0});
  return Scalar::from_rational(q);
}

bool Presentation::same_as(const Presentation& o) const {
  if (this == &o) return true;
  return backend_ == o.backend_ && n_ == o.n_ && float_mode_ == o.float_mode_ &&
         theta_rational_ == o.theta_rational_ && theta_ == o.theta_ && theta_f_ == o.theta_f_;
}

}  // namespace ncgeo
