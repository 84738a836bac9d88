#pragma once

#include "ncgeo/element.hpp"

namespace ncgeo {

enum class StateKind { ConstantCoefficient, IdentityCoefficient, KMS };

// The canonical state of each backend: the T^n-invariant trace on the torus
// and free group, the gauge-invariant KMS state on the Cuntz algebra.
class State {
 public:
  static State canonical(PresentationPtr pres);

  StateKind kind() const { return kind_; }
  const PresentationPtr& presentation() const { return pres_; }

  Scalar operator()(const AlgebraElement& a) const;

 private:
  State(PresentationPtr pres, StateKind kind) : pres_(std::move(pres)), kind_(kind) {}

  PresentationPtr pres_;
  StateKind kind_;
};

}  // namespace ncgeo
