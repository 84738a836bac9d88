#include "ncgeo/state.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

State State::canonical(PresentationPtr pres) {
  switch (pres->backend()) {
    case Backend::NCTorus: return State(std::move(pres), StateKind::ConstantCoefficient);
    case Backend::FreeGroup: return State(std::move(pres), StateKind::IdentityCoefficient);
    case Backend::Cuntz: return State(std::move(pres), StateKind::KMS);
  }
  return State(std::move(pres), StateKind::ConstantCoefficient);
}

Scalar State::operator()(const AlgebraElement& a) const {
  if (a.presentation() && !a.presentation()->same_as(*pres_))
    fail(ErrorKind::PresentationMismatch, "state applied across presentations");
  switch (kind_) {
    case StateKind::ConstantCoefficient:
    case StateKind::IdentityCoefficient:
      return a.coefficient(identity_word(*pres_));
    case StateKind::KMS: {
      // tau(S_mu S_nu^*) = delta_{mu nu} n^{-|mu|}.
      Scalar sum = Scalar::zero();
      Rat n{pres_->rank()};
      for (const auto& [w, c] : a.terms()) {
        const auto& cw = std::get<CuntzWord>(w);
        if (cw.mu != cw.nu) continue;
        Rat weight(1);
        for (std::size_t i = 0; i < cw.mu.size(); ++i) weight /= n;
        sum = sum + c * pres_->scalar_from_rational(weight);
      }
      return sum;
    }
  }
  return Scalar::zero();
}

}  // namespace ncgeo
