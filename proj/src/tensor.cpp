#include "ncgeo/tensor.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

TensorBicovector::TensorBicovector(PresentationPtr pres) : pres_(std::move(pres)) {
  n_ = pres_->rank();
  t_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_),
            AlgebraElement::zero(pres_));
}

TensorBicovector TensorBicovector::basis(PresentationPtr pres, int i, int j) {
  TensorBicovector t(std::move(pres));
  t.set_entry(i, j, AlgebraElement::one(t.pres_));
  return t;
}

const AlgebraElement& TensorBicovector::entry(int i, int j) const {
  return t_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(j - 1)];
}

void TensorBicovector::set_entry(int i, int j, AlgebraElement a) {
  if (i < 1 || i > n_ || j < 1 || j > n_) fail(ErrorKind::IndexError, "tensor index out of range");
  t_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
     static_cast<std::size_t>(j - 1)] = std::move(a);
}

TensorBicovector TensorBicovector::operator+(const TensorBicovector& o) const {
  if (!pres_->same_as(*o.pres_))
    fail(ErrorKind::PresentationMismatch, "tensors belong to different presentations");
  TensorBicovector r(pres_);
  for (std::size_t k = 0; k < t_.size(); ++k) r.t_[k] = t_[k] + o.t_[k];
  return r;
}

TensorBicovector TensorBicovector::operator-(const TensorBicovector& o) const {
  return *this + (-o);
}

TensorBicovector TensorBicovector::operator-() const {
  TensorBicovector r(pres_);
  for (std::size_t k = 0; k < t_.size(); ++k) r.t_[k] = -t_[k];
  return r;
}

TensorBicovector TensorBicovector::scaled(const Scalar& c) const {
  TensorBicovector r(pres_);
  for (std::size_t k = 0; k < t_.size(); ++k) r.t_[k] = t_[k].scaled(c);
  return r;
}

TensorBicovector TensorBicovector::sigma() const {
  TensorBicovector r(pres_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) r.set_entry(i, j, entry(j, i));
  return r;
}

TensorBicovector TensorBicovector::p_sym() const {
  Scalar half = pres_->scalar_from_rational(Rat(1, 2));
  return (*this + sigma()).scaled(half);
}

GradedForm TensorBicovector::wedge() const {
  GradedForm r = GradedForm::zero(pres_, 2);
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      AlgebraElement c = entry(i, j) - entry(j, i);
      if (!c.is_zero())
        r += GradedForm::monomial(pres_, 2, (1u << (i - 1)) | (1u << (j - 1)), std::move(c));
    }
  return r;
}

bool TensorBicovector::is_zero() const {
  for (const auto& a : t_)
    if (!a.is_zero()) return false;
  return true;
}

bool TensorBicovector::operator==(const TensorBicovector& o) const { return (*this - o).is_zero(); }

}  // namespace ncgeo
