#include "ncgeo/curvature.hpp"

namespace ncgeo {

CurvatureComponents::CurvatureComponents(PresentationPtr pres) : pres_(std::move(pres)) {
  n_ = pres_->rank();
  std::size_t n = static_cast<std::size_t>(n_);
  r_.assign(n * n * n * n, AlgebraElement::zero(pres_));
}

const AlgebraElement& CurvatureComponents::r(int i, int j, int k, int l) const {
  std::size_t n = static_cast<std::size_t>(n_);
  return r_[((static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
             static_cast<std::size_t>(k - 1)) *
                n +
            static_cast<std::size_t>(l - 1)];
}

void CurvatureComponents::set_r(int i, int j, int k, int l, AlgebraElement v) {
  std::size_t n = static_cast<std::size_t>(n_);
  r_[((static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
      static_cast<std::size_t>(k - 1)) *
         n +
     static_cast<std::size_t>(l - 1)] = std::move(v);
}

bool CurvatureComponents::is_zero() const {
  for (const auto& v : r_)
    if (!v.is_zero()) return false;
  return true;
}

CurvatureComponents curvature_components(const ChristoffelSymbols& gamma) {
  const auto& pres = gamma.presentation();
  int n = gamma.rank();
  Scalar half = pres->scalar_from_rational(Rat(1, 2));
  CurvatureComponents out(pres);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          AlgebraElement sum = AlgebraElement::zero(pres);
          for (int p = 1; p <= n; ++p)
            sum += gamma.gamma(p, j, k) * gamma.gamma(i, p, l) -
                   gamma.gamma(p, j, l) * gamma.gamma(i, p, k);
          sum -= gamma.gamma(i, j, k).derive(l);
          sum += gamma.gamma(i, j, l).derive(k);
          out.set_r(i, j, k, l, sum.scaled(half));
        }
  return out;
}

FormMatrix connection_forms(const ChristoffelSymbols& gamma) {
  const auto& pres = gamma.presentation();
  int n = gamma.rank();
  FormMatrix omega(static_cast<std::size_t>(n),
                   std::vector<GradedForm>(static_cast<std::size_t>(n), GradedForm::zero(pres, 1)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GradedForm f = GradedForm::zero(pres, 1);
      for (int k = 1; k <= n; ++k) {
        const AlgebraElement& c = gamma.gamma(i, j, k);
        if (!c.is_zero()) f += GradedForm::monomial(pres, 1, 1u << (k - 1), c);
      }
      omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(f);
    }
  return omega;
}

FormMatrix curvature_forms(const ChristoffelSymbols& gamma) {
  const auto& pres = gamma.presentation();
  int n = gamma.rank();
  CurvatureComponents r = curvature_components(gamma);
  Scalar two = pres->scalar_from_rational(Rat(2));
  FormMatrix Omega(static_cast<std::size_t>(n),
                   std::vector<GradedForm>(static_cast<std::size_t>(n), GradedForm::zero(pres, 2)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      GradedForm f = GradedForm::zero(pres, 2);
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          AlgebraElement c = r.r(i, j, k, l).scaled(two);
          if (!c.is_zero())
            f += GradedForm::monomial(pres, 2, (1u << (k - 1)) | (1u << (l - 1)), std::move(c));
        }
      Omega[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(f);
    }
  return Omega;
}

bool check_structure_equation(const FormMatrix& omega, const FormMatrix& Omega) {
  std::size_t n = omega.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GradedForm rhs = d(omega[i][j]);
      for (std::size_t p = 0; p < n; ++p) rhs += omega[p][j].wedge(omega[i][p]);
      if (Omega[i][j] != rhs) return false;
    }
  return true;
}

bool check_bianchi(const FormMatrix& omega, const FormMatrix& Omega) {
  std::size_t n = omega.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GradedForm lhs = d(Omega[i][j]);
      GradedForm rhs = GradedForm::zero(lhs.presentation(), 3);
      for (std::size_t p = 0; p < n; ++p)
        rhs += Omega[p][j].wedge(omega[i][p]) - omega[p][j].wedge(Omega[i][p]);
      if (lhs != rhs) return false;
    }
  return true;
}

RicciScalar ricci_scalar(const Metric& g, const ChristoffelSymbols& gamma) {
  const auto& pres = g.presentation();
  int n = g.rank();
  CurvatureComponents r = curvature_components(gamma);
  Scalar two = pres->scalar_from_rational(Rat(2));
  RicciScalar out;
  out.ric.assign(static_cast<std::size_t>(n),
                 std::vector<AlgebraElement>(static_cast<std::size_t>(n), AlgebraElement::zero(pres)));
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) {
      AlgebraElement sum = AlgebraElement::zero(pres);
      for (int k = 1; k <= n; ++k) sum += r.r(k, j, k, l);
      out.ric[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)] = sum.scaled(two);
    }
  out.scal = AlgebraElement::zero(pres);
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l)
      out.scal += g.entry(j, l) * out.ric[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)];
  out.gaussian = out.scal.scaled(pres->scalar_from_rational(Rat(1, 2)));
  return out;
}

}  // namespace ncgeo
