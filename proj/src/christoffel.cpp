#include "ncgeo/christoffel.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

ChristoffelSymbols::ChristoffelSymbols(PresentationPtr pres) : pres_(std::move(pres)) {
  n_ = pres_->rank();
  std::size_t n = static_cast<std::size_t>(n_);
  g_.assign(n * n * n, AlgebraElement::zero(pres_));
}

const AlgebraElement& ChristoffelSymbols::gamma(int i, int j, int k) const {
  std::size_t n = static_cast<std::size_t>(n_);
  return g_[(static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
            static_cast<std::size_t>(k - 1)];
}

void ChristoffelSymbols::set_gamma(int i, int j, int k, AlgebraElement v) {
  std::size_t n = static_cast<std::size_t>(n_);
  g_[(static_cast<std::size_t>(i - 1) * n + static_cast<std::size_t>(j - 1)) * n +
     static_cast<std::size_t>(k - 1)] = std::move(v);
}

bool ChristoffelSymbols::is_zero() const {
  for (const auto& v : g_)
    if (!v.is_zero()) return false;
  return true;
}

bool ChristoffelSymbols::torsion_free() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k)
        if (gamma(i, j, k) != gamma(i, k, j)) return false;
  return true;
}

bool ChristoffelSymbols::operator==(const ChristoffelSymbols& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t a = 0; a < g_.size(); ++a)
    if (g_[a] != o.g_[a]) return false;
  return true;
}

TensorBicovector ChristoffelSymbols::covariant_derivative_basis(int i) const {
  TensorBicovector t(pres_);
  for (int j = 1; j <= n_; ++j)
    for (int k = 1; k <= n_; ++k) t.set_entry(j, k, gamma(i, j, k));
  return t;
}

ChristoffelSymbols christoffel_canonical(const Metric& g) {
  const auto& pres = g.presentation();
  int n = g.rank();
  Scalar half = pres->scalar_from_rational(Rat(1, 2));
  ChristoffelSymbols out(pres);
  for (int p = 1; p <= n; ++p)
    for (int m = 1; m <= n; ++m)
      for (int l = 1; l <= n; ++l) {
        AlgebraElement sum = AlgebraElement::zero(pres);
        for (int j = 1; j <= n; ++j) sum += g.inverse_entry(l, j) * g.entry(p, j).derive(m);
        for (int i = 1; i <= n; ++i) sum += g.inverse_entry(m, i) * g.entry(i, p).derive(l);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j)
            for (int nn = 1; nn <= n; ++nn)
              sum -= g.entry(p, nn) * g.inverse_entry(l, i) * g.inverse_entry(m, j) *
                     g.entry(i, j).derive(nn);
        out.set_gamma(p, m, l, sum.scaled(half));
      }
  return out;
}

ChristoffelSymbols christoffel_reduced(const Metric& g) {
  if (!g.derivation_closed())
    fail(ErrorKind::DerivationClosureViolated,
         "A_G is not closed under the derivations; reduced formula unavailable");
  const auto& pres = g.presentation();
  int n = g.rank();
  Scalar mhalf = pres->scalar_from_rational(Rat(-1, 2));
  ChristoffelSymbols out(pres);
  for (int p = 1; p <= n; ++p)
    for (int m = 1; m <= n; ++m)
      for (int l = 1; l <= n; ++l) {
        AlgebraElement sum = AlgebraElement::zero(pres);
        for (int nn = 1; nn <= n; ++nn)
          sum += g.entry(p, nn) * (g.inverse_entry(l, nn).derive(m) +
                                   g.inverse_entry(m, nn).derive(l) -
                                   g.inverse_entry(m, l).derive(nn));
        out.set_gamma(p, m, l, sum.scaled(mhalf));
      }
  return out;
}

ChristoffelSymbols christoffel_conformal(PresentationPtr pres, const AlgebraElement& k,
                                         std::optional<AlgebraElement> k_inv) {
  AlgebraElement kinv = certified_inverse(k, k_inv, "deformation parameter");
  int n = pres->rank();
  Scalar half = pres->scalar_from_rational(Rat(1, 2));
  std::vector<AlgebraElement> c;  // c_i = k^{-1} d_i(k)
  c.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) c.push_back(kinv * k.derive(i));
  ChristoffelSymbols out(pres);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        AlgebraElement sum = AlgebraElement::zero(pres);
        if (i == l) sum += c[static_cast<std::size_t>(j - 1)];
        if (i == j) sum += c[static_cast<std::size_t>(l - 1)];
        if (j == l) sum -= c[static_cast<std::size_t>(i - 1)];
        out.set_gamma(i, j, l, sum.scaled(half));
      }
  return out;
}

ChristoffelSymbols christoffel_general(const Metric& g, const ChristoffelSymbols& gamma0) {
  const auto& pres = g.presentation();
  if (!gamma0.presentation()->same_as(*pres))
    fail(ErrorKind::PresentationMismatch, "reference connection on a different presentation");
  int n = g.rank();
  Scalar half = pres->scalar_from_rational(Rat(1, 2));
  ChristoffelSymbols base = christoffel_canonical(g);
  ChristoffelSymbols out(pres);
  for (int p = 1; p <= n; ++p)
    for (int m = 1; m <= n; ++m)
      for (int l = 1; l <= n; ++l) {
        AlgebraElement corr = gamma0.gamma(p, m, l) - gamma0.gamma(p, l, m);
        for (int i = 1; i <= n; ++i)
          for (int nn = 1; nn <= n; ++nn) {
            corr += g.entry(p, nn) * g.inverse_entry(m, i) *
                    (gamma0.gamma(i, l, nn) - gamma0.gamma(i, nn, l));
            corr += g.entry(p, nn) * g.inverse_entry(l, i) *
                    (gamma0.gamma(i, m, nn) - gamma0.gamma(i, nn, m));
          }
        out.set_gamma(p, m, l, base.gamma(p, m, l) + corr.scaled(half));
      }
  return out;
}

GradedForm pi_g_apply(const Metric& g, const ChristoffelSymbols& gamma,
                      const TensorBicovector& t) {
  const auto& pres = g.presentation();
  int n = g.rank();
  GradedForm out = GradedForm::zero(pres, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const AlgebraElement& a = t.entry(i, j);
      if (a.is_zero()) continue;
      for (int l = 1; l <= n; ++l) {
        AlgebraElement coeff = AlgebraElement::zero(pres);
        for (int k = 1; k <= n; ++k)
          coeff += g.entry(k, j) * gamma.gamma(i, k, l) + g.entry(k, i) * gamma.gamma(j, k, l);
        coeff = coeff * a + g.entry(i, j) * a.derive(l);
        if (!coeff.is_zero()) out += GradedForm::monomial(pres, 1, 1u << (l - 1), coeff);
      }
    }
  return out;
}

LeviCivitaReport verify_levi_civita(const Metric& g, const ChristoffelSymbols& gamma,
                                    const std::vector<AlgebraElement>& samples) {
  const auto& pres = g.presentation();
  int n = g.rank();
  LeviCivitaReport report;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const AlgebraElement& lhs = gamma.gamma(i, j, k);
        const AlgebraElement& rhs = gamma.gamma(i, k, j);
        report.checks.push_back(
            {"torsion", {i, j, k}, lhs == rhs, lhs.to_string(), rhs.to_string()});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) {
        AlgebraElement lhs = AlgebraElement::zero(pres);
        for (int k = 1; k <= n; ++k)
          lhs += g.entry(k, j) * gamma.gamma(i, k, l) + g.entry(k, i) * gamma.gamma(j, k, l);
        AlgebraElement rhs = g.entry(i, j).derive(l);
        report.checks.push_back(
            {"compatibility", {i, j, l}, lhs == rhs, lhs.to_string(), rhs.to_string()});
      }
  for (std::size_t s = 0; s < samples.size(); ++s) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        TensorBicovector t(pres);
        t.set_entry(i, j, samples[s]);
        GradedForm lhs = pi_g_apply(g, gamma, t);
        GradedForm rhs = d0(g.entry(i, j) * samples[s]);
        report.checks.push_back({"pi_g_equals_d_g",
                                 {i, j, static_cast<int>(s)},
                                 lhs == rhs,
                                 lhs.to_string(),
                                 rhs.to_string()});
      }
  }
  return report;
}

}  // namespace ncgeo
