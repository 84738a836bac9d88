#include "ncgeo/forms.hpp"

#include <bit>

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

void require_compat(const GradedForm& a, const GradedForm& b) {
  if (a.presentation() && b.presentation() && !a.presentation()->same_as(*b.presentation()))
    fail(ErrorKind::PresentationMismatch, "forms belong to different presentations");
  if (a.degree() != b.degree())
    fail(ErrorKind::IndexError, "forms have different degrees");
}

std::string mask_to_string(std::uint32_t mask) {
  std::string s;
  for (int i = 0; i < 32; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!s.empty()) s += "^";
    s += "e" + std::to_string(i + 1);
  }
  return s;
}

}  // namespace

GradedForm operator*(const AlgebraElement& a, const GradedForm& f) {
  GradedForm r = GradedForm::zero(f.presentation(), f.degree());
  for (const auto& [m, c] : f.terms()) {
    AlgebraElement prod = a * c;
    if (!prod.is_zero()) r += GradedForm::monomial(f.presentation(), f.degree(), m, prod);
  }
  return r;
}

int wedge_sign(std::uint32_t lhs, std::uint32_t rhs) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(rhs & (1u << i))) continue;
    inversions += std::popcount(lhs >> (i + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

GradedForm GradedForm::zero(PresentationPtr pres, int degree) {
  GradedForm f;
  f.pres_ = std::move(pres);
  f.degree_ = degree;
  return f;
}

GradedForm GradedForm::from_element(const AlgebraElement& a) {
  GradedForm f = zero(a.presentation(), 0);
  if (!a.is_zero()) f.terms_.emplace(0u, a);
  return f;
}

GradedForm GradedForm::basis(PresentationPtr pres, int i) {
  if (i < 1 || i > pres->rank()) fail(ErrorKind::IndexError, "basis one-form index out of range");
  GradedForm f = zero(pres, 1);
  f.terms_.emplace(1u << (i - 1), AlgebraElement::one(pres));
  return f;
}

GradedForm GradedForm::basis_two(PresentationPtr pres, int i, int j) {
  if (i < 1 || j <= i || j > pres->rank())
    fail(ErrorKind::IndexError, "basis two-form indices out of range");
  GradedForm f = zero(pres, 2);
  f.terms_.emplace((1u << (i - 1)) | (1u << (j - 1)), AlgebraElement::one(pres));
  return f;
}

GradedForm GradedForm::monomial(PresentationPtr pres, int degree, std::uint32_t mask,
                                AlgebraElement coeff) {
  if (std::popcount(mask) != degree) fail(ErrorKind::IndexError, "multi-index does not match degree");
  GradedForm f = zero(std::move(pres), degree);
  if (!coeff.is_zero()) f.terms_.emplace(mask, std::move(coeff));
  return f;
}

AlgebraElement GradedForm::coefficient(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  if (it != terms_.end()) return it->second;
  return AlgebraElement::zero(pres_);
}

AlgebraElement GradedForm::coefficient_e(int i) const { return coefficient(1u << (i - 1)); }

AlgebraElement GradedForm::coefficient_e(int i, int j) const {
  return coefficient((1u << (i - 1)) | (1u << (j - 1)));
}

void GradedForm::add_term(std::uint32_t mask, const AlgebraElement& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, a);
  if (!inserted) {
    it->second = it->second + a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedForm GradedForm::operator+(const GradedForm& o) const {
  require_compat(*this, o);
  GradedForm r = *this;
  if (!r.pres_) r.pres_ = o.pres_;
  for (const auto& [m, a] : o.terms_) r.add_term(m, a);
  return r;
}

GradedForm GradedForm::operator-(const GradedForm& o) const { return *this + (-o); }

GradedForm GradedForm::operator-() const {
  GradedForm r = *this;
  for (auto& [m, a] : r.terms_) a = -a;
  return r;
}

GradedForm GradedForm::operator*(const AlgebraElement& a) const {
  GradedForm r = zero(pres_, degree_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * a);
  return r;
}

GradedForm GradedForm::scaled(const Scalar& c) const {
  GradedForm r = zero(pres_, degree_);
  for (const auto& [m, a] : terms_) r.add_term(m, a.scaled(c));
  return r;
}

GradedForm GradedForm::wedge(const GradedForm& o) const {
  if (pres_ && o.pres_ && !pres_->same_as(*o.pres_))
    fail(ErrorKind::PresentationMismatch, "forms belong to different presentations");
  GradedForm r = zero(pres_ ? pres_ : o.pres_, degree_ + o.degree_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      if (ma & mb) continue;
      int s = wedge_sign(ma, mb);
      AlgebraElement prod = ca * cb;
      r.add_term(ma | mb, s == 1 ? prod : -prod);
    }
  }
  return r;
}

bool GradedForm::operator==(const GradedForm& o) const {
  require_compat(*this, o);
  return (*this - o).is_zero();
}

std::string GradedForm::to_string() const {
  if (terms_.empty()) return "0";
  if (degree_ == 0) return terms_.begin()->second.to_string();
  std::string out;
  for (const auto& [m, a] : terms_) {
    if (!out.empty()) out += " + ";
    out += mask_to_string(m) + "*(" + a.to_string() + ")";
  }
  return out;
}

GradedForm d0(const AlgebraElement& a) {
  const auto& pres = a.presentation();
  GradedForm r = GradedForm::zero(pres, 1);
  if (!pres) return r;
  for (int i = 1; i <= pres->rank(); ++i) {
    AlgebraElement da = a.derive(i);
    if (!da.is_zero()) r += GradedForm::monomial(pres, 1, 1u << (i - 1), da);
  }
  return r;
}

GradedForm d(const GradedForm& w) {
  const auto& pres = w.presentation();
  GradedForm r = GradedForm::zero(pres, w.degree() + 1);
  if (!pres) return r;
  int p = w.degree();
  for (const auto& [mask, a] : w.terms()) {
    GradedForm ei = GradedForm::monomial(pres, p, mask, AlgebraElement::one(pres));
    GradedForm piece = ei.wedge(d0(a));
    r += (p % 2 == 0) ? piece : -piece;
  }
  return r;
}

GradedForm d1_defining_formula(const GradedForm& w) {
  const auto& pres = w.presentation();
  if (w.degree() != 1) fail(ErrorKind::IndexError, "defining formula applies to one-forms");
  int n = pres->rank();
  GradedForm r = GradedForm::zero(pres, 2);
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      AlgebraElement coeff = AlgebraElement::zero(pres);
      for (int i = 1; i <= n; ++i) {
        AlgebraElement ai = w.coefficient_e(i);
        if (ai.is_zero()) continue;
        AlgebraElement si = AlgebraElement::generator(pres, i);
        AlgebraElement si_star = AlgebraElement::generator_star(pres, i);
        AlgebraElement ai_si_star = ai * si_star;
        coeff += ai_si_star.derive(p) * si.derive(q) - ai_si_star.derive(q) * si.derive(p);
      }
      if (!coeff.is_zero())
        r += GradedForm::monomial(pres, 2, (1u << (p - 1)) | (1u << (q - 1)), coeff);
    }
  }
  return r;
}

}  // namespace ncgeo
