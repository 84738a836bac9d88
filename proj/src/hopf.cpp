#include "ncgeo/hopf.hpp"

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

void require_free_group(const PresentationPtr& pres) {
  if (!pres || pres->backend() != Backend::FreeGroup)
    fail(ErrorKind::UnsupportedBackend, "coproduct is defined on the free-group backend only");
}

GroupWord concat_reduced(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  for (const auto& syl : b.syllables) {
    if (!r.syllables.empty() && r.syllables.back().first == syl.first) {
      r.syllables.back().second += syl.second;
      if (r.syllables.back().second == 0) r.syllables.pop_back();
    } else {
      r.syllables.push_back(syl);
    }
  }
  return r;
}

Word word_concat(const Word& u, const Word& v) {
  return Word{concat_reduced(std::get<GroupWord>(u), std::get<GroupWord>(v))};
}

}  // namespace

void CoalgebraElement::add(const Word& u, const Word& v, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(u, v);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoalgebraElement CoalgebraElement::operator+(const CoalgebraElement& o) const {
  CoalgebraElement r = *this;
  if (!r.pres_) r.pres_ = o.pres_;
  for (const auto& [k, c] : o.terms_) r.add(k.first, k.second, c);
  return r;
}

CoalgebraElement CoalgebraElement::operator-(const CoalgebraElement& o) const {
  CoalgebraElement neg = o;
  for (auto& [k, c] : neg.terms_) c = -c;
  return *this + neg;
}

CoalgebraElement CoalgebraElement::flip() const {
  CoalgebraElement r(pres_);
  for (const auto& [k, c] : terms_) r.add(k.second, k.first, c);
  return r;
}

std::string CoalgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*(" + word_to_string(k.first) + " (x) " +
           word_to_string(k.second) + ")";
  }
  return out;
}

MixedCoaction MixedCoaction::unit_basis(PresentationPtr pres, int i, Side side) {
  MixedCoaction m(pres, side);
  Word e = identity_word(*pres);
  m.add(i, e, e, pres->scalar_one());
  return m;
}

void MixedCoaction::add(int i, const Word& u, const Word& v, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(i, u, v);
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string MixedCoaction::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    const auto& [i, u, v] = k;
    if (!out.empty()) out += " + ";
    std::string lhs = word_to_string(u), rhs = word_to_string(v);
    std::string ei = "e" + std::to_string(i);
    if (side_ == Side::Left)
      out += "(" + c.to_string() + ")*(" + lhs + " (x) " + ei + "*" + rhs + ")";
    else
      out += "(" + c.to_string() + ")*(" + ei + "*" + lhs + " (x) " + rhs + ")";
  }
  return out;
}

CoalgebraElement coproduct(const AlgebraElement& a) {
  require_free_group(a.presentation());
  CoalgebraElement r(a.presentation());
  for (const auto& [w, c] : a.terms()) r.add(w, w, c);
  return r;
}

MixedCoaction coaction_one_form(const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs,
                                MixedCoaction::Side side) {
  PresentationPtr pres;
  for (const auto& [a, b] : pairs) {
    if (a.presentation()) pres = a.presentation();
    if (b.presentation()) pres = b.presentation();
  }
  require_free_group(pres);
  MixedCoaction out(pres, side);
  int n = pres->rank();
  for (const auto& [a, b] : pairs) {
    // Delta(b) = sum c'_v (v, v); (id (x) d) pushes d onto the second leg,
    // d(delta_v) = sum_i p_i(v) e_i delta_v; then multiply by Delta(a_k).
    for (const auto& [u, cu] : a.terms()) {
      for (const auto& [v, cv] : b.terms()) {
        Word uv = word_concat(u, v);
        for (int i = 1; i <= n; ++i) {
          long p = word_weight(v, i);
          if (p == 0) continue;
          out.add(i, uv, uv, cu * cv * pres->scalar_from_rational(Rat(p)));
        }
      }
    }
  }
  return out;
}

CovarianceResult check_covariance(
    const std::vector<std::pair<AlgebraElement, AlgebraElement>>& pairs) {
  PresentationPtr pres;
  for (const auto& [a, b] : pairs) {
    if (a.presentation()) pres = a.presentation();
    if (b.presentation()) pres = b.presentation();
  }
  require_free_group(pres);
  // a d(b) = sum_i e_i (a d_i(b)) since the basis is central; keep the
  // module order a_k d(b_k).
  GradedForm rel = GradedForm::zero(pres, 1);
  for (const auto& [a, b] : pairs) {
    for (int i = 1; i <= pres->rank(); ++i) {
      AlgebraElement c = a * b.derive(i);
      if (!c.is_zero()) rel += GradedForm::monomial(pres, 1, 1u << (i - 1), c);
    }
  }
  if (!rel.is_zero())
    fail(ErrorKind::NotARelation, "sum a_k d(b_k) != 0: " + rel.to_string());
  CovarianceResult res;
  res.left = coaction_one_form(pairs, MixedCoaction::Side::Left).is_zero();
  res.right = coaction_one_form(pairs, MixedCoaction::Side::Right).is_zero();
  return res;
}

MixedCoaction basis_one_form_coaction(PresentationPtr pres, int i, MixedCoaction::Side side) {
  require_free_group(pres);
  AlgebraElement gi = AlgebraElement::generator(pres, i);
  return coaction_one_form({{gi.star(), gi}}, side);
}

}  // namespace ncgeo
