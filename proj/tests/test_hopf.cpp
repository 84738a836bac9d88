#include <doctest.h>

#include "ncgeo/errors.hpp"
#include "ncgeo/hopf.hpp"
#include "ncgeo/sampling.hpp"

using namespace ncgeo;

namespace {

PresentationPtr fgroup(int n) { return Presentation::free_group(n); }

AlgebraElement gen(const PresentationPtr& p, int i) { return AlgebraElement::generator(p, i); }

AlgebraElement word_elem(const PresentationPtr& p, const Word& w) {
  return AlgebraElement::monomial(p, w, Scalar::one());
}

}  // namespace

TEST_CASE("coproduct is group-like on reduced words") {
  auto p = fgroup(2);
  CoalgebraElement one = coproduct(AlgebraElement::one(p));
  CHECK(one.terms().size() == 1);
  CHECK(one.terms().begin()->second == Scalar::one());

  AlgebraElement sum = gen(p, 1) + gen(p, 2);
  CoalgebraElement d = coproduct(sum);
  CHECK(d.terms().size() == 2);
  for (const auto& [key, c] : d.terms()) {
    CHECK(key.first == key.second);
    CHECK(c == Scalar::one());
  }
}

TEST_CASE("coproduct is cocommutative, coassociative and counital") {
  auto p = fgroup(2);
  Sampler s(101);
  for (int t = 0; t < 50; ++t) {
    AlgebraElement a = s.random_element(p, 3, 3);
    CoalgebraElement da = coproduct(a);
    CHECK(da.flip() == da);
    // Coassociativity, literally: apply the coproduct to each leg.
    std::map<std::tuple<Word, Word, Word>, Scalar> first_leg, second_leg;
    for (const auto& [key, c] : da.terms()) {
      CoalgebraElement inner_first = coproduct(AlgebraElement::monomial(p, key.first, c));
      for (const auto& [inner, ci] : inner_first.terms()) {
        auto k3 = std::make_tuple(inner.first, inner.second, key.second);
        auto [it, inserted] = first_leg.emplace(k3, ci);
        if (!inserted) it->second = it->second + ci;
      }
      CoalgebraElement inner_second = coproduct(AlgebraElement::monomial(p, key.second, c));
      for (const auto& [inner, ci] : inner_second.terms()) {
        auto k3 = std::make_tuple(key.first, inner.first, inner.second);
        auto [it, inserted] = second_leg.emplace(k3, ci);
        if (!inserted) it->second = it->second + ci;
      }
    }
    CHECK(first_leg == second_leg);
    // Counit applied to either leg returns the element.
    AlgebraElement left = AlgebraElement::zero(p);
    AlgebraElement right = AlgebraElement::zero(p);
    for (const auto& [key, c] : da.terms()) {
      left += AlgebraElement::monomial(p, key.second, c);   // (eps (x) id)
      right += AlgebraElement::monomial(p, key.first, c);   // (id (x) eps)
    }
    CHECK(left == a);
    CHECK(right == a);
  }
}

TEST_CASE("the coproduct rejects other backends") {
  auto t = Presentation::nc_torus(2, {{Rat(0), Rat(1, 4)}, {Rat(-1, 4), Rat(0)}});
  try {
    (void)coproduct(AlgebraElement::generator(t, 1));
    FAIL("expected UnsupportedBackend");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedBackend);
  }
}

TEST_CASE("basis one-forms are left and right invariant") {
  for (int n : {2, 3}) {
    auto p = fgroup(n);
    for (int i = 1; i <= n; ++i) {
      CHECK(basis_one_form_coaction(p, i, MixedCoaction::Side::Left) ==
            MixedCoaction::unit_basis(p, i, MixedCoaction::Side::Left));
      CHECK(basis_one_form_coaction(p, i, MixedCoaction::Side::Right) ==
            MixedCoaction::unit_basis(p, i, MixedCoaction::Side::Right));
    }
  }
}

TEST_CASE("coaction examples") {
  auto p = fgroup(2);
  // Commutator word: d(b) = 0, so the coaction of (1, b) vanishes.
  AlgebraElement b = gen(p, 1) * gen(p, 2) * gen(p, 1).star() * gen(p, 2).star();
  CHECK(d0(b).is_zero());
  MixedCoaction m =
      coaction_one_form({{AlgebraElement::one(p), b}}, MixedCoaction::Side::Left);
  CHECK(m.is_zero());

  // Exact cancellation (a, b) + (-a, b).
  Sampler s(55);
  AlgebraElement a = s.random_element(p, 2, 2);
  AlgebraElement c = s.random_element(p, 2, 3);
  CHECK(coaction_one_form({{a, c}, {-a, c}}, MixedCoaction::Side::Left).is_zero());
  CHECK(coaction_one_form({{a, c}, {-a, c}}, MixedCoaction::Side::Right).is_zero());
}

TEST_CASE("covariance requires an actual relation") {
  auto p = fgroup(2);
  try {
    (void)check_covariance({{AlgebraElement::one(p), gen(p, 1)}});
    FAIL("expected NotARelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotARelation);
  }
}

TEST_CASE("generated relation instances satisfy both covariance conditions") {
  for (int n : {2, 3}) {
    auto p = fgroup(n);
    Sampler s(2025);
    for (int t = 0; t < 100; ++t) {
      std::vector<std::pair<AlgebraElement, AlgebraElement>> pairs;
      pairs.emplace_back(s.random_element(p, 2, 2), word_elem(p, s.random_null_word(p)));
      if (s.range(0, 1)) {
        AlgebraElement a = s.random_element(p, 2, 2);
        AlgebraElement b = s.random_element(p, 2, 3);
        pairs.emplace_back(a, b);
        pairs.emplace_back(-a, b);
      }
      CovarianceResult res = check_covariance(pairs);
      CHECK(res.left);
      CHECK(res.right);
    }
  }
}
