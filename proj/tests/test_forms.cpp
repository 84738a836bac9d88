#include <doctest.h>

#include "ncgeo/errors.hpp"
#include "ncgeo/metric.hpp"
#include "ncgeo/sampling.hpp"

using namespace ncgeo;

namespace {

PresentationPtr torus2() {
  return Presentation::nc_torus(2, {{Rat(0), Rat(1, 4)}, {Rat(-1, 4), Rat(0)}});
}
PresentationPtr torus3() {
  return Presentation::nc_torus(3, {{Rat(0), Rat(1, 4), Rat(1, 5)},
                                    {Rat(-1, 4), Rat(0), Rat(1, 3)},
                                    {Rat(-1, 5), Rat(0) - Rat(1, 3), Rat(0)}});
}
PresentationPtr fgroup3() { return Presentation::free_group(3); }
PresentationPtr cuntz3() { return Presentation::cuntz(3); }

AlgebraElement gen(const PresentationPtr& p, int i) { return AlgebraElement::generator(p, i); }

std::vector<PresentationPtr> rank3_backends() { return {torus3(), fgroup3(), cuntz3()}; }

}  // namespace

TEST_CASE("d0 on generators and products") {
  auto p = torus2();
  CHECK(d0(AlgebraElement::one(p)).is_zero());
  CHECK(d0(gen(p, 1)) == GradedForm::basis(p, 1) * gen(p, 1));
  AlgebraElement u1u2 = gen(p, 1) * gen(p, 2);
  CHECK(d0(u1u2) == GradedForm::basis(p, 1) * u1u2 + GradedForm::basis(p, 2) * u1u2);
}

TEST_CASE("d kills the basis one-forms and squares to zero") {
  for (const auto& p : rank3_backends()) {
    for (int i = 1; i <= p->rank(); ++i) CHECK(d(GradedForm::basis(p, i)).is_zero());
    Sampler s(7);
    for (int t = 0; t < 100; ++t) {
      AlgebraElement a = s.random_element(p, 2, 2);
      CHECK(d(d0(a)).is_zero());
      GradedForm w = s.random_one_form(p, 2, 2);
      CHECK(d(d(w)).is_zero());
    }
  }
}

TEST_CASE("one-form differential equals the curl expression") {
  auto p = torus2();
  // d(e_1 U_2) = -e_1^e_2 U_2.
  GradedForm w = GradedForm::basis(p, 1) * gen(p, 2);
  GradedForm expect = -(GradedForm::basis_two(p, 1, 2) * gen(p, 2));
  CHECK(d(w) == expect);
  CHECK(d1_defining_formula(w) == expect);
}

TEST_CASE("the defining formula for d agrees with the curl on 100 seeded one-forms") {
  for (const auto& p : rank3_backends()) {
    Sampler s(11);
    for (int t = 0; t < 100; ++t) {
      GradedForm w = s.random_one_form(p, 2, 2);
      CHECK(d1_defining_formula(w) == d(w));
    }
  }
}

TEST_CASE("graded differential in degree two") {
  auto p = torus3();
  CHECK(d(GradedForm::basis_two(p, 1, 2)).is_zero());
  GradedForm w = GradedForm::basis_two(p, 1, 2) * gen(p, 3);
  GradedForm expect = GradedForm::monomial(p, 3, 0b111u, gen(p, 3));
  CHECK(d(w) == expect);
}

TEST_CASE("wedge is antisymmetric with right coefficients") {
  auto p = torus2();
  AlgebraElement a = gen(p, 1), b = gen(p, 2);
  CHECK((GradedForm::basis(p, 1) * a).wedge(GradedForm::basis(p, 2) * b) ==
        GradedForm::basis_two(p, 1, 2) * (a * b));
  CHECK((GradedForm::basis(p, 1) * a).wedge(GradedForm::basis(p, 1) * b).is_zero());
  CHECK(GradedForm::basis(p, 2).wedge(GradedForm::basis(p, 1)) == -GradedForm::basis_two(p, 1, 2));
}

TEST_CASE("wedge is associative on seeded forms") {
  auto p = torus3();
  Sampler s(13);
  for (int t = 0; t < 50; ++t) {
    GradedForm a = s.random_one_form(p, 2, 2);
    GradedForm b = s.random_one_form(p, 2, 2);
    GradedForm c = s.random_one_form(p, 2, 2);
    CHECK(a.wedge(b).wedge(c) == a.wedge(b.wedge(c)));
  }
}

TEST_CASE("degree beyond the rank vanishes") {
  auto p = torus2();
  GradedForm top = GradedForm::basis_two(p, 1, 2);
  CHECK(top.wedge(GradedForm::basis(p, 1)).is_zero());
  CHECK(d(top).is_zero());
}

TEST_CASE("sigma flips the central basis") {
  auto p = torus2();
  Sampler s(17);
  AlgebraElement a = gen(p, 1);
  TensorBicovector t(p);
  t.set_entry(1, 2, a);
  TensorBicovector expect(p);
  expect.set_entry(2, 1, a);
  CHECK(t.sigma() == expect);
  for (int it = 0; it < 100; ++it) {
    TensorBicovector r = s.random_tensor(p, 2);
    CHECK(r.sigma().sigma() == r);
    // wedge o P_sym = 0 and wedge o sigma = -wedge.
    CHECK(r.p_sym().wedge().is_zero());
    CHECK(r.sigma().wedge() == -(r.wedge()));
  }
}

TEST_CASE("the canonical bilinear metric sums the diagonal") {
  for (const auto& p : rank3_backends()) {
    Metric g0 = Metric::euclidean(p);
    Sampler s(19);
    TensorBicovector t = s.random_tensor(p, 2);
    AlgebraElement expect = AlgebraElement::zero(p);
    for (int i = 1; i <= p->rank(); ++i) expect += t.entry(i, i);
    CHECK(g0.apply(t) == expect);
  }
}

TEST_CASE("conformal metric entries and inverse") {
  auto p = torus2();
  Metric g = Metric::conformal(p, gen(p, 1));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      if (i == j) {
        CHECK(g.entry(i, j) == gen(p, 1));
        CHECK(g.inverse_entry(i, j) == AlgebraElement::generator_pow(p, 1, -1));
      } else {
        CHECK(g.entry(i, j).is_zero());
        CHECK(g.inverse_entry(i, j).is_zero());
      }
    }
}

TEST_CASE("the rank-two diagonal family diag(k, 1)") {
  auto p = torus2();
  Metric g = Metric::diagonal(p, {gen(p, 2), AlgebraElement::one(p)});
  CHECK(g.determinant() == gen(p, 2));
  CHECK(g.inverse_entry(1, 1) == AlgebraElement::generator_pow(p, 2, -1));
  CHECK(g.inverse_entry(2, 2) == AlgebraElement::one(p));
  Sampler s(23);
  TensorBicovector t = s.random_tensor(p, 2);
  CHECK(g.apply(t) == gen(p, 2) * t.entry(1, 1) + t.entry(2, 2));
}

TEST_CASE("metric inverse identities hold") {
  auto p = torus2();
  std::vector<Metric> metrics;
  metrics.push_back(Metric::euclidean(p));
  metrics.push_back(Metric::conformal(p, gen(p, 1) * gen(p, 2)));
  metrics.push_back(Metric::diagonal(p, {gen(p, 2), AlgebraElement::one(p)}));
  {
    // Off-diagonal example: g = [[0, U1], [U1, 0]], det = -U1^2.
    std::vector<std::vector<AlgebraElement>> e{{AlgebraElement::zero(p), gen(p, 1)},
                                               {gen(p, 1), AlgebraElement::zero(p)}};
    metrics.push_back(Metric::build(p, e));
  }
  for (const auto& g : metrics) {
    for (int i = 1; i <= 2; ++i)
      for (int k = 1; k <= 2; ++k) {
        AlgebraElement s1 = AlgebraElement::zero(p), s2 = AlgebraElement::zero(p);
        for (int j = 1; j <= 2; ++j) {
          s1 += g.inverse_entry(i, j) * g.entry(j, k);
          s2 += g.entry(i, j) * g.inverse_entry(j, k);
        }
        AlgebraElement expect =
            (i == k) ? AlgebraElement::one(p) : AlgebraElement::zero(p);
        CHECK(s1 == expect);
        CHECK(s2 == expect);
      }
    // Symmetry at the tensor level: g o sigma = g.
    Sampler s(29);
    for (int t = 0; t < 20; ++t) {
      TensorBicovector tb = s.random_tensor(p, 2);
      CHECK(g.apply(tb.sigma()) == g.apply(tb));
    }
  }
}

TEST_CASE("metric validation errors") {
  auto p = torus2();
  AlgebraElement u1 = gen(p, 1), u2 = gen(p, 2);
  AlgebraElement zero = AlgebraElement::zero(p), one = AlgebraElement::one(p);

  CHECK_THROWS_WITH_AS((void)Metric::build(p, {{one, u1}, {zero, one}}, std::nullopt, ""),
                       doctest::Contains("g_12"), Error);
  try {
    (void)Metric::build(p, {{u1, u2}, {u2, u1}});
    FAIL("expected NotStronglySigmaCompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStronglySigmaCompatible);
  }
  try {
    (void)Metric::diagonal(p, {u1 + u2, one});
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
  // A wrong certified inverse is rejected.
  try {
    (void)Metric::conformal(p, u1, u2);
    FAIL("expected NotInvertible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("centrality: coefficients commute past the basis") {
  auto p = cuntz3();
  Sampler s(37);
  for (int t = 0; t < 40; ++t) {
    AlgebraElement a = s.random_element(p, 2, 2);
    AlgebraElement b = s.random_element(p, 2, 2);
    GradedForm w = s.random_one_form(p, 2, 2);
    // (w a) b = w (a b).
    CHECK((w * a) * b == w * (a * b));
    // e_I a = a e_I for the bare basis forms; on a general form the left and
    // right actions differ exactly by the coefficient order.
    for (int i = 1; i <= p->rank(); ++i)
      CHECK(GradedForm::basis(p, i) * a == a * GradedForm::basis(p, i));
    GradedForm left_expected = GradedForm::zero(p, w.degree());
    for (const auto& [m, c] : w.terms())
      left_expected += GradedForm::monomial(p, w.degree(), m, a * c);
    CHECK(a * w == left_expected);
  }
}
