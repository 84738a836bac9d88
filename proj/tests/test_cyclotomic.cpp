#include <doctest.h>

#include <cmath>
#include <complex>

#include "ncgeo/cyclotomic.hpp"
#include "ncgeo/errors.hpp"
#include "ncgeo/sampling.hpp"

using namespace ncgeo;

namespace {

Scalar w(long p, long q) { return Scalar::root_of_unity(p, q); }

// Independent sample pool for field-axiom checks.
Scalar sample_scalar(Sampler& s) {
  switch (s.range(0, 7)) {
    case 0: return Scalar::from_rational(Rat(0));
    case 1: return Scalar::from_rational(Rat(-3, 7));
    case 2: return Scalar::from_rational(Rat(5));
    case 3: return w(1, 3);
    case 4: return w(1, 4);
    case 5: return w(3, 8);
    case 6: return w(1, 5) + Scalar::from_rational(Rat(1, 2));
    default: return w(1, 3) * Scalar::from_rational(Rat(2)) - w(1, 8);
  }
}

}  // namespace

TEST_CASE("roots of unity multiply exactly") {
  CHECK(w(1, 4) * w(1, 4) == Scalar::from_rational(Rat(-1)));  // i^2 = -1
  CHECK(w(1, 3) * w(1, 3) * w(1, 3) == Scalar::one());
  CHECK(w(1, 4) == Scalar::imaginary_unit());
  CHECK(w(5, 4) == w(1, 4));  // exponent mod 1
}

TEST_CASE("zeta_8 plus its conjugate reduces modulo x^4 + 1") {
  // zeta_8^7 = zeta_8^3 * zeta_8^4 = -zeta_8^3, so the sum is zeta_8 - zeta_8^3.
  Scalar sum = w(1, 8) + w(1, 8).conj();
  CHECK(sum == w(1, 8) - w(3, 8));
  REQUIRE(sum.conductor() == 8);
  std::map<long, Rat> expect{{1, Rat(1)}, {3, Rat(-1)}};
  CHECK(sum.coefficients() == expect);
  CHECK(std::abs(sum.to_complex().real() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(sum.to_complex().imag()) < 1e-12);
}

TEST_CASE("inverse of zeta_3 via the Phi_3 reduction") {
  // zeta_3^-1 = zeta_3^2 = -1 - zeta_3 modulo x^2 + x + 1.
  Scalar inv = w(1, 3).inv();
  CHECK(inv == Scalar::from_rational(Rat(-1)) - w(1, 3));
  CHECK(inv * w(1, 3) == Scalar::one());
  CHECK_THROWS_AS((void)Scalar::zero().inv(), Error);
}

TEST_CASE("field axioms on seeded samples") {
  Sampler s(12345);
  for (int t = 0; t < 200; ++t) {
    Scalar a = sample_scalar(s), b = sample_scalar(s), c = sample_scalar(s);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one());
  }
}

TEST_CASE("conjugation is a ring involution") {
  Sampler s(777);
  for (int t = 0; t < 100; ++t) {
    Scalar a = sample_scalar(s), b = sample_scalar(s);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK(a.conj().conj() == a);
  }
  CHECK(Scalar::from_rational(Rat(3, 5)).conj() == Scalar::from_rational(Rat(3, 5)));
  CHECK(w(1, 4).conj() == -w(1, 4));
}

TEST_CASE("conductor growth and reduction round-trips") {
  // Mixed-conductor arithmetic lifts to the lcm and reduces back.
  Scalar x = w(1, 3);
  Scalar y = w(1, 4);
  Scalar z = (x + y) - y;
  CHECK(z == x);
  CHECK(z.conductor() == 3);

  CHECK(w(2, 8) == w(1, 4));
  CHECK(w(3, 6) == Scalar::from_rational(Rat(-1)));
  CHECK(w(2, 6) == w(1, 3));
  // zeta_6 = 1 + zeta_3 after folding the even conductor.
  CHECK(w(1, 6) == Scalar::one() + w(1, 3));
  CHECK(w(1, 6).conductor() == 3);
  // Sums that collapse to a subfield minimize their conductor.
  Scalar collapsed = (w(1, 8) + w(1, 3)) - w(1, 8);
  CHECK(collapsed.conductor() == 3);
}

TEST_CASE("exact arithmetic agrees with numeric evaluation") {
  Sampler s(90210);
  for (int t = 0; t < 200; ++t) {
    Scalar a = sample_scalar(s), b = sample_scalar(s);
    CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9);
    CHECK(std::abs((a * b).to_complex() - (a.to_complex() * b.to_complex())) < 1e-9);
    CHECK(std::abs(a.conj().to_complex() - std::conj(a.to_complex())) < 1e-9);
  }
}

TEST_CASE("conductor minimization across prime powers") {
  // zeta_9^3 = zeta_3 must rebase from conductor 9 to 3.
  Scalar z = w(1, 9).pow(3);
  CHECK(z == w(1, 3));
  CHECK(z.conductor() == 3);
  CHECK(w(1, 12).pow(4) == w(1, 3));
  CHECK(w(1, 12).pow(6) == Scalar::from_rational(Rat(-1)));
  CHECK(w(1, 12).pow(6).conductor() == 1);
  // Sum of all primitive fifth roots of unity is -1 (conductor drops to 1).
  Scalar fifth = w(1, 5) + w(2, 5) + w(3, 5) + w(4, 5);
  CHECK(fifth == Scalar::from_rational(Rat(-1)));
  CHECK(fifth.conductor() == 1);
  // Real quadratic combinations stay at their true conductor.
  Scalar root5 = w(1, 5) - w(2, 5) - w(3, 5) + w(4, 5);  // sqrt(5)
  CHECK(root5.conductor() == 5);
  CHECK(std::abs(root5.to_complex().real() - std::sqrt(5.0)) < 1e-12);
  CHECK(root5 * root5 == Scalar::from_rational(Rat(5)));
}

TEST_CASE("canonical printing") {
  CHECK(Scalar::zero().to_string() == "0");
  CHECK(Scalar::one().to_string() == "1");
  CHECK(Scalar::from_rational(Rat(-3, 4)).to_string() == "-3/4");
  CHECK(w(1, 4).to_string() == "i");
  CHECK(w(3, 4).to_string() == "-i");
  CHECK(w(1, 3).to_string() == "w(1/3)");
  CHECK((w(1, 8) - w(3, 8)).to_string() == "w(1/8) - w(3/8)");
  CHECK((Scalar::one() + Scalar::from_rational(Rat(2)) * w(1, 4)).to_string() == "1 + 2*i");
}

TEST_CASE("powers") {
  CHECK(w(1, 8).pow(8) == Scalar::one());
  CHECK(w(1, 3).pow(-1) == w(2, 3));
  CHECK(Scalar::from_rational(Rat(2)).pow(10) == Scalar::from_rational(Rat(1024)));
}

TEST_CASE("float fallback uses tolerance equality") {
  Scalar a = Scalar::from_complex({0.5, 0.25});
  Scalar b = Scalar::from_complex({0.5 + 1e-12, 0.25 - 1e-12});
  CHECK(a == b);
  CHECK(a.is_float());
  CHECK((a * a.inv()) == Scalar::from_complex({1.0, 0.0}));
  CHECK(Scalar::from_complex({1e-12, 0}).is_zero());
}
