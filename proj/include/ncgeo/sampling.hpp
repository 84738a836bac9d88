#pragma once

#include <cstdint>

#include "ncgeo/tensor.hpp"

namespace ncgeo {

// Deterministic seeded sampler (splitmix64) for property tests and suites;
// identical sequences on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  long range(long lo, long hi);  // inclusive

  Word random_word(const PresentationPtr& pres, int max_len);
  Scalar random_scalar(const PresentationPtr& pres);
  AlgebraElement random_monomial(const PresentationPtr& pres, int max_len);
  AlgebraElement random_element(const PresentationPtr& pres, int max_terms, int max_len);
  GradedForm random_one_form(const PresentationPtr& pres, int max_terms, int max_len);
  TensorBicovector random_tensor(const PresentationPtr& pres, int max_len);
  // Freely reduced word with vanishing signed exponent sums, built from
  // commutators (free group backend).
  Word random_null_word(const PresentationPtr& pres);

 private:
  std::uint64_t state_;
};

}  // namespace ncgeo
