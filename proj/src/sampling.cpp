#include "ncgeo/sampling.hpp"

namespace ncgeo {

std::uint64_t Sampler::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Sampler::range(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Word Sampler::random_word(const PresentationPtr& pres, int max_len) {
  int n = pres->rank();
  switch (pres->backend()) {
    case Backend::NCTorus: {
      TorusWord w{std::vector<long>(static_cast<std::size_t>(n), 0)};
      for (int i = 0; i < n; ++i) w.exps[static_cast<std::size_t>(i)] = range(-max_len, max_len);
      return Word{std::move(w)};
    }
    case Backend::FreeGroup: {
      GroupWord w;
      int len = static_cast<int>(range(0, max_len));
      for (int s = 0; s < len; ++s) {
        int gen = static_cast<int>(range(1, n));
        long e = range(0, 1) ? 1 : -1;
        if (!w.syllables.empty() && w.syllables.back().first == gen) {
          w.syllables.back().second += e;
          if (w.syllables.back().second == 0) w.syllables.pop_back();
        } else {
          w.syllables.emplace_back(gen, e);
        }
      }
      return Word{std::move(w)};
    }
    case Backend::Cuntz: {
      CuntzWord w;
      int lm = static_cast<int>(range(0, max_len));
      int ln = static_cast<int>(range(0, max_len));
      for (int s = 0; s < lm; ++s) w.mu.push_back(static_cast<std::uint8_t>(range(1, n)));
      for (int s = 0; s < ln; ++s) w.nu.push_back(static_cast<std::uint8_t>(range(1, n)));
      return Word{std::move(w)};
    }
  }
  return identity_word(*pres);
}

Scalar Sampler::random_scalar(const PresentationPtr& pres) {
  switch (range(0, 5)) {
    case 0: return pres->scalar_from_rational(Rat(1));
    case 1: return pres->scalar_from_rational(Rat(-1));
    case 2: return pres->scalar_from_rational(Rat(1, 2));
    case 3: return pres->scalar_from_rational(Rat(2));
    case 4: return pres->phase(Rat(1, 3));
    default: return pres->phase(Rat(1, 4));
  }
}

AlgebraElement Sampler::random_monomial(const PresentationPtr& pres, int max_len) {
  return AlgebraElement::monomial(pres, random_word(pres, max_len), random_scalar(pres));
}

AlgebraElement Sampler::random_element(const PresentationPtr& pres, int max_terms, int max_len) {
  AlgebraElement e = AlgebraElement::zero(pres);
  int t = static_cast<int>(range(1, max_terms));
  for (int s = 0; s < t; ++s) e += random_monomial(pres, max_len);
  return e;
}

GradedForm Sampler::random_one_form(const PresentationPtr& pres, int max_terms, int max_len) {
  GradedForm f = GradedForm::zero(pres, 1);
  for (int i = 1; i <= pres->rank(); ++i) {
    if (range(0, 2) == 0) continue;
    f += GradedForm::monomial(pres, 1, 1u << (i - 1), random_element(pres, max_terms, max_len));
  }
  return f;
}

TensorBicovector Sampler::random_tensor(const PresentationPtr& pres, int max_len) {
  TensorBicovector t(pres);
  for (int i = 1; i <= pres->rank(); ++i)
    for (int j = 1; j <= pres->rank(); ++j)
      if (range(0, 1)) t.set_entry(i, j, random_monomial(pres, max_len));
  return t;
}

Word Sampler::random_null_word(const PresentationPtr& pres) {
  // Product of one or two commutators [x, y] = x y x^{-1} y^{-1}.
  auto commutator = [&](const Word& xw, const Word& yw) {
    AlgebraElement x = AlgebraElement::monomial(pres, xw, Scalar::one());
    AlgebraElement y = AlgebraElement::monomial(pres, yw, Scalar::one());
    AlgebraElement c = x * y * x.star() * y.star();
    return c.terms().begin()->first;
  };
  Word w = commutator(random_word(pres, 2), random_word(pres, 2));
  if (range(0, 1)) {
    Word w2 = commutator(random_word(pres, 2), random_word(pres, 2));
    AlgebraElement a = AlgebraElement::monomial(pres, w, Scalar::one()) *
                       AlgebraElement::monomial(pres, w2, Scalar::one());
    w = a.terms().begin()->first;
  }
  return w;
}

}  // namespace ncgeo
