#include "ncgeo/element.hpp"

#include <algorithm>

#include "ncgeo/errors.hpp"

namespace ncgeo {

namespace {

void require_same(const PresentationPtr& a, const PresentationPtr& b) {
  if (a && b && !a->same_as(*b))
    fail(ErrorKind::PresentationMismatch, "elements belong to different presentations");
}

// Cocycle exponent of U^m * U^{m'} = e^{2 pi i c} U^{m+m'}: c = sum_{k>l} m_k m'_l theta_kl.
Scalar torus_cocycle(const Presentation& pres, const std::vector<long>& m,
                     const std::vector<long>& mp) {
  int n = pres.rank();
  if (pres.float_mode()) {
    double turns = 0.0;
    for (int k = 2; k <= n; ++k)
      for (int l = 1; l < k; ++l)
        turns += static_cast<double>(m[static_cast<std::size_t>(k - 1)]) *
                 static_cast<double>(mp[static_cast<std::size_t>(l - 1)]) * pres.theta_double(k, l);
    return pres.phase_double(turns);
  }
  Rat turns(0);
  for (int k = 2; k <= n; ++k)
    for (int l = 1; l < k; ++l)
      turns += Rat(m[static_cast<std::size_t>(k - 1)]) * Rat(mp[static_cast<std::size_t>(l - 1)]) *
               pres.theta(k, l);
  return pres.phase(turns);
}

GroupWord group_concat(const GroupWord& a, const GroupWord& b) {
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

bool is_prefix(const std::vector<std::uint8_t>& p, const std::vector<std::uint8_t>& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// Word product; nullopt means the product is zero (Cuntz orthogonality).
std::optional<std::pair<Scalar, Word>> word_mul(const Presentation& pres, const Word& a,
                                                const Word& b) {
  if (const auto* ta = std::get_if<TorusWord>(&a)) {
    const auto& tb = std::get<TorusWord>(b);
    TorusWord r = *ta;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += tb.exps[i];
    return std::make_pair(torus_cocycle(pres, ta->exps, tb.exps), Word{std::move(r)});
  }
  if (const auto* ga = std::get_if<GroupWord>(&a)) {
    return std::make_pair(pres.scalar_one(), Word{group_concat(*ga, std::get<GroupWord>(b))});
  }
  const auto& ca = std::get<CuntzWord>(a);
  const auto& cb = std::get<CuntzWord>(b);
  // (S_mu S_nu^*)(S_alpha S_beta^*): cancel nu against alpha.
  if (is_prefix(ca.nu, cb.mu)) {
    CuntzWord r;
    r.mu = ca.mu;
    r.mu.insert(r.mu.end(), cb.mu.begin() + static_cast<long>(ca.nu.size()), cb.mu.end());
    r.nu = cb.nu;
    return std::make_pair(pres.scalar_one(), Word{std::move(r)});
  }
  if (is_prefix(cb.mu, ca.nu)) {
    CuntzWord r;
    r.mu = ca.mu;
    r.nu = cb.nu;
    r.nu.insert(r.nu.end(), ca.nu.begin() + static_cast<long>(cb.mu.size()), ca.nu.end());
    return std::make_pair(pres.scalar_one(), Word{std::move(r)});
  }
  return std::nullopt;
}

std::pair<Scalar, Word> word_star(const Presentation& pres, const Word& w) {
  if (const auto* t = std::get_if<TorusWord>(&w)) {
    // (U^m)^* = e^{2 pi i c(m,m)} U^{-m}.
    TorusWord r;
    r.exps.reserve(t->exps.size());
    for (long e : t->exps) r.exps.push_back(-e);
    return {torus_cocycle(pres, t->exps, t->exps), Word{std::move(r)}};
  }
  if (const auto* g = std::get_if<GroupWord>(&w)) {
    GroupWord r;
    for (auto it = g->syllables.rbegin(); it != g->syllables.rend(); ++it)
      r.syllables.emplace_back(it->first, -it->second);
    return {pres.scalar_one(), Word{std::move(r)}};
  }
  const auto& c = std::get<CuntzWord>(w);
  return {pres.scalar_one(), Word{CuntzWord{c.nu, c.mu}}};
}

}  // namespace

AlgebraElement AlgebraElement::zero(PresentationPtr pres) {
  AlgebraElement e;
  e.pres_ = std::move(pres);
  return e;
}

AlgebraElement AlgebraElement::one(PresentationPtr pres) {
  return from_scalar(std::move(pres), Scalar::one());
}

AlgebraElement AlgebraElement::from_scalar(PresentationPtr pres, const Scalar& c) {
  AlgebraElement e;
  Scalar cc = (pres && pres->float_mode() && !c.is_float()) ? Scalar::from_complex(c.to_complex()) : c;
  e.pres_ = std::move(pres);
  if (!cc.is_zero()) e.terms_.emplace(identity_word(*e.pres_), cc);
  return e;
}

AlgebraElement AlgebraElement::from_rational(PresentationPtr pres, const Rat& q) {
  Scalar c = pres->scalar_from_rational(q);
  return from_scalar(std::move(pres), c);
}

AlgebraElement AlgebraElement::monomial(PresentationPtr pres, Word w, Scalar c) {
  AlgebraElement e;
  e.pres_ = std::move(pres);
  if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
  e.normalize();
  return e;
}

AlgebraElement AlgebraElement::generator(PresentationPtr pres, int i) {
  int n = pres->rank();
  if (i < 1 || i > n) fail(ErrorKind::UnknownGenerator, "generator index out of range");
  switch (pres->backend()) {
    case Backend::NCTorus: {
      TorusWord w{std::vector<long>(static_cast<std::size_t>(n), 0)};
      w.exps[static_cast<std::size_t>(i - 1)] = 1;
      return monomial(pres, Word{std::move(w)}, pres->scalar_one());
    }
    case Backend::FreeGroup: {
      GroupWord w;
      w.syllables.emplace_back(i, 1);
      return monomial(pres, Word{std::move(w)}, pres->scalar_one());
    }
    case Backend::Cuntz: {
      CuntzWord w;
      w.mu.push_back(static_cast<std::uint8_t>(i));
      return monomial(pres, Word{std::move(w)}, pres->scalar_one());
    }
  }
  return zero(pres);
}

AlgebraElement AlgebraElement::generator_star(PresentationPtr pres, int i) {
  return generator(std::move(pres), i).star();
}

AlgebraElement AlgebraElement::generator_pow(PresentationPtr pres, int i, long k) {
  int n = pres->rank();
  if (i < 1 || i > n) fail(ErrorKind::UnknownGenerator, "generator index out of range");
  switch (pres->backend()) {
    case Backend::NCTorus: {
      TorusWord w{std::vector<long>(static_cast<std::size_t>(n), 0)};
      w.exps[static_cast<std::size_t>(i - 1)] = k;
      return monomial(pres, Word{std::move(w)}, pres->scalar_one());
    }
    case Backend::FreeGroup: {
      GroupWord w;
      if (k != 0) w.syllables.emplace_back(i, k);
      return monomial(pres, Word{std::move(w)}, pres->scalar_one());
    }
    case Backend::Cuntz:
      if (k < 0) fail(ErrorKind::NotInvertible, "Cuntz generators have no inverses");
      return generator(pres, i).pow(k);
  }
  return zero(pres);
}

bool AlgebraElement::is_one() const {
  return terms_.size() == 1 && is_identity_word(terms_.begin()->first) &&
         terms_.begin()->second.is_one();
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && is_identity_word(terms_.begin()->first));
}

Scalar AlgebraElement::scalar_value() const {
  if (terms_.empty()) return Scalar::zero();
  if (!is_scalar()) fail(ErrorKind::PresentationMismatch, "element is not scalar: " + to_string());
  return terms_.begin()->second;
}

Scalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

void AlgebraElement::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  if (!pres_ || pres_->backend() != Backend::Cuntz) return;
  // Eliminate S_{mu n} S_{nu n}^* = S_mu S_nu^* - sum_{i<n} S_{mu i} S_{nu i}^*.
  const std::uint8_t last = static_cast<std::uint8_t>(pres_->rank());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      const auto& w = std::get<CuntzWord>(it->first);
      if (w.mu.empty() || w.nu.empty() || w.mu.back() != last || w.nu.back() != last) continue;
      Scalar c = it->second;
      CuntzWord base{std::vector<std::uint8_t>(w.mu.begin(), w.mu.end() - 1),
                     std::vector<std::uint8_t>(w.nu.begin(), w.nu.end() - 1)};
      terms_.erase(it);
      add_term(Word{base}, c);
      for (std::uint8_t i = 1; i < last; ++i) {
        CuntzWord sib = base;
        sib.mu.push_back(i);
        sib.nu.push_back(i);
        add_term(Word{std::move(sib)}, -c);
      }
      changed = true;
      break;
    }
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same(pres_, o.pres_);
  AlgebraElement r = *this;
  if (!r.pres_) r.pres_ = o.pres_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  r.normalize();
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r = zero(pres_);
  if (c.is_zero()) return r;
  for (const auto& [w, t] : terms_) {
    Scalar p = c * t;
    if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
  }
  r.normalize();
  return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same(pres_, o.pres_);
  AlgebraElement r = zero(pres_ ? pres_ : o.pres_);
  if (!r.pres_) return r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      auto prod = word_mul(*r.pres_, wa, wb);
      if (!prod) continue;
      r.add_term(prod->second, ca * cb * prod->first);
    }
  }
  r.normalize();
  return r;
}

AlgebraElement AlgebraElement::star() const {
  AlgebraElement r = zero(pres_);
  if (!pres_) return r;
  for (const auto& [w, c] : terms_) {
    auto [phase, sw] = word_star(*pres_, w);
    r.add_term(sw, c.conj() * phase);
  }
  r.normalize();
  return r;
}

AlgebraElement AlgebraElement::derive(int i) const {
  if (!pres_) return *this;
  if (i < 1 || i > pres_->rank()) fail(ErrorKind::IndexError, "derivation index out of range");
  AlgebraElement r = zero(pres_);
  for (const auto& [w, c] : terms_) {
    long wt = word_weight(w, i);
    if (wt == 0) continue;
    r.add_term(w, c * pres_->scalar_from_rational(Rat(wt)));
  }
  r.normalize();
  return r;
}

AlgebraElement AlgebraElement::pow(long k) const {
  if (!pres_) fail(ErrorKind::PresentationMismatch, "pow of unbound element");
  if (k < 0) {
    auto inv = inverse();
    if (!inv) fail(ErrorKind::NotInvertible, "element has no inverse in the algebra: " + to_string());
    return inv->pow(-k);
  }
  AlgebraElement r = one(pres_), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::optional<AlgebraElement> AlgebraElement::inverse() const {
  if (!pres_ || terms_.size() != 1) return std::nullopt;
  const auto& [w, c] = *terms_.begin();
  if (c.is_zero()) return std::nullopt;
  switch (pres_->backend()) {
    case Backend::Cuntz: {
      if (!is_identity_word(w)) return std::nullopt;
      return from_scalar(pres_, c.inv());
    }
    case Backend::NCTorus: {
      const auto& t = std::get<TorusWord>(w);
      TorusWord winv;
      winv.exps.reserve(t.exps.size());
      for (long e : t.exps) winv.exps.push_back(-e);
      // Fix the phase so that inv * this == 1.
      AlgebraElement cand = monomial(pres_, Word{winv}, pres_->scalar_one());
      Scalar residue = (cand * *this).scalar_value();  // phase * c
      return cand.scaled(residue.inv());
    }
    case Backend::FreeGroup: {
      auto [phase, sw] = word_star(*pres_, w);
      (void)phase;
      return monomial(pres_, sw, c.inv());
    }
  }
  return std::nullopt;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  require_same(pres_, o.pres_);
  if (pres_ && pres_->float_mode()) {
    // Tolerance comparison via the difference.
    return (*this - o).is_zero();
  }
  return terms_ == o.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string body;
    bool neg = false;
    if (is_identity_word(w)) {
      body = c.to_string();
      if (!first && !body.empty() && body[0] == '-') {
        neg = true;
        body = body.substr(1);
      }
    } else {
      std::string ws = word_to_string(w);
      if (c.is_one()) {
        body = ws;
      } else if ((-c).is_one()) {
        neg = true;
        body = ws;
      } else if (c.term_count() == 1) {
        std::string cs = c.to_string();
        if (!cs.empty() && cs[0] == '-') {
          neg = true;
          cs = cs.substr(1);
        }
        body = cs + "*" + ws;
      } else {
        body = "(" + c.to_string() + ")*" + ws;
      }
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

AlgebraElement raw_combination(PresentationPtr pres, std::map<Word, Scalar> terms) {
  AlgebraElement e;
  e.pres_ = std::move(pres);
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

bool commute_check(const AlgebraElement& a, const AlgebraElement& b) {
  return (a * b - b * a).is_zero();
}

}  // namespace ncgeo
