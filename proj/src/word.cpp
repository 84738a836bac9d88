#include "ncgeo/word.hpp"

namespace ncgeo {

Word identity_word(const Presentation& pres) {
  switch (pres.backend()) {
    case Backend::NCTorus: return TorusWord{std::vector<long>(static_cast<std::size_t>(pres.rank()), 0)};
    case Backend::FreeGroup: return GroupWord{};
    case Backend::Cuntz: return CuntzWord{};
  }
  return GroupWord{};
}

bool is_identity_word(const Word& w) {
  if (const auto* t = std::get_if<TorusWord>(&w)) {
    for (long e : t->exps)
      if (e != 0) return false;
    return true;
  }
  if (const auto* g = std::get_if<GroupWord>(&w)) return g->syllables.empty();
  const auto& c = std::get<CuntzWord>(w);
  return c.mu.empty() && c.nu.empty();
}

std::string word_to_string(const Word& w) {
  if (is_identity_word(w)) return "1";
  std::string out;
  if (const auto* t = std::get_if<TorusWord>(&w)) {
    for (std::size_t i = 0; i < t->exps.size(); ++i) {
      long e = t->exps[i];
      if (e == 0) continue;
      if (!out.empty()) out += "*";
      out += "U" + std::to_string(i + 1);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }
  if (const auto* g = std::get_if<GroupWord>(&w)) {
    for (const auto& [gen, e] : g->syllables) {
      if (!out.empty()) out += "*";
      out += "g" + std::to_string(gen);
      if (e == -1)
        out += "'";
      else if (e != 1)
        out += "^" + std::to_string(e);
    }
    return out;
  }
  const auto& c = std::get<CuntzWord>(w);
  for (std::uint8_t l : c.mu) out += "S" + std::to_string(static_cast<int>(l));
  for (auto it = c.nu.rbegin(); it != c.nu.rend(); ++it)
    out += "S" + std::to_string(static_cast<int>(*it)) + "*";
  return out;
}

long word_weight(const Word& w, int i) {
  if (const auto* t = std::get_if<TorusWord>(&w)) return t->exps[static_cast<std::size_t>(i - 1)];
  if (const auto* g = std::get_if<GroupWord>(&w)) {
    long s = 0;
    for (const auto& [gen, e] : g->syllables)
      if (gen == i) s += e;
    return s;
  }
  const auto& c = std::get<CuntzWord>(w);
  long s = 0;
  for (std::uint8_t l : c.mu)
    if (l == i) ++s;
  for (std::uint8_t l : c.nu)
    if (l == i) --s;
  return s;
}

}  // namespace ncgeo
