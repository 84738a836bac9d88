#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncgeo/presentation.hpp"

namespace ncgeo {

// Lattice monomial U_1^{m_1} ... U_n^{m_n}, exponents in generator order.
struct TorusWord {
  std::vector<long> exps;
  auto operator<=>(const TorusWord&) const = default;
};

// Freely reduced word: syllables (generator, nonzero exponent), adjacent
// generators distinct.
struct GroupWord {
  std::vector<std::pair<int, long>> syllables;
  auto operator<=>(const GroupWord&) const = default;
};

// S_mu S_nu^*, letters in 1..n. Canonical unless mu and nu both end in n.
struct CuntzWord {
  std::vector<std::uint8_t> mu, nu;
  auto operator<=>(const CuntzWord&) const = default;
};

using Word = std::variant<TorusWord, GroupWord, CuntzWord>;

Word identity_word(const Presentation& pres);
bool is_identity_word(const Word& w);
std::string word_to_string(const Word& w);

// Signed occurrence count of generator i (1-based) in w.
long word_weight(const Word& w, int i);

}  // namespace ncgeo
