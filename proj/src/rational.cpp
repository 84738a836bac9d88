#include "ncgeo/rational.hpp"

#include <limits>

#include "ncgeo/errors.hpp"

namespace ncgeo {

std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat rat_from_string(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) fail(ErrorKind::ParseError, "not a rational: '" + s + "'");
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || Int(den) == 0)
    fail(ErrorKind::ParseError, "not a rational: '" + s + "'");
  return Rat(Int(num), Int(den));
}

Rat rat_mod_one(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  Int m = num % den;
  if (m < 0) m += den;
  return Rat(m, den);
}

long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    fail(ErrorKind::ParseError, "integer out of range: " + v.str());
  return v.convert_to<long>();
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotStronglySigmaCompatible: return "NotStronglySigmaCompatible";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DerivationClosureViolated: return "DerivationClosureViolated";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::PositivityNotCertified: return "PositivityNotCertified";
    case ErrorKind::NotARelation: return "NotARelation";
    case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Error";
}

}  // namespace ncgeo
