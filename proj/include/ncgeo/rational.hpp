#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ncgeo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string rat_to_string(const Rat& r);

// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rat rat_from_string(const std::string& s);

// Representative of r modulo 1 in [0, 1).
Rat rat_mod_one(const Rat& r);

long to_long(const Int& v);

}  // namespace ncgeo
