#pragma once

#include <string>

#include "daectl/matrix.hpp"
#include "daectl/triple.hpp"

namespace testing {

using daectl::DaeTriple;
using daectl::RatMatrix;
using daectl::Rational;

inline DaeTriple scalar(long e, long a, long b) { return {RatMatrix{{e}}, RatMatrix{{a}}, RatMatrix{{b}}}; }

inline Rational q(const char* text) { return Rational::parse(text); }

}  // namespace testing
