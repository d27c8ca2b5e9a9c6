#pragma once

#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace jordan {

using Rational = boost::rational<long long>;

// Boost 1.74 implements int == rational as rational == int, which C++20
// rewrites back into int == rational and recurses forever. Compare
// rationals only with rationals, or use this.
inline bool is_zero(const Rational& r) noexcept { return r.numerator() == 0; }

// Accepts "p/q" or an integer, with optional sign. Throws Error(parse_error).
Rational parse_rational(std::string_view text);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace jordan
