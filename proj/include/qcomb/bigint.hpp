#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcomb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient under the convention used throughout the library:
// C(a, 0) = 1 for every integer a, C(a, b) = a!/(b!(a-b)!) for 0 <= b <= a,
// and 0 otherwise.
BigInt binomial(long long a, long long b);

BigInt factorial(int n);

/// a(a+1)...(a+b-1), with a^{rising 0} = 1. Throws std::invalid_argument for b < 0.
BigInt rising_int(const BigInt& a, int b);

/// base^e for e >= 0, with 0^0 = 1.
BigInt pow_int(const BigInt& base, int e);

/// (-1)^e
inline int neg_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

} // namespace qcomb
