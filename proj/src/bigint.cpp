#include "qcomb/bigint.hpp"

#include <stdexcept>

namespace qcomb {

BigInt binomial(long long a, long long b)
{
    if (b == 0) {
        return 1;
    }
    if (b < 0 || a < b) {
        return 0;
    }
    if (b > a - b) {
        b = a - b;
    }
    BigInt result = 1;
    for (long long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

BigInt factorial(int n)
{
    if (n < 0) {
        throw std::invalid_argument("factorial: negative argument");
    }
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

BigInt rising_int(const BigInt& a, int b)
{
    if (b < 0) {
        throw std::invalid_argument("rising_int: negative length");
    }
    BigInt result = 1;
    for (int i = 0; i < b; ++i) {
        result *= a + i;
    }
    return result;
}

BigInt pow_int(const BigInt& base, int e)
{
    if (e < 0) {
        throw std::invalid_argument("pow_int: negative exponent");
    }
    BigInt result = 1;
    for (int i = 0; i < e; ++i) {
        result *= base;
    }
    return result;
}

std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& text)
{
    if (text.empty()) {
        throw std::invalid_argument("parse_bigint: empty string");
    }
    std::size_t pos = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (pos == text.size()) {
        throw std::invalid_argument("parse_bigint: no digits");
    }
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("parse_bigint: not a decimal integer: " + text);
        }
    }
    return BigInt(text[0] == '+' ? text.substr(1) : text);
}

} // namespace qcomb
