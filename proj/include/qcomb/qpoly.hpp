#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/bigint.hpp"

namespace qcomb {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients. coeffs()[i] is the coefficient of q^i; the trailing
// coefficient is never zero and the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigInt> coeffs);

    static QPoly constant(const BigInt& c);
    static QPoly monomial(const BigInt& c, std::size_t degree);
    /// q^e
    static QPoly q_power(std::size_t e) { return monomial(1, e); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long long degree() const noexcept { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    QPoly& operator*=(const BigInt& scalar);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
    friend QPoly operator*(const BigInt& s, QPoly a) { return a *= s; }
    QPoly operator-() const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// Multiplies by q^e. A negative e is only allowed when the low
    /// coefficients being dropped are all zero; otherwise InternalError.
    QPoly shifted(long long e) const;
    QPoly pow(unsigned e) const;

    /// Exact evaluation at q = t.
    BigInt eval(const BigInt& t) const;

    /// Polynomial long division over the integers. Every intermediate
    /// leading coefficient must be divisible by the divisor's leading
    /// coefficient, otherwise InternalError.
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    /// Division that must leave a zero remainder (InternalError otherwise).
    QPoly div_exact(const QPoly& divisor) const;

    /// Human-readable form, e.g. "1 + 2q + q^2".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

} // namespace qcomb
