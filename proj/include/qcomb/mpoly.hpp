#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qcomb/bigint.hpp"

namespace qcomb {

/// Fixed variable order of every MPoly: (alpha, beta, r, x).
enum class Var : std::size_t { alpha = 0, beta = 1, r = 2, x = 3 };

using Exponents = std::array<std::uint32_t, 4>;

/// Graded lexicographic order: total degree first, then lexicographic on
/// (alpha, beta, r, x).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

// Sparse polynomial in (alpha, beta, r, x) with arbitrary-precision integer
// coefficients. No stored coefficient is zero, so equality of term maps is
// equality of polynomials.
class MPoly {
public:
    using TermMap = std::map<Exponents, BigInt, GradedLex>;

    MPoly() = default;

    static MPoly constant(const BigInt& c);
    /// alpha^a beta^b r^c x^d with unit coefficient.
    static MPoly from_monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d);
    static MPoly from_monomial(const Exponents& e, const BigInt& coeff = 1);
    static MPoly variable(Var v);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt coefficient(const Exponents& e) const;

    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    MPoly& operator*=(const MPoly& other);
    MPoly& operator*=(const BigInt& scalar);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const BigInt& s) { return a *= s; }
    friend MPoly operator*(const BigInt& s, MPoly a) { return a *= s; }
    MPoly operator-() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    MPoly pow(unsigned e) const;

    /// Substitutes an integer value for one variable.
    MPoly specialize(Var v, const BigInt& value) const;
    /// Coefficient of v^d, as a polynomial in the remaining variables.
    MPoly coefficient_of(Var v, std::uint32_t d) const;
    std::uint32_t degree_in(Var v) const;

    /// e.g. "alpha + beta + 2*r"
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const BigInt& c);
    TermMap terms_;
};

struct RationalMPoly {
    std::map<Exponents, Rational, GradedLex> terms;
    friend bool operator==(const RationalMPoly&, const RationalMPoly&) = default;
};

/// Substitutes exact rationals for any subset of the variables; unset
/// variables stay symbolic.
RationalMPoly eval_rational(const MPoly& p, const std::array<std::optional<Rational>, 4>& values);

/// Full substitution.
Rational eval_rational(const MPoly& p, const std::array<Rational, 4>& values);

} // namespace qcomb
