#include "qcomb/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace qcomb {

namespace {

std::uint32_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Rational rational_pow(const Rational& base, std::uint32_t e)
{
    Rational result = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        result *= base;
    }
    return result;
}

} // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const noexcept
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

MPoly MPoly::constant(const BigInt& c) { return from_monomial(Exponents{0, 0, 0, 0}, c); }

MPoly MPoly::from_monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d)
{
    return from_monomial(Exponents{a, b, c, d});
}

MPoly MPoly::from_monomial(const Exponents& e, const BigInt& coeff)
{
    MPoly p;
    p.add_term(e, coeff);
    return p;
}

MPoly MPoly::variable(Var v)
{
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    return from_monomial(e);
}

BigInt MPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const BigInt& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

MPoly& MPoly::operator+=(const MPoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other)
{
    for (const auto& [e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& other)
{
    *this = *this * other;
    return *this;
}

MPoly& MPoly::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

MPoly MPoly::operator-() const
{
    MPoly out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly result = constant(1);
    for (unsigned i = 0; i < e; ++i) {
        result *= *this;
    }
    return result;
}

MPoly MPoly::specialize(Var v, const BigInt& value) const
{
    const auto idx = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : terms_) {
        Exponents reduced = e;
        reduced[idx] = 0;
        out.add_term(reduced, c * pow_int(value, static_cast<int>(e[idx])));
    }
    return out;
}

MPoly MPoly::coefficient_of(Var v, std::uint32_t d) const
{
    const auto idx = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == d) {
            Exponents reduced = e;
            reduced[idx] = 0;
            out.add_term(reduced, c);
        }
    }
    return out;
}

std::uint32_t MPoly::degree_in(Var v) const
{
    const auto idx = static_cast<std::size_t>(v);
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[idx]);
    }
    return d;
}

std::string MPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    static constexpr const char* names[] = {"alpha", "beta", "r", "x"};
    std::string out;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names[i];
            if (e[i] > 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

RationalMPoly eval_rational(const MPoly& p, const std::array<std::optional<Rational>, 4>& values)
{
    RationalMPoly out;
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = Rational(c);
        Exponents rest = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (values[i]) {
                coeff *= rational_pow(*values[i], e[i]);
                rest[i] = 0;
            }
        }
        if (coeff == 0) {
            continue;
        }
        auto [it, inserted] = out.terms.try_emplace(rest, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) {
                out.terms.erase(it);
            }
        }
    }
    return out;
}

Rational eval_rational(const MPoly& p, const std::array<Rational, 4>& values)
{
    Rational acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational term = Rational(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            term *= rational_pow(values[i], e[i]);
        }
        acc += term;
    }
    return acc;
}

} // namespace qcomb
