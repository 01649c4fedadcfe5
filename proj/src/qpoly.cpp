#include "qcomb/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcomb/errors.hpp"

namespace qcomb {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(const BigInt& c, std::size_t degree)
{
    if (c == 0) {
        return {};
    }
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = c;
    return QPoly(std::move(coeffs));
}

void QPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

QPoly& QPoly::operator+=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other)
{
    *this = *this * other;
    return *this;
}

QPoly& QPoly::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

QPoly QPoly::operator-() const
{
    QPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

QPoly QPoly::shifted(long long e) const
{
    if (is_zero() || e == 0) {
        return *this;
    }
    if (e > 0) {
        std::vector<BigInt> out(coeffs_.size() + static_cast<std::size_t>(e));
        std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + e);
        return QPoly(std::move(out));
    }
    const auto drop = static_cast<std::size_t>(-e);
    for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i) {
        if (coeffs_[i] != 0) {
            throw InternalError("QPoly::shifted: negative power of q would remain");
        }
    }
    if (drop >= coeffs_.size()) {
        return {};
    }
    return QPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end()));
}

QPoly QPoly::pow(unsigned e) const
{
    QPoly result = constant(1);
    QPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

BigInt QPoly::eval(const BigInt& t) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const
{
    if (divisor.is_zero()) {
        throw std::invalid_argument("QPoly::divmod: division by zero polynomial");
    }
    if (degree() < divisor.degree()) {
        return {QPoly{}, *this};
    }
    std::vector<BigInt> rem = coeffs_;
    const std::size_t dsize = divisor.coeffs_.size();
    const BigInt& lead = divisor.coeffs_.back();
    std::vector<BigInt> quot(coeffs_.size() - dsize + 1);
    for (std::size_t pos = rem.size(); pos-- >= dsize;) {
        if (rem[pos] == 0) {
            continue;
        }
        if (rem[pos] % lead != 0) {
            throw InternalError("QPoly::divmod: quotient is not integral");
        }
        const BigInt factor = rem[pos] / lead;
        const std::size_t shift = pos - (dsize - 1);
        quot[shift] = factor;
        for (std::size_t i = 0; i < dsize; ++i) {
            rem[shift + i] -= factor * divisor.coeffs_[i];
        }
        if (pos == dsize - 1) {
            break;
        }
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::div_exact(const QPoly& divisor) const
{
    auto [quot, rem] = divmod(divisor);
    if (!rem.is_zero()) {
        throw InternalError("QPoly::div_exact: nonzero remainder");
    }
    return quot;
}

std::string QPoly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) {
            out += mag.str();
        }
        if (i >= 1) {
            out += "q";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace qcomb
