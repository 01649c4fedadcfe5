#include "qcomb/qprimitives.hpp"

#include <stdexcept>
#include <string>

namespace qcomb {

namespace {

void require_non_negative(int v, const char* what)
{
    if (v < 0) {
        throw std::invalid_argument(std::string(what) + ": argument must be non-negative, got " + std::to_string(v));
    }
}

} // namespace

QPoly q_integer(int n)
{
    require_non_negative(n, "q_integer");
    return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly q_factorial(int n)
{
    require_non_negative(n, "q_factorial");
    QPoly result = QPoly::constant(1);
    for (int i = 2; i <= n; ++i) {
        result *= q_integer(i);
    }
    return result;
}

QPoly q_binomial(int n, int k)
{
    if (k == 0) {
        return QPoly::constant(1);
    }
    if (k < 0 || n < k) {
        return {};
    }
    return q_factorial(n).div_exact(q_factorial(k) * q_factorial(n - k));
}

QPoly q_rising(int n, int m)
{
    require_non_negative(n, "q_rising");
    require_non_negative(m, "q_rising");
    QPoly result = QPoly::constant(1);
    for (int i = n; i < n + m; ++i) {
        result *= q_integer(i);
    }
    return result;
}

MPoly shifted_factorial_poly(int k, FactorialBase base, FactorialIncrement increment)
{
    require_non_negative(k, "shifted_factorial_poly");
    MPoly base_poly = MPoly::variable(Var::x);
    if (base == FactorialBase::x_minus_r) {
        base_poly -= MPoly::variable(Var::r);
    }
    // base - i*increment
    const MPoly step = increment == FactorialIncrement::neg_alpha ? MPoly::variable(Var::alpha)
                                                                   : -MPoly::variable(Var::beta);
    MPoly result = MPoly::constant(1);
    for (int i = 0; i < k; ++i) {
        result *= base_poly + step * BigInt(i);
    }
    return result;
}

} // namespace qcomb
