#pragma once

#include "qcomb/mpoly.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

/// n_q = 1 + q + ... + q^{n-1}, with 0_q = 0.
QPoly q_integer(int n);

/// n_q! = 1_q 2_q ... n_q, with 0_q! = 1.
QPoly q_factorial(int n);

/// Gaussian binomial. Total on integer pairs: 1 whenever k = 0 (any n),
/// n_q!/(k_q!(n-k)_q!) for 0 <= k <= n, and 0 otherwise.
QPoly q_binomial(int n, int k);

/// [n]_q^{rising m} = n_q (n+1)_q ... (n+m-1)_q, equal to 1 when m = 0.
QPoly q_rising(int n, int m);

/// Exact value of p at q = t.
inline BigInt poly_eval_int(const QPoly& p, const BigInt& t) { return p.eval(t); }

enum class FactorialBase { x, x_minus_r };
enum class FactorialIncrement { neg_alpha, beta };

/// prod_{i=0}^{k-1} (base - i*increment) expanded in (alpha, beta, r, x);
/// 1 for k = 0. With increment -alpha this is (x)^{(k,-alpha)} = x(x+alpha)...;
/// with base x - r and increment beta it is (x-r)(x-r-beta)...
MPoly shifted_factorial_poly(int k, FactorialBase base, FactorialIncrement increment);

} // namespace qcomb
