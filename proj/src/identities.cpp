#include "qcomb/identities.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <stdexcept>

#include <omp.h>

#include "qcomb/bijection.hpp"
#include "qcomb/enumerate.hpp"
#include "qcomb/errors.hpp"
#include "qcomb/qprimitives.hpp"
#include "qcomb/statistics.hpp"

namespace qcomb {

IndicatorPair indicator_pair(int i, int j, int n)
{
    const bool odd = j % 2 != 0;
    const bool last = i == n;
    return {(odd ? 1 : 0) + (!odd && last ? 1 : 0), (!odd ? 1 : 0) + (odd && last ? 1 : 0)};
}

const IntRange* Grid::find(const std::string& axis) const
{
    for (const auto& [name, range] : ranges) {
        if (name == axis) {
            return &range;
        }
    }
    return nullptr;
}

std::string status_name(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

Status parse_status(const std::string& name)
{
    for (Status s : {Status::pass, Status::fail, Status::skipped}) {
        if (status_name(s) == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown status '" + name + "'");
}

namespace {

struct Outcome {
    Value lhs;
    Value rhs;
    std::optional<std::string> structure;
};

using Eval = std::function<Outcome(const Params&, const CheckOptions&)>;
using Admit = std::function<bool(const Params&)>;
using Explain = std::function<std::optional<std::string>(const Params&, const CheckOptions&)>;

struct Definition {
    std::string name;
    Grid grid;
    Admit admit;
    Eval eval;
    std::string note;
    Explain explain; // oracle-backed checks only
};

// ---------------------------------------------------------------- helpers

int floor_half(int j) { return j / 2; }
int ceil_half(int j) { return (j + 1) / 2; }

QPoly ipow(const QPoly& p, int e) { return p.pow(static_cast<unsigned>(e)); }

BigInt at_one(const QPoly& p) { return p.eval(1); }
BigInt at_minus_one(const QPoly& p) { return p.eval(-1); }

BigInt s_int(int n, int k, int r) { return at_one(stirling2_q(n, k, r)); }
BigInt c_int(int n, int k, int r) { return at_one(stirling1_q(n, k, r)); }

BigInt s_neg(int n, int k, int r) { return (n < 0 || k < 0) ? BigInt(0) : at_minus_one(stirling2_q(n, k, r)); }

/// sum_k L_q^{(r)}(n,k)
QPoly lah_total(int n, int r)
{
    QPoly sum;
    for (int k = 0; k <= n; ++k) {
        sum += lah_q(n, k, r);
    }
    return sum;
}

/// prod_{l=0}^{count-1} (1 + [l + shift]_q)
QPoly one_plus_product(int count, int shift)
{
    QPoly out = QPoly::constant(1);
    for (int l = 0; l < count; ++l) {
        out *= QPoly::constant(1) + q_integer(l + shift);
    }
    return out;
}

/// prod_{l=0}^{len-1} ((m + l) alpha + j beta)
MPoly sigma_product(int m, int j, int len)
{
    MPoly out = MPoly::constant(1);
    for (int l = 0; l < len; ++l) {
        out *= MPoly::variable(Var::alpha) * BigInt(m + l) + MPoly::variable(Var::beta) * BigInt(j);
    }
    return out;
}

MPoly x_power(int d) { return MPoly::from_monomial(0, 0, 0, static_cast<std::uint32_t>(d)); }

int P(const Params& p, const char* axis) { return p.at(axis); }

Admit k_upto_mn = [](const Params& p) { return P(p, "k") <= P(p, "m") + P(p, "n"); };
Admit k_upto_n = [](const Params& p) { return P(p, "k") <= P(p, "n"); };
Admit any_cell = [](const Params&) { return true; };

Grid make_grid(std::vector<std::pair<std::string, IntRange>> ranges, std::optional<int> max_mn = std::nullopt)
{
    return Grid{std::move(ranges), max_mn};
}

// ----------------------------------------------------------- definitions

Outcome spivey(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += pow_int(j, n - i) * binomial(n, i) * s_int(m, j, 0) * at_one(bell_q(i, 0));
        }
    }
    return {at_one(bell_q(m + n, 0)), rhs, {}};
}

Outcome mezo1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += pow_int(j + r, n - i) * binomial(n, i) * s_int(m, j, r) * at_one(bell_q(i, 0));
        }
    }
    return {at_one(bell_q(m + n, r)), rhs, {}};
}

Outcome mezo2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += rising_int(m, n - i) * binomial(n, i) * c_int(m, j, r) * rising_int(r + 1, i);
        }
    }
    return {rising_int(r + 1, m + n), rhs, {}};
}

/// sum_i q^{ir} (r_q)^{n-i} C(n,i) S_q(i,k)
QPoly pe1_rhs(int n, int k, int r)
{
    QPoly sum;
    const QPoly rq = q_integer(r);
    for (int i = 0; i <= n; ++i) {
        sum += (ipow(rq, n - i) * stirling2_q(i, k, 0) * binomial(n, i)).shifted(static_cast<long long>(i) * r);
    }
    return sum;
}

Outcome pe1(const Params& p, const CheckOptions& o)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    return {oracle_q(StructureFamily::partitions, n, k, r, o.enumeration), pe1_rhs(n, k, r), {}};
}

Outcome pe1_norm(const Params& p, const CheckOptions& o)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    return {oracle_q(StructureFamily::partitions, n, k, r, o.enumeration),
            pe1_rhs(n, k, r).shifted(static_cast<long long>(r) * (r - 1) / 2), {}};
}

Explain explain_partitions = [](const Params& p, const CheckOptions& o) {
    return first_stat_disagreement(StructureFamily::partitions, P(p, "n"), P(p, "k"), P(p, "r"), o.enumeration);
};

/// The (i,j) factor q^{i(j+r)} ([j+r]_q)^{n-i} C(n,i) S_q^{(r)}(m,j)
QPoly p1_factor(int m, int n, int i, int j, int r)
{
    return (ipow(q_integer(j + r), n - i) * stirling2_q(m, j, r) * binomial(n, i))
        .shifted(static_cast<long long>(i) * (j + r));
}

Outcome p1e1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += p1_factor(m, n, i, j, r) * stirling2_q(i, k - j, 0);
        }
    }
    return {stirling2_q(m + n, k, r), rhs, {}};
}

Outcome p1e2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += p1_factor(m, n, i, j, r) * bell_q(i, 0);
        }
    }
    return {bell_q(m + n, r), rhs, {}};
}

// The four integer identities at q = -1.
Outcome bin(int which, const Params& p)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    BigInt lhs;
    switch (which) {
    case 1: lhs = binomial(m + n - k - 1, k - 1); break;
    case 2: lhs = binomial(m + n - k, k - 1); break;
    case 3: lhs = binomial(m + n - k, k); break;
    default: lhs = binomial(m + n - k, k - 1); break;
    }
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            const IndicatorPair ind = indicator_pair(i, j, n);
            BigInt term;
            switch (which) {
            case 1:
                term = ind.a * neg_one_pow(static_cast<long long>(i + 1) * j) *
                       binomial(m - floor_half(j) - 1, m - j) *
                       binomial(i - k + ceil_half(j) - 1, i - 2 * k + j);
                break;
            case 2:
                term = ind.a * neg_one_pow(static_cast<long long>(i) * j) * binomial(m - floor_half(j) - 1, m - j) *
                       binomial(i - k + floor_half(j), i - 2 * k + j + 1);
                break;
            case 3:
                term = ind.b * neg_one_pow(static_cast<long long>(i) * (j + 1)) * binomial(m - ceil_half(j), m - j) *
                       binomial(i - k + ceil_half(j) - 1, i - 2 * k + j);
                break;
            default:
                term = ind.b * neg_one_pow(static_cast<long long>(i + 1) * (j + 1)) *
                       binomial(m - ceil_half(j), m - j) * binomial(i - k + floor_half(j), i - 2 * k + j + 1);
                break;
            }
            rhs += term * binomial(n, i);
        }
    }
    return {lhs, rhs, {}};
}

Outcome bin5(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += indicator_pair(i, j, n).a * neg_one_pow(static_cast<long long>(i) * j) * binomial(n, i) *
                   s_neg(m, j, 0) * s_neg(i, k - j, 0);
        }
    }
    return {s_neg(m + n, k, 0), rhs, {}};
}

Outcome bin6(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {s_neg(n, k, 0), stirling_neg1(Neg1Variant::plain, n, k), {}};
}

Outcome bin7(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            rhs += indicator_pair(i, j, n).b * neg_one_pow(static_cast<long long>(i) * (j + 1)) * binomial(n, i) *
                   s_neg(m, j, 1) * s_neg(i, k - j, 0);
        }
    }
    return {s_neg(m + n, k, 1), rhs, {}};
}

Outcome bin8(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    BigInt rhs = 0;
    for (int i = k; i <= n; ++i) {
        rhs += neg_one_pow(i + static_cast<long long>(k) * (k - 1) / 2) * binomial(n, i) *
               binomial(i - floor_half(k) - 1, i - k);
    }
    return {s_neg(n, k, 1), rhs, {}};
}

Outcome bin9(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {s_neg(n, k, 1), stirling_neg1(Neg1Variant::r1, n, k), {}};
}

Outcome lah_cf(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {lah_q_closed_form(n, k), lah_q_recurrence(n, k), {}};
}

Outcome lah_r(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    BigInt rhs = 0;
    for (int i = 0; i <= n; ++i) {
        rhs += rising_int(2 * r, i) * binomial(n, i) * at_one(lah_q(n - i, k, 0));
    }
    return {at_one(lah_q(n, k, r)), rhs, {}};
}

/// q^{i(j+m+2r)} [j+m+2r]_q^{rising n-i} [n choose i]_q L_q^{(r)}(m,j)
QPoly p2_factor(int m, int n, int i, int j, int r)
{
    const int base = j + m + 2 * r;
    return (q_rising(base, n - i) * q_binomial(n, i) * lah_q(m, j, r)).shifted(static_cast<long long>(i) * base);
}

Outcome p2e1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= k; ++j) {
            rhs += p2_factor(m, n, i, j, r) * lah_q(i, k - j, 0);
        }
    }
    return {lah_q(m + n, k, r), rhs, {}};
}

Outcome p2e2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    auto rhs_upto = [&](int j_max) {
        QPoly sum;
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= j_max; ++j) {
                sum += p2_factor(m, n, i, j, r) * lah_total(i, 0);
            }
        }
        return sum;
    };
    const QPoly lhs = lah_total(m + n, r);
    const QPoly rhs = rhs_upto(m);
    // The wider bound j <= m+n must agree term for term.
    const QPoly wide = rhs_upto(m + n);
    if (lhs == rhs && wide != rhs) {
        return {rhs, wide, {}};
    }
    return {lhs, rhs, {}};
}

Outcome qbin(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const QPoly lhs = q_binomial(m + n, k) * q_binomial(m + n + 1, n) - q_binomial(m, k) * q_binomial(k + m + n + 1, n);
    // Exponents may be negative; both sides are multiplied by q^{shift}.
    struct Term {
        long long e;
        QPoly body;
    };
    std::vector<Term> terms;
    long long lowest = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= k; ++j) {
            const long long e = static_cast<long long>(i) * (j + m + 1) - 2LL * j * (k - j + 1);
            QPoly body = q_binomial(m, j - 1) * q_binomial(k + 1, j) * q_binomial(i - 1, k - j) *
                         q_binomial(m + n + j - i, n - i);
            if (!body.is_zero()) {
                lowest = std::min(lowest, e);
                terms.push_back({e, std::move(body)});
            }
        }
    }
    const long long shift = -lowest;
    QPoly rhs;
    for (const auto& t : terms) {
        rhs += t.body.shifted(t.e + shift);
    }
    return {lhs.shifted(shift), rhs, {}};
}

Outcome cq_rec(const Params& p, const CheckOptions& o)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {stirling1_q(n, k, 0), oracle_q(StructureFamily::perms, n, k, 0, o.enumeration), {}};
}

Explain explain_perms = [](const Params& p, const CheckOptions& o) {
    return first_stat_disagreement(StructureFamily::perms, P(p, "n"), P(p, "k"), 0, o.enumeration);
};

Outcome t3e1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        const QPoly outer = q_rising(m + r, n - i) * q_binomial(n, i);
        for (int j = 0; j <= m; ++j) {
            rhs += outer * stirling1_q(m, j, r) * stirling1_q(i, k - j, 0);
        }
    }
    return {stirling1_q(m + n, k, r), rhs, {}};
}

Outcome t3e2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        rhs += q_rising(m + r, n - i) * q_binomial(n, i) * one_plus_product(i, 0);
    }
    return {one_plus_product(n, m + r), rhs, {}};
}

Outcome cq_sum(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int r = P(p, "r");
    QPoly lhs;
    for (int k = 0; k <= n; ++k) {
        lhs += stirling1_q(n, k, r);
    }
    return {lhs, one_plus_product(n, r), {}};
}

Outcome cq_sym(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    // e_{n-k} over {1_q, ..., (n-1)_q}, by listing subsets.
    const int items = std::max(n - 1, 0);
    const int want = n - k;
    QPoly rhs;
    for (unsigned mask = 0; mask < (1U << items); ++mask) {
        if (std::popcount(mask) != want) {
            continue;
        }
        QPoly prod = QPoly::constant(1);
        for (int b = 0; b < items; ++b) {
            if (mask & (1U << b)) {
                prod *= q_integer(b + 1);
            }
        }
        rhs += prod;
    }
    return {stirling1_q(n, k, 0), rhs, {}};
}

Outcome t4e1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        const long long e = static_cast<long long>(m) * (i + r) + static_cast<long long>(m) * (m - 1) / 2;
        rhs += (ipow(q_integer(m), n - i) * stirling2_q(i, k, r) * binomial(n, i)).shifted(e);
    }
    return {stirling2_q(n, k, m + r), rhs, {}};
}

Outcome t4e2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        const long long e = static_cast<long long>(m) * (2LL * i + 2LL * r + m - 1);
        rhs += (q_rising(2 * m, n - i) * q_binomial(n, i) * lah_q(i, k, r)).shifted(e);
    }
    return {lah_q(n, k, m + r), rhs, {}};
}

Outcome t4e3(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        rhs += (q_rising(m, n - i) * q_binomial(n, i) * stirling1_q(i, k, r))
                   .shifted(static_cast<long long>(r) * (n - i));
    }
    return {stirling1_q(n, k, m + r), rhs, {}};
}

Outcome t4c1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int r = P(p, "r");
    QPoly rhs;
    for (int i = 0; i <= n; ++i) {
        const QPoly outer = (q_rising(m, n - i) * q_binomial(n, i) * one_plus_product(i, r))
                                .shifted(static_cast<long long>(r) * (n - i));
        for (int j = 0; j <= m; ++j) {
            rhs += outer * stirling1_q(m, j, r);
        }
    }
    return {one_plus_product(m + n, r), rhs, {}};
}

Outcome genrec(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    MPoly rhs;
    for (int k = 0; k <= n; ++k) {
        rhs += hsu_shiue(n, k) * shifted_factorial_poly(k, FactorialBase::x_minus_r, FactorialIncrement::beta);
    }
    return {shifted_factorial_poly(n, FactorialBase::x, FactorialIncrement::neg_alpha), rhs, {}};
}

Outcome genl1(const Params& p, const CheckOptions& o)
{
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {hsu_shiue(n, k), oracle_ext_lah(n, k, o.enumeration), {}};
}

Explain explain_ext = [](const Params& p, const CheckOptions& o) {
    return first_stat_disagreement(StructureFamily::ext_lah, P(p, "n"), P(p, "k"), 0, o.enumeration);
};

Outcome genl1_rec(const Params& p, const CheckOptions&)
{
    const int n = P(p, "n");
    // Connection constants by triangular elimination: the basis polynomial
    // (x-r)^{(k,beta)} is monic of degree k in x.
    MPoly rest = shifted_factorial_poly(n, FactorialBase::x, FactorialIncrement::neg_alpha);
    MPoly eliminated;
    for (int k = n; k >= 0; --k) {
        const MPoly c = rest.coefficient_of(Var::x, static_cast<std::uint32_t>(k));
        rest -= c * shifted_factorial_poly(k, FactorialBase::x_minus_r, FactorialIncrement::beta);
        eliminated += c * x_power(k);
    }
    if (!rest.is_zero()) {
        throw InternalError("connection-constant elimination left a remainder at n=" + std::to_string(n));
    }
    return {eliminated, gen_bell(n), {}};
}

/// Right-hand side of the Hsu-Shiue convolution at fixed k.
MPoly t5_rhs(int m, int n, int k)
{
    MPoly sum;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            const MPoly right = hsu_shiue(i, k - j);
            if (right.is_zero()) {
                continue;
            }
            sum += hsu_shiue(m, j) * right * sigma_product(m, j, n - i) * binomial(n, i);
        }
    }
    return sum;
}

Outcome t5e1(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    return {hsu_shiue(m + n, k), t5_rhs(m, n, k), {}};
}

Outcome t5e2(const Params& p, const CheckOptions&)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const MPoly lhs = gen_bell(m + n);
    MPoly direct;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            direct += x_power(j) * hsu_shiue(m, j) * gen_bell(i) * sigma_product(m, j, n - i) * binomial(n, i);
        }
    }
    MPoly summed;
    for (int k = 0; k <= m + n; ++k) {
        summed += x_power(k) * t5_rhs(m, n, k);
    }
    if (lhs != direct) {
        return {lhs, direct, {}};
    }
    return {lhs, summed, {}};
}

/// Sum of weight(sigma) weight(tau) over lambda whose split round-trips and
/// keeps tau's true blocks true; compared with the plain weight sum.
Outcome t5_bij(const Params& p, const CheckOptions& o)
{
    const int m = P(p, "m");
    const int n = P(p, "n");
    const int k = P(p, "k");
    MPoly via_split;
    MPoly direct;
    std::optional<std::string> bad;
    for_each_extended_lah(
        m + n, k,
        [&](const ExtLahDist& lambda, const ExtStats& stats) {
            direct += weight(stats);
            bool ok = false;
            try {
                const SplitResult s = split_lah(lambda, m, n);
                const ExtLahDist back = join_lah(s.sigma, s.tau, m, n);
                const int tau_true = s.tau.true_blocks();
                ok = back == lambda && tau_true == k - s.j && s.tau.base.n == s.i &&
                     s.sigma.shape.true_blocks() == s.j && weight(lambda) == weight(s.sigma.shape) * weight(s.tau);
                if (ok) {
                    via_split += weight(s.sigma.shape) * weight(s.tau);
                }
            } catch (const std::invalid_argument&) {
                ok = false;
            }
            if (!ok && !bad) {
                bad = to_text(lambda);
            }
        },
        o.enumeration);
    return {via_split, direct, bad};
}

// --------------------------------------------------------------- registry

std::vector<Definition> build_registry()
{
    const IntRange r2{0, 2};
    std::vector<Definition> defs;
    auto add = [&](std::string name, Grid grid, Admit admit, Eval eval, std::string note = {},
                   Explain explain = {}) {
        defs.push_back({std::move(name), std::move(grid), std::move(admit), std::move(eval), std::move(note),
                        std::move(explain)});
    };

    add("I-SPIVEY", make_grid({{"m", {0, 10}}, {"n", {0, 10}}}, 10), any_cell, spivey);
    add("I-MEZO-1", make_grid({{"m", {0, 10}}, {"n", {0, 10}}, {"r", {0, 3}}}, 10), any_cell, mezo1);
    add("I-MEZO-2", make_grid({{"m", {0, 10}}, {"n", {0, 10}}, {"r", {0, 3}}}, 10), any_cell, mezo2);
    add("I-PE1", make_grid({{"n", {0, 8}}, {"k", {0, 8}}, {"r", r2}}), k_upto_n, pe1,
        "left side is the w-sum over r-restricted partitions of [n+r]; right side is the shift relation "
        "with factor q^{ir} and no q^{C(r,2)} normalisation",
        explain_partitions);
    add("I-PE1-NORM", make_grid({{"n", {0, 8}}, {"k", {0, 8}}, {"r", r2}}), k_upto_n, pe1_norm,
        "shift relation with the q^{C(r,2)} weight of the r singleton blocks restored", explain_partitions);
    add("I-P1E1", make_grid({{"m", {0, 8}}, {"n", {0, 8}}, {"k", {0, 8}}, {"r", r2}}, 8), k_upto_mn, p1e1);
    add("I-P1E2", make_grid({{"m", {0, 8}}, {"n", {0, 8}}, {"r", r2}}, 8), any_cell, p1e2);
    for (int w = 1; w <= 4; ++w) {
        add("I-BIN-" + std::to_string(w), make_grid({{"m", {1, 10}}, {"n", {1, 10}}, {"k", {1, 20}}}), k_upto_mn,
            [w](const Params& p, const CheckOptions&) { return bin(w, p); });
    }
    add("I-BIN-5", make_grid({{"m", {1, 6}}, {"n", {1, 6}}, {"k", {0, 12}}}), k_upto_mn, bin5);
    add("I-BIN-6", make_grid({{"n", {0, 20}}, {"k", {0, 20}}}), k_upto_n, bin6);
    add("I-BIN-7", make_grid({{"m", {1, 6}}, {"n", {1, 6}}, {"k", {0, 12}}}), k_upto_mn, bin7,
        "the (i,j) term carries the factor C(n,i) inherited from the q-convolution at r = 1");
    add("I-BIN-8", make_grid({{"n", {0, 12}}, {"k", {0, 12}}}), k_upto_n, bin8);
    add("I-BIN-9", make_grid({{"n", {0, 20}}, {"k", {0, 20}}}), k_upto_n, bin9);
    add("I-LAH-CF", make_grid({{"n", {0, 20}}, {"k", {0, 20}}}), k_upto_n, lah_cf);
    add("I-LAH-R", make_grid({{"n", {0, 8}}, {"k", {0, 8}}, {"r", {0, 3}}}), k_upto_n, lah_r);
    add("I-P2E1", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}, {"r", r2}}, 7), k_upto_mn, p2e1);
    add("I-P2E2", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"r", r2}}, 7), any_cell, p2e2,
        "inner sum over j runs to m and L_q(i) is read as sum_k L_q(i,k); the bound j <= m+n is evaluated "
        "as well and must agree");
    add("I-QBIN", make_grid({{"m", {0, 6}}, {"n", {0, 6}}, {"k", {0, 6}}}), any_cell, qbin,
        "both sides multiplied by q^s, s the largest negative exponent on the right");
    add("I-CQ-REC", make_grid({{"n", {0, 8}}, {"k", {0, 8}}}), k_upto_n, cq_rec, {}, explain_perms);
    add("I-T3E1", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}, {"r", r2}}, 7), k_upto_mn, t3e1);
    add("I-T3E2", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"r", r2}}, 7), any_cell, t3e2);
    add("I-CQ-SUM", make_grid({{"n", {0, 8}}, {"r", {0, 3}}}), any_cell, cq_sum);
    add("I-CQ-SYM", make_grid({{"n", {0, 10}}, {"k", {0, 10}}}), k_upto_n, cq_sym);
    add("I-T4E1", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}, {"r", r2}}, 7), k_upto_n, t4e1);
    add("I-T4E2", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}, {"r", r2}}, 7), k_upto_n, t4e2);
    add("I-T4E3", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}, {"r", r2}}, 7), k_upto_n, t4e3);
    add("I-T4C1", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"r", r2}}, 7), any_cell, t4c1);
    add("I-GENREC", make_grid({{"n", {0, 8}}}), any_cell, genrec);
    add("I-GENL1", make_grid({{"n", {0, 7}}, {"k", {0, 7}}}), k_upto_n, genl1, {}, explain_ext);
    add("I-GENL1-REC", make_grid({{"n", {0, 8}}}), any_cell, genl1_rec,
        "connection constants extracted from the falling-basis expansion, compared with the recurrence");
    add("I-T5E1", make_grid({{"m", {0, 7}}, {"n", {0, 7}}, {"k", {0, 7}}}, 7), k_upto_mn, t5e1);
    add("I-T5E2", make_grid({{"m", {0, 7}}, {"n", {0, 7}}}, 7), any_cell, t5e2,
        "checked directly with the x marker and by summing the fixed-k convolution over k");
    add("I-T5-BIJ", make_grid({{"m", {1, 5}}, {"n", {1, 5}}, {"k", {0, 6}}}, 6), k_upto_mn, t5_bij,
        "left side sums weight(sigma) weight(tau) over members whose split joins back, keeps tau's true "
        "blocks and multiplies weights; right side is the plain weight sum");
    return defs;
}

const std::vector<Definition>& registry()
{
    static const std::vector<Definition> defs = build_registry();
    return defs;
}

const Definition& lookup(const std::string& name)
{
    for (const auto& d : registry()) {
        if (d.name == name) {
            return d;
        }
    }
    throw std::invalid_argument("unregistered identity '" + name + "'");
}

void cartesian(const Grid& grid, std::size_t axis, Params& current, const Admit& admit, std::vector<Params>& out)
{
    if (axis == grid.ranges.size()) {
        if (grid.max_mn) {
            const auto m = current.find("m");
            const auto n = current.find("n");
            if (m != current.end() && n != current.end() && m->second + n->second > *grid.max_mn) {
                return;
            }
        }
        if (admit(current)) {
            out.push_back(current);
        }
        return;
    }
    const auto& [name, range] = grid.ranges[axis];
    for (int v = range.lo; v <= range.hi; ++v) {
        current[name] = v;
        cartesian(grid, axis + 1, current, admit, out);
    }
    current.erase(name);
}

void validate_grid(const Definition& def, const Grid& grid)
{
    if (grid.ranges.size() != def.grid.ranges.size()) {
        throw std::invalid_argument(def.name + ": grid must name exactly the axes of the default grid");
    }
    for (std::size_t a = 0; a < grid.ranges.size(); ++a) {
        const auto& [name, range] = grid.ranges[a];
        if (name != def.grid.ranges[a].first) {
            throw std::invalid_argument(def.name + ": unexpected axis '" + name + "'");
        }
        const int floor = def.grid.ranges[a].second.lo;
        if (range.lo < floor) {
            throw std::invalid_argument(def.name + ": axis '" + name + "' starts below " + std::to_string(floor));
        }
    }
    if (grid.max_mn && *grid.max_mn < 0) {
        throw std::invalid_argument(def.name + ": negative m+n bound");
    }
}

} // namespace

std::vector<std::string> identity_names()
{
    std::vector<std::string> names;
    for (const auto& d : registry()) {
        names.push_back(d.name);
    }
    return names;
}

bool is_registered(const std::string& name)
{
    return std::any_of(registry().begin(), registry().end(), [&](const Definition& d) { return d.name == name; });
}

Grid default_grid(const std::string& name) { return lookup(name).grid; }

std::string identity_note(const std::string& name) { return lookup(name).note; }

std::vector<Params> grid_cells(const std::string& name, const Grid& grid)
{
    const Definition& def = lookup(name);
    validate_grid(def, grid);
    std::vector<Params> cells;
    Params current;
    cartesian(grid, 0, current, def.admit, cells);
    return cells;
}

IdentityReport check(const std::string& name, const Grid& grid, const CheckOptions& options)
{
    const Definition& def = lookup(name);
    const std::vector<Params> cells = grid_cells(name, grid);

    IdentityReport report;
    report.identity = def.name;
    report.grid = grid;
    report.note = def.note;
    report.cells_checked = cells.size();
    if (cells.empty()) {
        report.status = Status::skipped;
        return report;
    }

    const auto count = static_cast<std::ptrdiff_t>(cells.size());
    std::vector<std::optional<Outcome>> mismatches(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    auto run_cell = [&](std::ptrdiff_t c) {
        const auto idx = static_cast<std::size_t>(c);
        try {
            Outcome out = def.eval(cells[idx], options);
            if (out.lhs != out.rhs || out.structure) {
                mismatches[idx] = std::move(out);
            }
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    };

    if (options.exec == Exec::parallel) {
        const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::ptrdiff_t c = 0; c < count; ++c) {
            run_cell(c);
        }
    } else {
        for (std::ptrdiff_t c = 0; c < count; ++c) {
            run_cell(c);
        }
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (errors[c]) {
            std::rethrow_exception(errors[c]);
        }
        if (mismatches[c]) {
            Outcome& out = *mismatches[c];
            Counterexample ce{cells[c], std::move(out.lhs), std::move(out.rhs), std::move(out.structure)};
            if (!ce.structure && def.explain) {
                ce.structure = def.explain(cells[c], options);
            }
            report.counterexample = std::move(ce);
            report.status = Status::fail;
            return report;
        }
    }
    report.status = Status::pass;
    return report;
}

IdentityReport check(const std::string& name, const CheckOptions& options)
{
    return check(name, default_grid(name), options);
}

} // namespace qcomb
