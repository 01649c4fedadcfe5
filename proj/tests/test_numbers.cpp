#include <thread>

#include "doctest.h"
#include "independent.hpp"

#include "qcomb/numbers.hpp"
#include "qcomb/qprimitives.hpp"

using namespace qcomb;

namespace {

QPoly qp(std::initializer_list<long long> c)
{
    std::vector<BigInt> v;
    for (long long x : c) {
        v.emplace_back(x);
    }
    return QPoly(std::move(v));
}

BigInt eval_at(const MPoly& p, long long a, long long b, long long r, long long x)
{
    const Rational v = eval_rational(p, std::array<Rational, 4>{a, b, r, x});
    REQUIRE(denominator(v) == 1);
    return numerator(v);
}

} // namespace

TEST_CASE("q-Stirling second kind values")
{
    CHECK(stirling2_q(2, 2, 0) == qp({0, 1}));
    CHECK(stirling2_q(3, 2, 0) == qp({0, 2, 1}));
    CHECK(stirling2_q(1, 1, 1) == qp({0, 1}));
    for (int k = 0; k <= 8; ++k) {
        CHECK(stirling2_q(k, k, 0) == QPoly::q_power(static_cast<std::size_t>(k * (k - 1) / 2)));
    }
    CHECK(stirling2_q(3, 4, 0).is_zero());
    CHECK(stirling2_q(3, 0, 0).is_zero());
}

TEST_CASE("q-Bell values")
{
    CHECK(bell_q(0, 0) == qp({1}));
    CHECK(bell_q(1, 1) == qp({1, 1}));
    CHECK(bell_q(4, 0).eval(1) == 15);
    const auto b = indep::bell(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(bell_q(n, 0).eval(1) == b[n]);
    }
}

TEST_CASE("q-Lah values")
{
    CHECK(lah_q(2, 1, 0) == qp({1, 1}));
    CHECK(lah_q(3, 2, 0) == qp({0, 0, 1, 2, 2, 1}));
    for (int n = 0; n <= 8; ++n) {
        CHECK(lah_q(n, n, 0) == QPoly::q_power(static_cast<std::size_t>(n * (n - 1))));
    }
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(lah_q_closed_form(n, k) == lah_q_recurrence(n, k));
        }
    }
}

TEST_CASE("q-Stirling first kind values")
{
    CHECK(stirling1_q(3, 2, 0) == qp({2, 1}));
    for (int n = 0; n <= 8; ++n) {
        CHECK(stirling1_q(n, n, 0) == qp({1}));
    }
    CHECK(stirling1_q(4, 2, 0).eval(1) == 11);
}

TEST_CASE("q = 1 reproduces the independent classical triangles")
{
    for (int r = 0; r <= 2; ++r) {
        const auto s2 = indep::stirling2(12, r);
        const auto s1 = indep::stirling1(12, r);
        const auto l = indep::lah(12, r);
        for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(stirling2_q(n, k, r).eval(1) == s2[n][k]);
                CHECK(stirling1_q(n, k, r).eval(1) == s1[n][k]);
                CHECK(lah_q(n, k, r).eval(1) == l[n][k]);
            }
        }
    }
}

TEST_CASE("r-Lah relation at q = 1")
{
    const auto l = indep::lah(10);
    for (int r = 0; r <= 3; ++r) {
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                BigInt rhs = 0;
                for (int i = 0; i <= n - k; ++i) {
                    rhs += rising_int(2 * r, i) * binomial(n, i) * l[n - i][k];
                }
                CHECK(lah_q(n, k, r).eval(1) == rhs);
            }
        }
    }
}

TEST_CASE("values at q = -1 follow the closed forms")
{
    for (int n = 0; n <= 20; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(poly_eval_int(stirling2_q(n, k, 0), -1) == stirling_neg1(Neg1Variant::plain, n, k));
            CHECK(poly_eval_int(stirling2_q(n, k, 1), -1) == stirling_neg1(Neg1Variant::r1, n, k));
        }
        const BigInt sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
        CHECK(stirling_neg1(Neg1Variant::plain, n, n) == sign);
    }
    CHECK(stirling_neg1(Neg1Variant::plain, 3, 5) == 0);
}

TEST_CASE("q-Stirling first kind row sums")
{
    for (int n = 0; n <= 8; ++n) {
        for (int r = 0; r <= 3; ++r) {
            QPoly sum;
            for (int k = 0; k <= n; ++k) {
                sum += stirling1_q(n, k, r);
            }
            QPoly prod = qp({1});
            for (int l = r; l <= n + r - 1; ++l) {
                prod *= qp({1}) + q_integer(l);
            }
            CHECK(sum == prod);
        }
    }
}

TEST_CASE("Hsu-Shiue numbers")
{
    const MPoly a = MPoly::variable(Var::alpha);
    const MPoly b = MPoly::variable(Var::beta);
    const MPoly r = MPoly::variable(Var::r);
    for (int n = 0; n <= 6; ++n) {
        CHECK(hsu_shiue(n, n) == MPoly::constant(1));
    }
    CHECK(hsu_shiue(2, 1) == a + b + r * BigInt(2));
    CHECK(hsu_shiue(2, 3).is_zero());
    // the recurrence coefficient alpha(n-1) + beta k + r gives Lah numbers at alpha = +1
    CHECK(eval_at(hsu_shiue(3, 2), 1, 1, 0, 0) == 6);
    CHECK(eval_at(hsu_shiue(3, 2), -1, 1, 0, 0) == 0);
    const auto s2 = indep::stirling2(10);
    const auto l = indep::lah(10);
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(eval_at(hsu_shiue(n, k), 0, 1, 0, 0) == s2[n][k]);
            CHECK(eval_at(hsu_shiue(n, k), 1, 1, 0, 0) == l[n][k]);
        }
    }
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            const MPoly s = hsu_shiue(n, k);
            for (const auto& [e, c] : s.terms()) {
                CHECK(c > 0);
            }
        }
    }
}

TEST_CASE("generalized Bell polynomials")
{
    CHECK(gen_bell(0) == MPoly::constant(1));
    CHECK(gen_bell(1) == MPoly::variable(Var::r) + MPoly::variable(Var::x));
    CHECK(eval_at(gen_bell(5), 0, 1, 0, 1) == 52);
    const auto b = indep::bell(10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(eval_at(gen_bell(n), 0, 1, 0, 1) == b[n]);
    }
}

TEST_CASE("memoized values are stable across threads")
{
    std::vector<QPoly> first(9);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([t] {
            for (int n = 12; n >= 0; --n) {
                (void)stirling2_q(n, n / 2, t % 3);
                (void)lah_q(n, n / 3, t % 2);
                (void)hsu_shiue(n, n / 2);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    const QPoly once = stirling2_q(12, 6, 2);
    CHECK(stirling2_q(12, 6, 2) == once);
    CHECK(once.eval(1) == indep::stirling2(12, 2)[12][6]);
}

TEST_CASE("family tables")
{
    const auto rows = family_table(Family::stirling2_q, {0, 5}, {0, 5}, {0, 0});
    CHECK(rows.size() == 21);
    const auto bell = family_table(Family::bell_q, {4, 4}, {0, 0}, {0, 0});
    REQUIRE(bell.size() == 1);
    CHECK(std::get<QPoly>(bell.front().value).eval(1) == 15);
    CHECK(family_name(parse_family("hsu_shiue")) == "hsu_shiue");
    CHECK_THROWS_AS((void)parse_family("nope"), std::invalid_argument);
}
