#include <set>
#include <string>

#include "doctest.h"

#include "qcomb/bijection.hpp"
#include "qcomb/enumerate.hpp"
#include "qcomb/numbers.hpp"
#include "qcomb/statistics.hpp"

using namespace qcomb;

TEST_CASE("split and join are mutually inverse")
{
    for (int total = 2; total <= 6; ++total) {
        for (int m = 1; m < total; ++m) {
            const int n = total - m;
            for (int k = 0; k <= total; ++k) {
                for (const auto& lambda : enum_extended_lah(total, k)) {
                    const SplitResult s = split_lah(lambda, m, n);
                    CHECK(join_lah(s.sigma, s.tau, m, n) == lambda);
                    CHECK(s.tau.base.n == s.i);
                    CHECK(s.tau.true_blocks() == k - s.j);
                    CHECK(s.sigma.shape.true_blocks() == s.j);
                    CHECK(weight(lambda) == weight(s.sigma.shape) * weight(s.tau));
                    CHECK(is_valid(s.tau));
                    CHECK(is_valid(s.sigma.shape));
                }
            }
        }
    }
}

TEST_CASE("empty remainder leaves sigma untouched")
{
    const ExtLahDist lambda = parse_ext_lah("1,3/2,4");
    const SplitResult s = split_lah(lambda, 2, 2);
    CHECK(s.i == 0);
    CHECK(s.j == 2);
    CHECK(to_text(s.tau).empty());
    CHECK(s.sigma.shape == lambda);
    CHECK(join_lah(s.sigma, s.tau, 2, 2) == lambda);
}

TEST_CASE("trailing blocks move to tau")
{
    const ExtLahDist lambda = parse_ext_lah("1,3/2/4,5");
    const SplitResult s = split_lah(lambda, 2, 3);
    CHECK(s.i == 2);
    CHECK(s.j == 2);
    CHECK(to_text(s.tau) == "1,2");
    CHECK_FALSE(s.tau_from_circled);
}

TEST_CASE("distinct pairs count the unit-weight total")
{
    for (int total = 2; total <= 6; ++total) {
        for (int m = 1; m < total; ++m) {
            for (int k = 0; k <= total; ++k) {
                std::set<std::string> pairs;
                for (const auto& lambda : enum_extended_lah(total, k)) {
                    const SplitResult s = split_lah(lambda, m, total - m);
                    std::string key = to_text(s.sigma.shape) + "|";
                    for (int l : s.sigma.labels) {
                        key += std::to_string(l) + ",";
                    }
                    pairs.insert(key + "|" + to_text(s.tau));
                }
                const Rational unit =
                    eval_rational(hsu_shiue(total, k), std::array<Rational, 4>{1, 1, 1, 1});
                CHECK(Rational(pairs.size()) == unit);
            }
        }
    }
}

TEST_CASE("inconsistent inputs are rejected")
{
    const ExtLahDist lambda = parse_ext_lah("1,3/2,4");
    CHECK_THROWS_AS((void)split_lah(lambda, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)split_lah(lambda, 2, 3), std::invalid_argument);
    SplitResult s = split_lah(lambda, 2, 2);
    SubDistribution bad = s.sigma;
    bad.labels = {4, 3};
    CHECK_THROWS_AS((void)join_lah(bad, s.tau, 2, 2), std::invalid_argument);
    // a tau with blocks that would have to meet [m]
    CHECK_THROWS_AS((void)join_lah(s.sigma, parse_ext_lah("1"), 2, 2), std::invalid_argument);
}
