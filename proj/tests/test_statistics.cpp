#include <algorithm>
#include <random>

#include "doctest.h"
#include "independent.hpp"

#include "qcomb/enumerate.hpp"
#include "qcomb/statistics.hpp"

using namespace qcomb;

namespace {

std::int64_t naive_inversions(const std::vector<int>& w)
{
    std::int64_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            c += w[i] > w[j];
        }
    }
    return c;
}

std::vector<int> digits(const std::string& s)
{
    std::vector<int> w;
    for (char c : s) {
        w.push_back(c - '0');
    }
    return w;
}

} // namespace

TEST_CASE("inversion counter")
{
    CHECK(inversions(std::vector<int>{}) == 0);
    CHECK(inversions(digits("123456")) == 0);
    CHECK(inversions(digits("7680325014")) == 30);
    CHECK(inversions(digits("1342576")) == 3);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> val(0, 9);
    for (int t = 0; t < 500; ++t) {
        std::vector<int> w(static_cast<std::size_t>(len(rng)));
        for (auto& x : w) {
            x = val(rng);
        }
        CHECK(inversions(w) == naive_inversions(w));
    }
}

TEST_CASE("w statistic")
{
    CHECK(stat_w(SetPartition{3, {{1, 2, 3}}}) == 0);
    CHECK(stat_w(SetPartition{3, {{1, 2}, {3}}}) == 1);
    CHECK(stat_w(SetPartition{3, {{1}, {2, 3}}}) == 2);
}

TEST_CASE("inv_rho statistic")
{
    CHECK(stat_inv_rho(LahDist{8, {{1, 4}, {3, 2, 5}, {7, 6, 8}}}) == 30);
    CHECK(stat_inv_rho(LahDist{4, {{1, 2, 3, 4}}}) == 0);
    CHECK(stat_inv_rho(LahDist{2, {{2, 1}}}) == 1);
}

TEST_CASE("inv_c statistic")
{
    CHECK(stat_inv_c(CyclePerm{3, {{1}, {2}, {3}}}) == 0);
    CHECK(stat_inv_c(CyclePerm{7, {{1, 3, 4}, {2}, {5, 7, 6}}}) == 3);
    CHECK(stat_inv_c(CyclePerm{2, {{1, 2}}}) == 0);
}

TEST_CASE("extended statistics")
{
    const ExtLahDist big = parse_ext_lah("(1),3,(2)/4,(5),7/13,6,8,(9)/12,11,10,14,(15)");
    CHECK(ext_stats(big) == ExtStats{4, 3, 5});
    CHECK(weight(big) == MPoly::from_monomial(4, 3, 5, 0));
    CHECK(weight(parse_ext_lah("1")) == MPoly::constant(1));
    CHECK(weight(parse_ext_lah("1,(2)")) == MPoly::variable(Var::r));
    CHECK(ext_stats(parse_ext_lah("(1),2")) == ExtStats{1, 0, 1});
    // no circles, increasing blocks
    CHECK(ext_stats(parse_ext_lah("1,2,5/3,4/6")) == ExtStats{3, 0, 0});
}

TEST_CASE("statistics are invariant under re-storing then canonicalizing")
{
    for (int k = 1; k <= 5; ++k) {
        for (const auto& d : enum_lah(5, k, 0)) {
            LahDist shuffled = d;
            std::reverse(shuffled.blocks.begin(), shuffled.blocks.end());
            CHECK(stat_inv_rho(canonicalize(shuffled)) == stat_inv_rho(d));
            CHECK(canonicalize(canonicalize(shuffled)) == canonicalize(shuffled));
        }
        for (const auto& c : enum_cycle_perms(5, k, 0)) {
            CyclePerm rotated = c;
            for (auto& cyc : rotated.cycles) {
                std::rotate(cyc.begin(), cyc.begin() + static_cast<long>(cyc.size() / 2), cyc.end());
            }
            std::reverse(rotated.cycles.begin(), rotated.cycles.end());
            CHECK(canonicalize(rotated) == c);
            CHECK(stat_inv_c(canonicalize(rotated)) == stat_inv_c(c));
        }
    }
}

TEST_CASE("incremental statistics equal direct recomputation")
{
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int r = 0; r <= 1; ++r) {
                for_each_partition(n, k, r, [](const SetPartition& p, std::int64_t s) { CHECK(s == stat_w(p)); });
                for_each_cycle_perm(n, k, r,
                                    [](const CyclePerm& c, std::int64_t s) { CHECK(s == stat_inv_c(c)); });
                for_each_lah(n, k, r, [](const LahDist& d, std::int64_t s) { CHECK(s == stat_inv_rho(d)); });
            }
            for_each_extended_lah(n, k, [](const ExtLahDist& e, const ExtStats& s) { CHECK(s == ext_stats(e)); });
        }
    }
}

TEST_CASE("extended statistics account for every element")
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& e : enum_extended_lah(n, k)) {
                const ExtStats s = ext_stats(e);
                // uncircled true-block minima plus uncircled non-minimum record lows
                int minima = 0;
                for (const auto& b : e.base.blocks) {
                    const bool holds_circled_one = e.one_circled() && std::count(b.begin(), b.end(), 1) == 1;
                    if (!holds_circled_one) {
                        ++minima;
                    }
                }
                CHECK(s.nrec + s.rec_star + minima + s.circ == n);
            }
        }
    }
}

TEST_CASE("record lows do not depend on circled elements")
{
    for (int n = 1; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& e : enum_extended_lah(n, k)) {
                for (const auto& b : e.base.blocks) {
                    if (e.one_circled() && b.front() == 1) {
                        continue;
                    }
                    for (std::size_t i = 0; i < b.size(); ++i) {
                        if (e.is_circled(b[i])) {
                            continue;
                        }
                        bool low_full = true;
                        bool low_uncircled = true;
                        for (std::size_t j = 0; j < i; ++j) {
                            if (b[j] < b[i]) {
                                low_full = false;
                                low_uncircled = low_uncircled && e.is_circled(b[j]);
                            }
                        }
                        CHECK(low_full == low_uncircled);
                    }
                }
            }
        }
    }
}

TEST_CASE("w-sums have non-negative coefficients and classical values at q = 1")
{
    const auto s = indep::stirling2(8);
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<BigInt> hist;
            BigInt total = 0;
            for_each_partition(n, k, 0, [&](const SetPartition&, std::int64_t w) {
                if (hist.size() <= static_cast<std::size_t>(w)) {
                    hist.resize(static_cast<std::size_t>(w) + 1, 0);
                }
                ++hist[static_cast<std::size_t>(w)];
                ++total;
            });
            CHECK(std::all_of(hist.begin(), hist.end(), [](const BigInt& c) { return c >= 0; }));
            CHECK(total == s[n][k]);
        }
    }
}
