#include <set>
#include <string>
#include <unordered_set>

#include "doctest.h"
#include "independent.hpp"

#include "qcomb/enumerate.hpp"
#include "qcomb/errors.hpp"
#include "qcomb/statistics.hpp"

using namespace qcomb;

TEST_CASE("partition counts match the independent r-Stirling triangle")
{
    for (int r = 0; r <= 2; ++r) {
        const auto t = indep::stirling2(7, r);
        for (int n = 0; n <= 7; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(enum_partitions(n, k, r).size() == t[n][k]);
            }
        }
    }
    CHECK(enum_partitions(3, 2, 0).size() == 3);
    CHECK(enum_partitions(1, 1, 1).size() == 1);
    CHECK(to_text(enum_partitions(1, 1, 1).front()) == "1/2");
    CHECK(enum_partitions(3, 4, 0).empty());
    CHECK(enum_partitions(3, -1, 0).empty());
}

TEST_CASE("cycle permutation counts match the independent r-Stirling triangle")
{
    for (int r = 0; r <= 2; ++r) {
        const auto t = indep::stirling1(7, r);
        for (int n = 0; n <= 7; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(enum_cycle_perms(n, k, r).size() == t[n][k]);
            }
        }
    }
    CHECK(enum_cycle_perms(3, 2, 0).size() == 3);
    CHECK(enum_cycle_perms(2, 1, 1).size() == 3);
}

TEST_CASE("Lah counts match the independent r-Lah triangle")
{
    for (int r = 0; r <= 2; ++r) {
        const auto t = indep::lah(7, r);
        for (int n = 0; n <= 7; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(enum_lah(n, k, r).size() == t[n][k]);
            }
        }
    }
    for (int n = 1; n <= 7; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(enum_lah(n, k, 0).size() == binomial(n - 1, k - 1) * factorial(n) / factorial(k));
        }
    }
    CHECK(enum_lah(2, 1, 0).size() == 2);
}

TEST_CASE("r-restricted structures are valid with 1..r separated")
{
    for (int n = 0; n <= 6; ++n) {
        for (int r = 0; r <= 2; ++r) {
            for (int k = 0; k <= n; ++k) {
                for (const auto& p : enum_partitions(n, k, r)) {
                    CHECK(is_valid(p));
                    CHECK(p.n == n + r);
                    CHECK(p.blocks.size() == static_cast<std::size_t>(k + r));
                    CHECK(is_r_restricted(p.blocks, r));
                }
                for (const auto& c : enum_cycle_perms(n, k, r)) {
                    CHECK(is_valid(c));
                    CHECK(is_r_restricted(c.cycles, r));
                }
                for (const auto& d : enum_lah(n, k, r)) {
                    CHECK(is_valid(d));
                    CHECK(is_r_restricted(d.blocks, r));
                }
            }
        }
    }
}

TEST_CASE("streams contain no duplicates")
{
    for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::unordered_set<std::string> seen;
            for (const auto& d : enum_lah(n, k, 1)) {
                CHECK(seen.insert(to_text(d)).second);
            }
            seen.clear();
            for (const auto& c : enum_cycle_perms(n, k, 1)) {
                CHECK(seen.insert(to_text(c)).second);
            }
            seen.clear();
            for (const auto& p : enum_partitions(n, k, 2)) {
                CHECK(seen.insert(to_text(p)).second);
            }
            seen.clear();
            for (const auto& e : enum_extended_lah(n, k)) {
                CHECK(seen.insert(to_text(e)).second);
            }
        }
    }
}

TEST_CASE("extended Lah enumeration equals the circling-subset generator")
{
    for (int n = 0; n <= 6; ++n) {
        const auto expected = indep::extended_lah(n);
        for (int k = 0; k <= n; ++k) {
            std::set<std::string> got;
            for (const auto& e : enum_extended_lah(n, k)) {
                CHECK(is_valid(e));
                CHECK(e.true_blocks() == k);
                got.insert(to_text(e));
            }
            CHECK(got == expected[k]);
        }
    }
}

TEST_CASE("extended Lah small cells")
{
    std::set<std::string> two_one;
    for (const auto& e : enum_extended_lah(2, 1)) {
        two_one.insert(to_text(e));
    }
    CHECK(two_one == std::set<std::string>{"1,2", "2,1", "1,(2)", "(1)/2"});
    CHECK(enum_extended_lah(0, 0).size() == 1);
    for (int n = 0; n <= 7; ++n) {
        CHECK(enum_extended_lah(n, 0).size() == factorial(n));
    }
}

TEST_CASE("validators reject malformed structures")
{
    CHECK_FALSE(is_valid(SetPartition{3, {{1, 3}, {2}, {3}}}));
    CHECK_FALSE(is_valid(SetPartition{3, {{2}, {1, 3}}}));
    CHECK_FALSE(is_valid(CyclePerm{3, {{2, 1}, {3}}}));
    CHECK_FALSE(is_valid(LahDist{2, {{1}, {}}}));
    CHECK(is_valid(LahDist{2, {{2, 1}}}));
    // 2 is not special in 2,1
    CHECK_FALSE(is_valid(make_ext_lah(2, {{2, 1}}, {2})));
    // circled 1 must start its block
    CHECK_FALSE(is_valid(make_ext_lah(3, {{2, 1}, {3}}, {1})));
    // circled i >= 2 never starts a block
    CHECK_FALSE(is_valid(make_ext_lah(3, {{1, 3}, {2}}, {2})));
    CHECK(is_valid(make_ext_lah(3, {{1, 2, 3}}, {1, 2, 3})));
}

TEST_CASE("special elements")
{
    CHECK(special_elements(LahDist{4, {{1, 2, 3, 4}}}) == std::vector<int>{1, 2, 3, 4});
    CHECK(special_elements(LahDist{3, {{2, 1}, {3}}}) == std::vector<int>{1});
    const ExtLahDist lambda = parse_ext_lah("(1),3,(2)/4,(5),7/13,6,8,(9)/12,11,10,14,(15)");
    const auto sp = special_elements(lambda.base);
    CHECK(std::count(sp.begin(), sp.end(), 8) == 1);
    CHECK(std::count(sp.begin(), sp.end(), 14) == 1);
    CHECK_FALSE(lambda.is_circled(8));
    CHECK_FALSE(lambda.is_circled(14));
}

TEST_CASE("canonical text round trips")
{
    const std::string text = "(1),3,(2)/4,(5)";
    CHECK(to_text(parse_ext_lah(text)) == text);
    CHECK(to_text(ExtLahDist{}) == "");
    for (int k = 0; k <= 5; ++k) {
        for (const auto& e : enum_extended_lah(5, k)) {
            CHECK(parse_ext_lah(to_text(e)) == e);
        }
    }
    CHECK_THROWS_AS((void)parse_ext_lah("1,,2"), std::invalid_argument);
}

TEST_CASE("canonicalize orders blocks and cycles")
{
    CHECK(canonicalize(SetPartition{3, {{3}, {2, 1}}}) == SetPartition{3, {{1, 2}, {3}}});
    CHECK(canonicalize(CyclePerm{4, {{4, 3}, {2, 1}}}) == CyclePerm{4, {{1, 2}, {3, 4}}});
    CHECK(canonicalize(LahDist{3, {{3}, {2, 1}}}) == LahDist{3, {{2, 1}, {3}}});
}

TEST_CASE("cell cap raises a capacity error carrying the estimate")
{
    EnumOptions tiny;
    tiny.cell_cap = 10;
    CHECK(cell_size(StructureFamily::partitions, 5, 2, 0) == 15);
    try {
        (void)enum_partitions(5, 2, 0, tiny);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.estimate() == 15);
        CHECK(e.cap() == 10);
    }
    CHECK_NOTHROW((void)enum_partitions(4, 2, 0, tiny));
}
