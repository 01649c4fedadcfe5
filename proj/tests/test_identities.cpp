#include <algorithm>

#include "doctest.h"

#include "qcomb/errors.hpp"
#include "qcomb/identities.hpp"
#include "qcomb/serialize.hpp"

using namespace qcomb;

namespace {

Grid single(std::vector<std::pair<std::string, int>> at)
{
    Grid g;
    for (const auto& [axis, v] : at) {
        g.ranges.push_back({axis, {v, v}});
    }
    return g;
}

} // namespace

TEST_CASE("indicator pairs")
{
    CHECK(indicator_pair(1, 3, 5) == IndicatorPair{1, 0});
    CHECK(indicator_pair(1, 2, 5) == IndicatorPair{0, 1});
    CHECK(indicator_pair(5, 2, 5) == IndicatorPair{1, 1});
    CHECK(indicator_pair(5, 3, 5) == IndicatorPair{1, 1});
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= 6; ++j) {
                const auto p = indicator_pair(i, j, n);
                CHECK(p.a + p.b == (i == n ? 2 : 1));
            }
        }
    }
}

TEST_CASE("registry is complete and addressable")
{
    const auto names = identity_names();
    for (const char* expected :
         {"I-SPIVEY", "I-MEZO-1",  "I-MEZO-2", "I-PE1",   "I-P1E1",  "I-P1E2",   "I-BIN-1",     "I-BIN-2",
          "I-BIN-3",  "I-BIN-4",   "I-BIN-5",  "I-BIN-6", "I-BIN-7", "I-BIN-8",  "I-BIN-9",     "I-LAH-CF",
          "I-LAH-R",  "I-P2E1",    "I-P2E2",   "I-QBIN",  "I-CQ-REC", "I-T3E1",  "I-T3E2",      "I-CQ-SUM",
          "I-CQ-SYM", "I-T4E1",    "I-T4E2",   "I-T4E3",  "I-T4C1",  "I-GENREC", "I-GENL1",     "I-GENL1-REC",
          "I-T5E1",   "I-T5E2",    "I-T5-BIJ"}) {
        CHECK_MESSAGE(std::count(names.begin(), names.end(), expected) == 1, expected);
    }
    CHECK_FALSE(is_registered("NO-SUCH"));
    CHECK_THROWS_AS((void)default_grid("NO-SUCH"), std::invalid_argument);
    CHECK_THROWS_AS((void)check("NO-SUCH"), std::invalid_argument);
}

TEST_CASE("identities hold on their default grids")
{
    for (const auto& name : identity_names()) {
        if (name == "I-PE1") {
            continue;
        }
        const IdentityReport rep = check(name);
        CHECK_MESSAGE(rep.status == Status::pass, summary_line(rep));
        CHECK(rep.cells_checked == grid_cells(name, rep.grid).size());
        CHECK(rep.grid == default_grid(name));
    }
}

TEST_CASE("shift relation without the singleton-block factor")
{
    Grid low = default_grid("I-PE1");
    low.ranges[2].second = {0, 1};
    CHECK(check("I-PE1", low).status == Status::pass);
    const IdentityReport rep = check("I-PE1");
    REQUIRE(rep.status == Status::fail);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->params.at("r") == 2);
    CHECK(rep.counterexample->lhs != rep.counterexample->rhs);
    // lhs carries the extra q^{C(r,2)}
    CHECK(std::get<QPoly>(rep.counterexample->lhs) == std::get<QPoly>(rep.counterexample->rhs).shifted(1));
    CHECK(check("I-PE1-NORM").status == Status::pass);
}

TEST_CASE("spot cells")
{
    CHECK(check("I-SPIVEY", single({{"m", 2}, {"n", 1}})).status == Status::pass);
    CHECK(check("I-GENREC", single({{"n", 1}})).status == Status::pass);
    CHECK(check("I-GENL1", single({{"n", 2}, {"k", 1}})).status == Status::pass);
}

TEST_CASE("grid overrides are recorded and validated")
{
    Grid g = default_grid("I-SPIVEY");
    g.ranges[0].second = {0, 6};
    g.ranges[1].second = {0, 6};
    g.max_mn.reset();
    const IdentityReport rep = check("I-SPIVEY", g);
    CHECK(rep.status == Status::pass);
    CHECK(rep.grid == g);
    CHECK(rep.cells_checked == 49);

    Grid wrong_axis = g;
    wrong_axis.ranges[0].first = "k";
    CHECK_THROWS_AS((void)check("I-SPIVEY", wrong_axis), std::invalid_argument);
    Grid below = default_grid("I-T5-BIJ");
    below.ranges[0].second.lo = 0;
    CHECK_THROWS_AS((void)check("I-T5-BIJ", below), std::invalid_argument);
}

TEST_CASE("m+n bound and k admissibility shape the cells")
{
    const auto cells = grid_cells("I-SPIVEY", default_grid("I-SPIVEY"));
    CHECK(cells.size() == 66);
    for (const auto& c : grid_cells("I-P1E1", default_grid("I-P1E1"))) {
        CHECK(c.at("m") + c.at("n") <= 8);
        CHECK(c.at("k") <= c.at("m") + c.at("n"));
    }
}

TEST_CASE("reports are deterministic across schedules")
{
    CheckOptions serial;
    serial.exec = Exec::serial;
    CheckOptions two;
    two.jobs = 2;
    for (const char* name : {"I-PE1", "I-T4E1", "I-GENL1", "I-T5-BIJ"}) {
        const IdentityReport a = check(name, serial);
        const IdentityReport b = check(name, two);
        const IdentityReport c = check(name);
        CHECK(a == b);
        CHECK(to_json(a).dump() == to_json(c).dump());
    }
}

TEST_CASE("capacity errors propagate out of oracle-backed checks")
{
    CheckOptions tiny;
    tiny.enumeration.cell_cap = 3;
    CHECK_THROWS_AS((void)check("I-GENL1", tiny), CapacityError);
}
