#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcomb/bigint.hpp"
#include "qcomb/mpoly.hpp"
#include "qcomb/numbers.hpp"
#include "qcomb/oracle.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/structures.hpp"

namespace qcomb {

/// (alpha_{i,j}, beta_{i,j}) for ambient n.
struct IndicatorPair {
    int a = 0;
    int b = 0;
    friend bool operator==(const IndicatorPair&, const IndicatorPair&) = default;
};

IndicatorPair indicator_pair(int i, int j, int n);

/// Inclusive parameter ranges in axis order, plus an optional bound on m+n.
struct Grid {
    std::vector<std::pair<std::string, IntRange>> ranges;
    std::optional<int> max_mn;

    const IntRange* find(const std::string& axis) const;
    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Axis name -> value for one grid cell.
using Params = std::map<std::string, int>;

using Value = std::variant<BigInt, QPoly, MPoly>;

struct Counterexample {
    Params params;
    Value lhs;
    Value rhs;
    /// For oracle-backed checks: first structure whose incremental and
    /// direct statistics disagree, when there is one.
    std::optional<std::string> structure;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Status { pass, fail, skipped };

std::string status_name(Status s);
Status parse_status(const std::string& name);

struct IdentityReport {
    std::string identity;
    Grid grid;
    std::uint64_t cells_checked = 0;
    Status status = Status::skipped;
    std::optional<Counterexample> counterexample;
    std::string note;
    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

struct CheckOptions {
    EnumOptions enumeration;
    /// parallel: grid cells are distributed over OpenMP threads.
    Exec exec = Exec::parallel;
    /// Thread bound for the parallel path; 0 keeps the OpenMP default.
    int jobs = 0;
};

/// Registered names in registry order.
std::vector<std::string> identity_names();
bool is_registered(const std::string& name);

/// Throws std::invalid_argument for unregistered names.
Grid default_grid(const std::string& name);
std::string identity_note(const std::string& name);

/// Evaluates both sides exactly on every cell of the grid. The report is
/// identical for the serial and parallel paths: cells are visited in
/// lexicographic order of their parameters and the first failing cell is
/// the one reported. CapacityError propagates.
IdentityReport check(const std::string& name, const Grid& grid, const CheckOptions& options = {});
IdentityReport check(const std::string& name, const CheckOptions& options = {});

/// Cells of `grid` for `name` after the identity's own admissibility rules.
std::vector<Params> grid_cells(const std::string& name, const Grid& grid);

} // namespace qcomb
