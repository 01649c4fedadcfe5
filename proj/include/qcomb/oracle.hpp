#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qcomb/mpoly.hpp"
#include "qcomb/qpoly.hpp"
#include "qcomb/structures.hpp"

namespace qcomb {

// Brute-force statistic sums over full enumerations. The statistic of every
// structure is recomputed from scratch (never taken from the incremental
// bookkeeping of the enumerator).

enum class Exec { serial, parallel };

/// sum of q^{stat} over one cell: partitions -> w, perms -> inv_c, lah -> inv_rho.
QPoly oracle_q(StructureFamily family, int n, int k, int r, const EnumOptions& options = {},
               Exec exec = Exec::serial);

/// sum of weight(lambda) over L*_{n,k}.
MPoly oracle_ext_lah(int n, int k, const EnumOptions& options = {}, Exec exec = Exec::serial);

using OracleValue = std::variant<QPoly, MPoly>;

/// Dispatches on family; ext_lah requires r = 0.
OracleValue oracle(StructureFamily family, int n, int k, int r, const EnumOptions& options = {},
                   Exec exec = Exec::serial);

/// Canonical text of the first structure (in enumeration order) whose
/// incrementally tracked statistic differs from the direct one.
std::optional<std::string> first_stat_disagreement(StructureFamily family, int n, int k, int r,
                                                   const EnumOptions& options = {});

std::string structure_family_name(StructureFamily f);
StructureFamily parse_structure_family(const std::string& name);

} // namespace qcomb
