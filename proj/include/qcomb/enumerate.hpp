#pragma once

// Exhaustive, deterministic enumerators for the four structure families.
// The visitor receives each structure together with the statistic that was
// tracked incrementally while the structure was built:
//   partitions -> w, perms -> inv_c, lah -> inv_rho, ext_lah -> ExtStats.
// Every enumerator checks the cell against the cap before starting and
// throws CapacityError rather than running away.

#include <utility>
#include <vector>

#include "qcomb/detail/builders.hpp"

namespace qcomb {

namespace detail {

template <class B, class Visit>
void run_enumeration(const B& builder, Visit&& visit)
{
    auto root = builder.initial();
    if (!builder.feasible(root)) {
        return;
    }
    auto adapter = [&](const typename B::State& st) { visit(st.structure(), st.stat); };
    dfs(builder, root, adapter);
}

} // namespace detail

/// Members of P^{(r)}_{n,k}: partitions of [n+r] into k+r blocks with 1..r in distinct blocks.
template <class Visit>
void for_each_partition(int n, int k, int r, Visit&& visit, const EnumOptions& options = {})
{
    check_capacity(StructureFamily::partitions, n, k, r, options);
    if (k < 0 || k > n) {
        return;
    }
    detail::run_enumeration(detail::PartitionBuilder(n, k, r), std::forward<Visit>(visit));
}

/// Members of G^{(r)}_{n,k}: permutations of [n+r] with k+r cycles, 1..r in distinct cycles.
template <class Visit>
void for_each_cycle_perm(int n, int k, int r, Visit&& visit, const EnumOptions& options = {})
{
    check_capacity(StructureFamily::perms, n, k, r, options);
    if (k < 0 || k > n) {
        return;
    }
    detail::run_enumeration(detail::CycleBuilder(n, k, r), std::forward<Visit>(visit));
}

/// Members of L^{(r)}_{n,k}: Lah distributions of [n+r] into k+r blocks, 1..r in distinct blocks.
template <class Visit>
void for_each_lah(int n, int k, int r, Visit&& visit, const EnumOptions& options = {})
{
    check_capacity(StructureFamily::lah, n, k, r, options);
    if (k < 0 || k > n) {
        return;
    }
    detail::run_enumeration(detail::LahBuilder(n, k, r), std::forward<Visit>(visit));
}

/// Members of L*_{n,k}: extended Lah distributions of [n] with exactly k true
/// blocks. Each yielded value is re-validated.
template <class Visit>
void for_each_extended_lah(int n, int k, Visit&& visit, const EnumOptions& options = {})
{
    check_capacity(StructureFamily::ext_lah, n, k, 0, options);
    if (k < 0 || k > n) {
        return;
    }
    detail::run_enumeration(detail::ExtLahBuilder(n, k), [&](const ExtLahDist& d, const ExtStats& s) {
        if (!is_valid(d)) {
            throw InternalError("enum_extended_lah produced an invalid structure: " + to_text(d));
        }
        visit(d, s);
    });
}

std::vector<SetPartition> enum_partitions(int n, int k, int r, const EnumOptions& options = {});
std::vector<CyclePerm> enum_cycle_perms(int n, int k, int r, const EnumOptions& options = {});
std::vector<LahDist> enum_lah(int n, int k, int r, const EnumOptions& options = {});
std::vector<ExtLahDist> enum_extended_lah(int n, int k, const EnumOptions& options = {});

} // namespace qcomb
