#include "qcomb/oracle.hpp"

#include <array>
#include <exception>
#include <map>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "qcomb/enumerate.hpp"
#include "qcomb/statistics.hpp"

namespace qcomb {

namespace {

using Histogram = std::vector<std::int64_t>;
using ExtHistogram = std::map<std::array<int, 3>, std::int64_t>;

void bump(Histogram& h, std::int64_t e)
{
    const auto idx = static_cast<std::size_t>(e);
    if (idx >= h.size()) {
        h.resize(idx + 1, 0);
    }
    ++h[idx];
}

QPoly to_qpoly(const Histogram& h)
{
    std::vector<BigInt> coeffs(h.begin(), h.end());
    return QPoly(std::move(coeffs));
}

MPoly to_mpoly(const ExtHistogram& h)
{
    MPoly out;
    for (const auto& [e, count] : h) {
        out += MPoly::from_monomial(Exponents{static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1]),
                                              static_cast<std::uint32_t>(e[2]), 0},
                                    count);
    }
    return out;
}

std::int64_t direct_stat(const SetPartition& p) { return stat_w(p); }
std::int64_t direct_stat(const CyclePerm& p) { return stat_inv_c(p); }
std::int64_t direct_stat(const LahDist& d) { return stat_inv_rho(d); }

template <class B>
Histogram histogram_serial(const B& builder)
{
    Histogram h;
    auto root = builder.initial();
    if (!builder.feasible(root)) {
        return h;
    }
    auto visit = [&](const typename B::State& st) { bump(h, direct_stat(st.s)); };
    detail::dfs(builder, root, visit);
    return h;
}

std::size_t frontier_target()
{
    return static_cast<std::size_t>(std::max(1, omp_get_max_threads())) * 16;
}

template <class B>
Histogram histogram_parallel(const B& builder)
{
    auto front = detail::frontier(builder, frontier_target());
    Histogram total;
    const auto count = static_cast<std::ptrdiff_t>(front.size());
#pragma omp parallel
    {
        Histogram local;
        auto visit = [&](const typename B::State& st) { bump(local, direct_stat(st.s)); };
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            detail::dfs(builder, front[static_cast<std::size_t>(i)], visit);
        }
#pragma omp critical(qcomb_oracle_merge)
        {
            if (local.size() > total.size()) {
                total.resize(local.size(), 0);
            }
            for (std::size_t e = 0; e < local.size(); ++e) {
                total[e] += local[e];
            }
        }
    }
    return total;
}

template <class B>
Histogram histogram(const B& builder, Exec exec)
{
    return exec == Exec::parallel ? histogram_parallel(builder) : histogram_serial(builder);
}

void record_ext(ExtHistogram& h, const ExtLahDist& d, std::exception_ptr& error)
{
    if (!is_valid(d)) {
        if (!error) {
            error = std::make_exception_ptr(InternalError("invalid extended Lah distribution: " + to_text(d)));
        }
        return;
    }
    const ExtStats s = ext_stats(d);
    ++h[{s.nrec, s.rec_star, s.circ}];
}

} // namespace

QPoly oracle_q(StructureFamily family, int n, int k, int r, const EnumOptions& options, Exec exec)
{
    if (n < 0 || r < 0) {
        throw std::invalid_argument("oracle: n and r must be non-negative");
    }
    check_capacity(family, n, k, r, options);
    if (k < 0 || k > n) {
        return {};
    }
    switch (family) {
    case StructureFamily::partitions: return to_qpoly(histogram(detail::PartitionBuilder(n, k, r), exec));
    case StructureFamily::perms: return to_qpoly(histogram(detail::CycleBuilder(n, k, r), exec));
    case StructureFamily::lah: return to_qpoly(histogram(detail::LahBuilder(n, k, r), exec));
    case StructureFamily::ext_lah: break;
    }
    throw std::invalid_argument("oracle_q: ext_lah has an MPoly oracle");
}

MPoly oracle_ext_lah(int n, int k, const EnumOptions& options, Exec exec)
{
    if (n < 0) {
        throw std::invalid_argument("oracle: n must be non-negative");
    }
    check_capacity(StructureFamily::ext_lah, n, k, 0, options);
    if (k < 0 || k > n) {
        return {};
    }
    const detail::ExtLahBuilder builder(n, k);
    ExtHistogram total;
    std::exception_ptr error;
    if (exec == Exec::serial) {
        auto root = builder.initial();
        if (builder.feasible(root)) {
            auto visit = [&](const detail::ExtLahBuilder::State& st) { record_ext(total, st.s, error); };
            detail::dfs(builder, root, visit);
        }
    } else {
        auto front = detail::frontier(builder, frontier_target());
        const auto count = static_cast<std::ptrdiff_t>(front.size());
#pragma omp parallel
        {
            ExtHistogram local;
            std::exception_ptr local_error;
            auto visit = [&](const detail::ExtLahBuilder::State& st) { record_ext(local, st.s, local_error); };
#pragma omp for schedule(dynamic, 1)
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                detail::dfs(builder, front[static_cast<std::size_t>(i)], visit);
            }
#pragma omp critical(qcomb_oracle_merge)
            {
                for (const auto& [e, c] : local) {
                    total[e] += c;
                }
                if (local_error && !error) {
                    error = local_error;
                }
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return to_mpoly(total);
}

OracleValue oracle(StructureFamily family, int n, int k, int r, const EnumOptions& options, Exec exec)
{
    if (family == StructureFamily::ext_lah) {
        if (r != 0) {
            throw std::invalid_argument("oracle: ext_lah requires r = 0");
        }
        return oracle_ext_lah(n, k, options, exec);
    }
    return oracle_q(family, n, k, r, options, exec);
}

std::optional<std::string> first_stat_disagreement(StructureFamily family, int n, int k, int r,
                                                   const EnumOptions& options)
{
    std::optional<std::string> found;
    auto check = [&](const auto& s, const auto& incremental, const auto& direct) {
        if (!found && !(incremental == direct)) {
            found = to_text(s);
        }
    };
    switch (family) {
    case StructureFamily::partitions:
        for_each_partition(n, k, r, [&](const SetPartition& p, std::int64_t inc) { check(p, inc, stat_w(p)); },
                           options);
        break;
    case StructureFamily::perms:
        for_each_cycle_perm(n, k, r, [&](const CyclePerm& p, std::int64_t inc) { check(p, inc, stat_inv_c(p)); },
                            options);
        break;
    case StructureFamily::lah:
        for_each_lah(n, k, r, [&](const LahDist& d, std::int64_t inc) { check(d, inc, stat_inv_rho(d)); }, options);
        break;
    case StructureFamily::ext_lah:
        for_each_extended_lah(
            n, k, [&](const ExtLahDist& d, const ExtStats& inc) { check(d, inc, ext_stats(d)); }, options);
        break;
    }
    return found;
}

std::string structure_family_name(StructureFamily f)
{
    switch (f) {
    case StructureFamily::partitions: return "partitions";
    case StructureFamily::perms: return "perms";
    case StructureFamily::lah: return "lah";
    case StructureFamily::ext_lah: return "ext_lah";
    }
    return "?";
}

StructureFamily parse_structure_family(const std::string& name)
{
    for (auto f : {StructureFamily::partitions, StructureFamily::perms, StructureFamily::lah,
                   StructureFamily::ext_lah}) {
        if (structure_family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown structure family '" + name + "'");
}

} // namespace qcomb
