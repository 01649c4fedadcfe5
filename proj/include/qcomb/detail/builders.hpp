#pragma once

// Insertion builders behind the enumerators. Each builder grows a structure
// one element at a time (element e is added to every legal position of each
// structure on [e-1]) and carries the statistic forward incrementally.
// expand() mutates the state in place, calls f once per child, and restores
// the state before returning.

#include <cstdint>
#include <numeric>
#include <vector>

#include "qcomb/errors.hpp"
#include "qcomb/statistics.hpp"
#include "qcomb/structures.hpp"

namespace qcomb::detail {

struct PartitionBuilder {
    using Structure = SetPartition;
    using Stat = std::int64_t;
    struct State {
        SetPartition s;
        std::int64_t stat = 0;
        int next = 1;
        const SetPartition& structure() const { return s; }
    };

    int total;
    int target;
    int r;

    PartitionBuilder(int n, int k, int r_) : total(n + r_), target(k + r_), r(r_) {}

    State initial() const
    {
        State st;
        st.s.n = total;
        for (int e = 1; e <= r; ++e) {
            st.s.blocks.push_back({e});
        }
        st.stat = static_cast<std::int64_t>(r) * (r - 1) / 2;
        st.next = r + 1;
        return st;
    }
    bool done(const State& st) const { return st.next > total; }
    bool accept(const State& st) const { return static_cast<int>(st.s.blocks.size()) == target; }
    bool feasible(const State& st) const
    {
        const int nb = static_cast<int>(st.s.blocks.size());
        return nb <= target && nb + (total - st.next + 1) >= target;
    }
    template <class F>
    void expand(State& st, F&& f) const
    {
        const int e = st.next++;
        auto& blocks = st.s.blocks;
        const std::size_t nb = blocks.size();
        for (std::size_t t = 0; t < nb; ++t) {
            blocks[t].push_back(e);
            st.stat += static_cast<std::int64_t>(t);
            f(st);
            st.stat -= static_cast<std::int64_t>(t);
            blocks[t].pop_back();
        }
        blocks.push_back({e});
        st.stat += static_cast<std::int64_t>(nb);
        f(st);
        st.stat -= static_cast<std::int64_t>(nb);
        blocks.pop_back();
        --st.next;
    }
};

struct CycleBuilder {
    using Structure = CyclePerm;
    using Stat = std::int64_t;
    struct State {
        CyclePerm s;
        std::int64_t stat = 0;
        int next = 1;
        const CyclePerm& structure() const { return s; }
    };

    int total;
    int target;
    int r;

    CycleBuilder(int n, int k, int r_) : total(n + r_), target(k + r_), r(r_) {}

    State initial() const
    {
        State st;
        st.s.n = total;
        for (int e = 1; e <= r; ++e) {
            st.s.cycles.push_back({e});
        }
        st.next = r + 1;
        return st;
    }
    bool done(const State& st) const { return st.next > total; }
    bool accept(const State& st) const { return static_cast<int>(st.s.cycles.size()) == target; }
    bool feasible(const State& st) const
    {
        const int nc = static_cast<int>(st.s.cycles.size());
        return nc <= target && nc + (total - st.next + 1) >= target;
    }
    template <class F>
    void expand(State& st, F&& f) const
    {
        const int e = st.next++;
        auto& cycles = st.s.cycles;
        const std::size_t nc = cycles.size();
        // e is the largest element so far: placing it after position p
        // creates one inversion with every letter to its right.
        std::int64_t after = 0;
        for (const auto& c : cycles) {
            after += static_cast<std::int64_t>(c.size());
        }
        for (std::size_t c = 0; c < nc; ++c) {
            const auto len = static_cast<std::int64_t>(cycles[c].size());
            after -= len;
            for (std::int64_t p = 0; p < len; ++p) {
                const std::int64_t inc = (len - p - 1) + after;
                cycles[c].insert(cycles[c].begin() + p + 1, e);
                st.stat += inc;
                f(st);
                st.stat -= inc;
                cycles[c].erase(cycles[c].begin() + p + 1);
            }
        }
        cycles.push_back({e});
        f(st);
        cycles.pop_back();
        --st.next;
    }
};

struct LahBuilder {
    using Structure = LahDist;
    using Stat = std::int64_t;
    struct State {
        LahDist s;
        std::int64_t stat = 0;
        int next = 1;
        const LahDist& structure() const { return s; }
    };

    int total;
    int target;
    int r;

    LahBuilder(int n, int k, int r_) : total(n + r_), target(k + r_), r(r_) {}

    State initial() const
    {
        State st;
        st.s.n = total;
        for (int e = 1; e <= r; ++e) {
            st.s.blocks.push_back({e});
        }
        // word r 0 (r-1) 0 ... 0 1
        st.stat = static_cast<std::int64_t>(r) * (r - 1);
        st.next = r + 1;
        return st;
    }
    bool done(const State& st) const { return st.next > total; }
    bool accept(const State& st) const { return static_cast<int>(st.s.blocks.size()) == target; }
    bool feasible(const State& st) const
    {
        const int nb = static_cast<int>(st.s.blocks.size());
        return nb <= target && nb + (total - st.next + 1) >= target;
    }
    template <class F>
    void expand(State& st, F&& f) const
    {
        const int e = st.next++;
        auto& blocks = st.s.blocks;
        const std::size_t nb = blocks.size();
        // In the inv_rho word stored block t is followed by t separators and
        // the contents of blocks 0..t-1.
        std::int64_t before = 0; // letters in blocks 0..t-1
        for (std::size_t t = 0; t < nb; ++t) {
            const auto len = static_cast<std::int64_t>(blocks[t].size());
            for (std::int64_t p = 0; p <= len; ++p) {
                const std::int64_t inc = (len - p) + before + static_cast<std::int64_t>(t);
                blocks[t].insert(blocks[t].begin() + p, e);
                st.stat += inc;
                f(st);
                st.stat -= inc;
                blocks[t].erase(blocks[t].begin() + p);
            }
            before += len;
        }
        const std::int64_t inc = before + static_cast<std::int64_t>(nb);
        blocks.push_back({e});
        st.stat += inc;
        f(st);
        st.stat -= inc;
        blocks.pop_back();
        --st.next;
    }
};

struct ExtLahBuilder {
    using Structure = ExtLahDist;
    using Stat = ExtStats;
    struct State {
        ExtLahDist s;
        ExtStats stat;
        int true_blocks = 0;
        int next = 1;
        const ExtLahDist& structure() const { return s; }
    };

    int total;
    int target;

    ExtLahBuilder(int n, int k) : total(n), target(k) {}

    State initial() const
    {
        State st;
        st.s.base.n = total;
        st.s.circled.assign(static_cast<std::size_t>(total) + 1, false);
        return st;
    }
    bool done(const State& st) const { return st.next > total; }
    bool accept(const State& st) const { return st.true_blocks == target; }
    bool feasible(const State& st) const
    {
        return st.true_blocks <= target && st.true_blocks + (total - st.next + 1) >= target;
    }
    template <class F>
    void expand(State& st, F&& f) const
    {
        const int e = st.next++;
        auto& blocks = st.s.base.blocks;
        if (e == 1) {
            blocks.push_back({1});
            ++st.true_blocks;
            f(st);
            --st.true_blocks;
            st.s.circled[1] = true;
            ++st.stat.circ;
            f(st);
            --st.stat.circ;
            st.s.circled[1] = false;
            blocks.pop_back();
            --st.next;
            return;
        }
        for (std::size_t t = 0; t < blocks.size(); ++t) {
            const bool is_true = !(st.s.circled[1] && t == 0);
            if (is_true) {
                // front of a true block: a record low that is not the minimum
                blocks[t].insert(blocks[t].begin(), e);
                ++st.stat.rec_star;
                f(st);
                --st.stat.rec_star;
                blocks[t].erase(blocks[t].begin());
            }
            for (std::size_t p = 0; p < blocks[t].size(); ++p) {
                // directly after a member of [e-1]: not a record low
                blocks[t].insert(blocks[t].begin() + static_cast<std::ptrdiff_t>(p) + 1, e);
                ++st.stat.nrec;
                f(st);
                --st.stat.nrec;
                blocks[t].erase(blocks[t].begin() + static_cast<std::ptrdiff_t>(p) + 1);
            }
        }
        if (!blocks.empty()) {
            // circled: last element of the right-most block
            blocks.back().push_back(e);
            st.s.circled[e] = true;
            ++st.stat.circ;
            f(st);
            --st.stat.circ;
            st.s.circled[e] = false;
            blocks.back().pop_back();
        }
        blocks.push_back({e});
        ++st.true_blocks;
        f(st);
        --st.true_blocks;
        blocks.pop_back();
        --st.next;
    }
};

template <class B, class Visit>
void dfs(const B& builder, typename B::State& st, Visit& visit)
{
    if (builder.done(st)) {
        if (builder.accept(st)) {
            visit(st);
        }
        return;
    }
    builder.expand(st, [&](typename B::State& child) {
        if (builder.feasible(child)) {
            dfs(builder, child, visit);
        }
    });
}

/// Breadth-first expansion from the initial state until at least min_size
/// independent subtrees exist (or the tree is exhausted).
template <class B>
std::vector<typename B::State> frontier(const B& builder, std::size_t min_size)
{
    std::vector<typename B::State> level;
    auto root = builder.initial();
    if (builder.feasible(root)) {
        level.push_back(std::move(root));
    }
    while (!level.empty() && level.size() < min_size) {
        std::vector<typename B::State> next;
        bool expanded = false;
        for (auto& st : level) {
            if (builder.done(st)) {
                next.push_back(st);
                continue;
            }
            expanded = true;
            builder.expand(st, [&](typename B::State& child) {
                if (builder.feasible(child)) {
                    next.push_back(child);
                }
            });
        }
        level = std::move(next);
        if (!expanded) {
            break;
        }
    }
    return level;
}

} // namespace qcomb::detail
