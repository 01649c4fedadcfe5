#pragma once

#include <cstdint>
#include <span>

#include "qcomb/mpoly.hpp"
#include "qcomb/structures.hpp"

namespace qcomb {

/// Statistics of an extended Lah distribution.
struct ExtStats {
    int nrec = 0;     // uncircled elements that are not record lows
    int rec_star = 0; // record lows that are not the block minimum
    int circ = 0;     // circled elements
    friend bool operator==(const ExtStats&, const ExtStats&) = default;
};

/// Pairs i < j with word[i] > word[j]; merge-sort count, O(L log L).
std::int64_t inversions(std::span<const int> word);

/// sum over blocks B_i (ordered by minimum, i from 1) of (i-1)|B_i|.
std::int64_t stat_w(const SetPartition& p);

/// Inversions of W_1 0 W_2 0 ... 0 W_k, the blocks taken by decreasing minimum.
std::int64_t stat_inv_rho(const LahDist& d);

/// Inversions of the concatenated cycles in standard cycle form.
std::int64_t stat_inv_c(const CyclePerm& p);

// Record lows are computed per true block on the sublist of uncircled
// elements. The block holding circled 1 is scanned with a virtual 1 in
// front, so its p uncircled elements all count towards nrec.
ExtStats ext_stats(const ExtLahDist& d);

/// alpha^nrec beta^rec* r^circ
MPoly weight(const ExtStats& s);
MPoly weight(const ExtLahDist& d);

} // namespace qcomb
