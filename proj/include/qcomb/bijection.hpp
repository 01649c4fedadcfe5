#pragma once

#include <vector>

#include "qcomb/structures.hpp"

namespace qcomb {

// Decomposition of an extended Lah distribution on [m+n] into the part
// carried by the blocks that meet [m] and the remainder, with H = [m+1, m+n].

/// An extended Lah distribution on a subset of [m+n]: `shape` lives on
/// [m + labels.size()], where shape element m+t stands for labels[t-1].
struct SubDistribution {
    ExtLahDist shape;
    std::vector<int> labels; // increasing, all in H
    friend bool operator==(const SubDistribution&, const SubDistribution&) = default;
};

struct SplitResult {
    int i = 0; // |tau| = number of H elements outside sigma
    int j = 0; // true blocks among the blocks meeting [m]
    SubDistribution sigma;
    ExtLahDist tau; // relabeled order-preservingly onto [i]
    /// tau's first block starts at the smallest circled H element of the
    /// last block meeting [m] (tau then has a circled 1).
    bool tau_from_circled = false;
    friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

/// Requires m, n >= 1 and a valid lambda on [m+n]; std::invalid_argument otherwise.
SplitResult split_lah(const ExtLahDist& lambda, int m, int n);

/// Inverse of split_lah. Throws std::invalid_argument when (sigma, tau) is
/// not the image of any lambda.
ExtLahDist join_lah(const SubDistribution& sigma, const ExtLahDist& tau, int m, int n);

} // namespace qcomb
