#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcomb/bigint.hpp"

namespace qcomb {

using Block = std::vector<int>;

/// Partition of [n]; blocks strictly increasing and ordered by increasing minimum.
struct SetPartition {
    int n = 0;
    std::vector<Block> blocks;
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Permutation of [n] in standard cycle form: each cycle starts with its
/// minimum and cycles are ordered by increasing minimum.
struct CyclePerm {
    int n = 0;
    std::vector<Block> cycles;
    friend bool operator==(const CyclePerm&, const CyclePerm&) = default;
};

/// Lah distribution of [n]: ordered blocks (internal order significant),
/// stored by increasing minimum.
struct LahDist {
    int n = 0;
    std::vector<Block> blocks;
    friend bool operator==(const LahDist&, const LahDist&) = default;
};

/// Lah distribution with a set of circled special elements.
struct ExtLahDist {
    LahDist base;
    /// circled[e] for e in [1, n]; index 0 unused.
    std::vector<bool> circled;

    bool is_circled(int e) const { return e >= 1 && static_cast<std::size_t>(e) < circled.size() && circled[e]; }
    bool one_circled() const { return is_circled(1); }
    int circled_count() const;
    /// Blocks other than the one holding circled 1.
    int true_blocks() const;
    friend bool operator==(const ExtLahDist&, const ExtLahDist&) = default;
};

/// Builds an ExtLahDist from blocks and a list of circled elements.
ExtLahDist make_ext_lah(int n, std::vector<Block> blocks, const std::vector<int>& circled);

bool is_valid(const SetPartition& p);
bool is_valid(const CyclePerm& p);
bool is_valid(const LahDist& d);
bool is_valid(const ExtLahDist& d);

/// Elements 1..r lie in distinct blocks (cycles).
bool is_r_restricted(const std::vector<Block>& blocks, int r);

/// 1 together with every i >= 2 that is not a block minimum and is preceded,
/// in the left-to-right scan of the blocks, by all of [i-1]. Sorted.
std::vector<int> special_elements(const LahDist& d);

SetPartition canonicalize(SetPartition p);
CyclePerm canonicalize(CyclePerm p);
LahDist canonicalize(LahDist d);

// Canonical text: blocks separated by "/", elements by ",", circled element
// i written "(i)". The empty structure renders as "".
std::string to_text(const SetPartition& p);
std::string to_text(const CyclePerm& p);
std::string to_text(const LahDist& d);
std::string to_text(const ExtLahDist& d);

/// Parses the canonical text of an extended Lah distribution.
ExtLahDist parse_ext_lah(const std::string& text);

enum class StructureFamily { partitions, perms, lah, ext_lah };

/// Exact number of structures in one enumeration cell, from integer
/// recurrences. For ext_lah r is ignored.
BigInt cell_size(StructureFamily family, int n, int k, int r);

inline constexpr std::uint64_t kDefaultCellCap = 10'000'000;

/// QCOMB_MAX_ENUM when set to a positive integer, else kDefaultCellCap.
std::uint64_t default_cell_cap();

struct EnumOptions {
    std::uint64_t cell_cap = default_cell_cap();
};

/// Throws CapacityError when the cell exceeds the cap.
void check_capacity(StructureFamily family, int n, int k, int r, const EnumOptions& options);

} // namespace qcomb
