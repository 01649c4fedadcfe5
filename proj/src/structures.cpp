#include "qcomb/structures.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

// Blocks non-empty, pairwise disjoint, covering [n].
bool covers_exactly(int n, const std::vector<Block>& blocks)
{
    if (n < 0) {
        return false;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) {
            return false;
        }
        for (int e : b) {
            if (e < 1 || e > n || seen[e]) {
                return false;
            }
            seen[e] = true;
            ++count;
        }
    }
    return count == n;
}

bool ordered_by_min(const std::vector<Block>& blocks)
{
    int prev = 0;
    for (const auto& b : blocks) {
        const int m = *std::min_element(b.begin(), b.end());
        if (m <= prev) {
            return false;
        }
        prev = m;
    }
    return true;
}

std::string join_blocks(const std::vector<Block>& blocks, const std::vector<bool>* circled)
{
    std::string out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) {
            out += '/';
        }
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            const int e = blocks[b][i];
            const bool c = circled != nullptr && static_cast<std::size_t>(e) < circled->size() && (*circled)[e];
            out += c ? "(" + std::to_string(e) + ")" : std::to_string(e);
        }
    }
    return out;
}

} // namespace

int ExtLahDist::circled_count() const
{
    return static_cast<int>(std::count(circled.begin(), circled.end(), true));
}

int ExtLahDist::true_blocks() const
{
    const int total = static_cast<int>(base.blocks.size());
    return one_circled() ? total - 1 : total;
}

ExtLahDist make_ext_lah(int n, std::vector<Block> blocks, const std::vector<int>& circled)
{
    ExtLahDist d;
    d.base.n = n;
    d.base.blocks = std::move(blocks);
    d.circled.assign(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
    for (int e : circled) {
        if (e < 1 || e > n) {
            throw std::invalid_argument("make_ext_lah: circled element out of range");
        }
        d.circled[e] = true;
    }
    return d;
}

bool is_valid(const SetPartition& p)
{
    if (!covers_exactly(p.n, p.blocks)) {
        return false;
    }
    for (const auto& b : p.blocks) {
        if (!std::is_sorted(b.begin(), b.end())) {
            return false;
        }
    }
    return ordered_by_min(p.blocks);
}

bool is_valid(const CyclePerm& p)
{
    if (!covers_exactly(p.n, p.cycles)) {
        return false;
    }
    for (const auto& c : p.cycles) {
        if (*std::min_element(c.begin(), c.end()) != c.front()) {
            return false;
        }
    }
    return ordered_by_min(p.cycles);
}

bool is_valid(const LahDist& d) { return covers_exactly(d.n, d.blocks) && ordered_by_min(d.blocks); }

bool is_valid(const ExtLahDist& d)
{
    if (!is_valid(d.base) || d.circled.size() != static_cast<std::size_t>(d.base.n) + 1 || d.circled[0]) {
        return false;
    }
    const auto special = special_elements(d.base);
    for (int e = 1; e <= d.base.n; ++e) {
        if (d.circled[e] && !std::binary_search(special.begin(), special.end(), e)) {
            return false;
        }
    }
    if (d.one_circled() && d.base.blocks.front().front() != 1) {
        return false;
    }
    return true;
}

bool is_r_restricted(const std::vector<Block>& blocks, int r)
{
    for (const auto& b : blocks) {
        const auto low = std::count_if(b.begin(), b.end(), [r](int e) { return e <= r; });
        if (low > 1) {
            return false;
        }
    }
    return true;
}

std::vector<int> special_elements(const LahDist& d)
{
    std::vector<bool> seen(static_cast<std::size_t>(d.n) + 2, false);
    std::vector<bool> is_min(static_cast<std::size_t>(d.n) + 2, false);
    for (const auto& b : d.blocks) {
        is_min[*std::min_element(b.begin(), b.end())] = true;
    }
    std::vector<int> out;
    int low = 1; // smallest element not yet scanned
    for (const auto& b : d.blocks) {
        for (int e : b) {
            if (e == 1 || (!is_min[e] && low == e)) {
                out.push_back(e);
            }
            seen[e] = true;
            while (low <= d.n && seen[low]) {
                ++low;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetPartition canonicalize(SetPartition p)
{
    for (auto& b : p.blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(p.blocks.begin(), p.blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return p;
}

CyclePerm canonicalize(CyclePerm p)
{
    for (auto& c : p.cycles) {
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    }
    std::sort(p.cycles.begin(), p.cycles.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return p;
}

LahDist canonicalize(LahDist d)
{
    std::sort(d.blocks.begin(), d.blocks.end(), [](const Block& a, const Block& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return d;
}

std::string to_text(const SetPartition& p) { return join_blocks(p.blocks, nullptr); }
std::string to_text(const CyclePerm& p) { return join_blocks(p.cycles, nullptr); }
std::string to_text(const LahDist& d) { return join_blocks(d.blocks, nullptr); }
std::string to_text(const ExtLahDist& d) { return join_blocks(d.base.blocks, &d.circled); }

ExtLahDist parse_ext_lah(const std::string& text)
{
    std::vector<Block> blocks;
    std::vector<int> circled;
    int n = 0;
    if (!text.empty()) {
        std::stringstream blocks_in(text);
        std::string block_text;
        while (std::getline(blocks_in, block_text, '/')) {
            Block block;
            std::stringstream elems_in(block_text);
            std::string tok;
            while (std::getline(elems_in, tok, ',')) {
                bool c = false;
                if (tok.size() >= 3 && tok.front() == '(' && tok.back() == ')') {
                    c = true;
                    tok = tok.substr(1, tok.size() - 2);
                }
                std::size_t used = 0;
                const int e = std::stoi(tok, &used);
                if (used != tok.size()) {
                    throw std::invalid_argument("parse_ext_lah: bad element '" + tok + "'");
                }
                block.push_back(e);
                if (c) {
                    circled.push_back(e);
                }
                ++n;
            }
            blocks.push_back(std::move(block));
        }
    }
    auto d = make_ext_lah(n, std::move(blocks), circled);
    if (!is_valid(d)) {
        throw std::invalid_argument("parse_ext_lah: not a valid extended Lah distribution: " + text);
    }
    return d;
}

BigInt cell_size(StructureFamily family, int n, int k, int r)
{
    if (n < 0 || r < 0) {
        throw std::invalid_argument("cell_size: negative argument");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    // row[j] holds the count for (current size, j)
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(0));
    row[0] = 1;
    for (int size = 1; size <= n; ++size) {
        std::vector<BigInt> next(row.size(), BigInt(0));
        for (int j = 0; j <= size; ++j) {
            BigInt factor;
            switch (family) {
            case StructureFamily::partitions: factor = j + r; break;
            case StructureFamily::perms: factor = size - 1 + r; break;
            case StructureFamily::lah: factor = size - 1 + j + 2 * r; break;
            case StructureFamily::ext_lah: factor = size + j; break;
            }
            next[j] = factor * row[j];
            if (j > 0) {
                next[j] += row[j - 1];
            }
        }
        row = std::move(next);
    }
    return row[k];
}

std::uint64_t default_cell_cap()
{
    if (const char* env = std::getenv("QCOMB_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultCellCap;
}

void check_capacity(StructureFamily family, int n, int k, int r, const EnumOptions& options)
{
    const BigInt size = cell_size(family, n, k, r);
    if (size > options.cell_cap) {
        throw CapacityError("enumeration cell (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                ", r=" + std::to_string(r) + ") has " + size.str() + " structures, cap is " +
                                std::to_string(options.cell_cap),
                            size, BigInt(options.cell_cap));
    }
}

} // namespace qcomb

#include "qcomb/enumerate.hpp"

namespace qcomb {

std::vector<SetPartition> enum_partitions(int n, int k, int r, const EnumOptions& options)
{
    std::vector<SetPartition> out;
    for_each_partition(n, k, r, [&](const SetPartition& p, std::int64_t) { out.push_back(p); }, options);
    return out;
}

std::vector<CyclePerm> enum_cycle_perms(int n, int k, int r, const EnumOptions& options)
{
    std::vector<CyclePerm> out;
    for_each_cycle_perm(n, k, r, [&](const CyclePerm& p, std::int64_t) { out.push_back(p); }, options);
    return out;
}

std::vector<LahDist> enum_lah(int n, int k, int r, const EnumOptions& options)
{
    std::vector<LahDist> out;
    for_each_lah(n, k, r, [&](const LahDist& d, std::int64_t) { out.push_back(d); }, options);
    return out;
}

std::vector<ExtLahDist> enum_extended_lah(int n, int k, const EnumOptions& options)
{
    std::vector<ExtLahDist> out;
    for_each_extended_lah(n, k, [&](const ExtLahDist& d, const ExtStats&) { out.push_back(d); }, options);
    return out;
}

} // namespace qcomb
