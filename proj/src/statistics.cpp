#include "qcomb/statistics.hpp"

#include <algorithm>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

std::int64_t merge_count(std::vector<int>& a, std::vector<int>& tmp, std::size_t lo, std::size_t hi)
{
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t count = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    std::size_t i = lo;
    std::size_t j = mid;
    std::size_t out = lo;
    while (i < mid && j < hi) {
        if (a[j] < a[i]) {
            count += static_cast<std::int64_t>(mid - i);
            tmp[out++] = a[j++];
        } else {
            tmp[out++] = a[i++];
        }
    }
    while (i < mid) {
        tmp[out++] = a[i++];
    }
    while (j < hi) {
        tmp[out++] = a[j++];
    }
    std::copy(tmp.begin() + static_cast<std::ptrdiff_t>(lo), tmp.begin() + static_cast<std::ptrdiff_t>(hi),
              a.begin() + static_cast<std::ptrdiff_t>(lo));
    return count;
}

// Record-low scan of one block's uncircled sublist.
void scan_block(const std::vector<int>& sublist, ExtStats& stats)
{
    if (sublist.empty()) {
        return;
    }
    const int block_min = *std::min_element(sublist.begin(), sublist.end());
    int low = sublist.front() + 1;
    for (int e : sublist) {
        if (e < low) {
            low = e;
            if (e != block_min) {
                ++stats.rec_star;
            }
        } else {
            ++stats.nrec;
        }
    }
}

} // namespace

std::int64_t inversions(std::span<const int> word)
{
    thread_local std::vector<int> buf;
    thread_local std::vector<int> tmp;
    buf.assign(word.begin(), word.end());
    tmp.resize(buf.size());
    return merge_count(buf, tmp, 0, buf.size());
}

std::int64_t stat_w(const SetPartition& p)
{
    std::int64_t w = 0;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        w += static_cast<std::int64_t>(i * p.blocks[i].size());
    }
    return w;
}

std::int64_t stat_inv_rho(const LahDist& d)
{
    std::vector<const Block*> order;
    order.reserve(d.blocks.size());
    for (const auto& b : d.blocks) {
        order.push_back(&b);
    }
    std::sort(order.begin(), order.end(), [](const Block* a, const Block* b) {
        return *std::min_element(a->begin(), a->end()) > *std::min_element(b->begin(), b->end());
    });
    std::vector<int> word;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0) {
            word.push_back(0);
        }
        word.insert(word.end(), order[i]->begin(), order[i]->end());
    }
    return inversions(word);
}

std::int64_t stat_inv_c(const CyclePerm& p)
{
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(p.n));
    for (const auto& c : p.cycles) {
        word.insert(word.end(), c.begin(), c.end());
    }
    return inversions(word);
}

ExtStats ext_stats(const ExtLahDist& d)
{
    ExtStats stats;
    stats.circ = d.circled_count();
    std::vector<int> sublist;
    for (const auto& block : d.base.blocks) {
        const bool holds_circled_one = d.one_circled() && block.front() == 1;
        sublist.clear();
        for (int e : block) {
            if (!d.is_circled(e)) {
                sublist.push_back(e);
            }
        }
        if (!holds_circled_one) {
            scan_block(sublist, stats);
            continue;
        }
        // Virtual-front scan: 1 in front makes every uncircled element a
        // non-record. Must agree with the direct rule (0 to rec*, p to nrec).
        ExtStats scanned;
        sublist.insert(sublist.begin(), 1);
        scan_block(sublist, scanned);
        const int p = static_cast<int>(sublist.size()) - 1;
        if (scanned.rec_star != 0 || scanned.nrec != p) {
            throw InternalError("ext_stats: virtual-front scan disagrees with circled-1 block rule");
        }
        stats.nrec += p;
    }
    return stats;
}

MPoly weight(const ExtStats& s)
{
    return MPoly::from_monomial(static_cast<std::uint32_t>(s.nrec), static_cast<std::uint32_t>(s.rec_star),
                                static_cast<std::uint32_t>(s.circ), 0);
}

MPoly weight(const ExtLahDist& d) { return weight(ext_stats(d)); }

} // namespace qcomb
