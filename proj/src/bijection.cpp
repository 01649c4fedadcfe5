#include "qcomb/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qcomb/errors.hpp"

namespace qcomb {

namespace {

bool meets_prefix(const Block& b, int m)
{
    return std::any_of(b.begin(), b.end(), [m](int e) { return e <= m; });
}

int index_of(const std::vector<int>& sorted, int value)
{
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    return static_cast<int>(it - sorted.begin());
}

} // namespace

SplitResult split_lah(const ExtLahDist& lambda, int m, int n)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("split_lah: m and n must be positive");
    }
    if (lambda.base.n != m + n || !is_valid(lambda)) {
        throw std::invalid_argument("split_lah: not an extended Lah distribution on [m+n]");
    }
    const auto& blocks = lambda.base.blocks;

    // Blocks meeting [m] have minimum <= m and therefore come first.
    std::size_t front = 0;
    while (front < blocks.size() && meets_prefix(blocks[front], m)) {
        ++front;
    }

    SplitResult out;
    out.j = static_cast<int>(front) - (lambda.one_circled() ? 1 : 0);

    // Smallest circled H element of the last front block; it can only sit there.
    std::ptrdiff_t cut = -1;
    if (front > 0) {
        const Block& last = blocks[front - 1];
        int smallest = m + n + 1;
        for (std::size_t p = 0; p < last.size(); ++p) {
            const int e = last[p];
            if (e > m && lambda.is_circled(e) && e < smallest) {
                smallest = e;
                cut = static_cast<std::ptrdiff_t>(p);
            }
        }
    }
    out.tau_from_circled = cut >= 0;

    std::vector<Block> sigma_blocks;
    std::vector<Block> tau_blocks;
    for (std::size_t t = 0; t < front; ++t) {
        const Block& b = blocks[t];
        const bool is_last = t + 1 == front;
        const auto stop = (is_last && cut >= 0) ? static_cast<std::size_t>(cut) : b.size();
        sigma_blocks.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(stop));
        if (stop < b.size()) {
            tau_blocks.emplace_back(b.begin() + static_cast<std::ptrdiff_t>(stop), b.end());
        }
    }
    for (std::size_t t = front; t < blocks.size(); ++t) {
        tau_blocks.push_back(blocks[t]);
    }

    for (const auto& b : sigma_blocks) {
        for (int e : b) {
            if (e > m) {
                out.sigma.labels.push_back(e);
            }
        }
    }
    std::sort(out.sigma.labels.begin(), out.sigma.labels.end());
    std::vector<int> tau_labels;
    for (const auto& b : tau_blocks) {
        tau_labels.insert(tau_labels.end(), b.begin(), b.end());
    }
    std::sort(tau_labels.begin(), tau_labels.end());
    out.i = static_cast<int>(tau_labels.size());

    const auto& labels = out.sigma.labels;
    const int sigma_size = m + static_cast<int>(labels.size());
    std::vector<int> sigma_circled;
    for (auto& b : sigma_blocks) {
        for (int& e : b) {
            if (e <= m) {
                if (lambda.is_circled(e)) {
                    sigma_circled.push_back(e);
                }
            } else {
                e = m + 1 + index_of(labels, e);
            }
        }
    }
    out.sigma.shape = make_ext_lah(sigma_size, std::move(sigma_blocks), sigma_circled);

    std::vector<int> tau_circled;
    for (auto& b : tau_blocks) {
        for (int& e : b) {
            const bool circled = lambda.is_circled(e);
            e = 1 + index_of(tau_labels, e);
            if (circled) {
                tau_circled.push_back(e);
            }
        }
    }
    out.tau = make_ext_lah(out.i, std::move(tau_blocks), tau_circled);

    if (!is_valid(out.sigma.shape) || !is_valid(out.tau)) {
        throw InternalError("split_lah produced an invalid part for " + to_text(lambda));
    }
    return out;
}

ExtLahDist join_lah(const SubDistribution& sigma, const ExtLahDist& tau, int m, int n)
{
    if (m < 1 || n < 1) {
        throw std::invalid_argument("join_lah: m and n must be positive");
    }
    const auto& labels = sigma.labels;
    const int s = static_cast<int>(labels.size());
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end() ||
        (s > 0 && (labels.front() <= m || labels.back() > m + n))) {
        throw std::invalid_argument("join_lah: sigma labels must be distinct increasing members of [m+1, m+n]");
    }
    if (sigma.shape.base.n != m + s || !is_valid(sigma.shape)) {
        throw std::invalid_argument("join_lah: sigma shape is not a valid distribution on [m + |labels|]");
    }
    if (tau.base.n != n - s || !is_valid(tau)) {
        throw std::invalid_argument("join_lah: tau is not a valid distribution on [n - |labels|]");
    }

    std::vector<int> tau_labels;
    for (int e = m + 1; e <= m + n; ++e) {
        if (!std::binary_search(labels.begin(), labels.end(), e)) {
            tau_labels.push_back(e);
        }
    }

    std::vector<Block> blocks;
    std::vector<int> circled;
    for (const auto& b : sigma.shape.base.blocks) {
        Block out;
        for (int e : b) {
            if (e <= m) {
                out.push_back(e);
                if (sigma.shape.is_circled(e)) {
                    circled.push_back(e);
                }
            } else {
                out.push_back(labels[static_cast<std::size_t>(e - m - 1)]);
            }
        }
        blocks.push_back(std::move(out));
    }
    if (blocks.empty()) {
        throw std::invalid_argument("join_lah: sigma has no blocks");
    }
    const auto& tb = tau.base.blocks;
    for (std::size_t t = 0; t < tb.size(); ++t) {
        Block mapped;
        for (int e : tb[t]) {
            const int label = tau_labels[static_cast<std::size_t>(e - 1)];
            mapped.push_back(label);
            if (tau.is_circled(e)) {
                circled.push_back(label);
            }
        }
        if (t == 0 && tau.one_circled()) {
            blocks.back().insert(blocks.back().end(), mapped.begin(), mapped.end());
        } else {
            blocks.push_back(std::move(mapped));
        }
    }

    ExtLahDist lambda = make_ext_lah(m + n, std::move(blocks), circled);
    if (!is_valid(lambda)) {
        throw std::invalid_argument("join_lah: (sigma, tau) does not assemble into a valid distribution");
    }
    const SplitResult back = split_lah(lambda, m, n);
    if (!(back.sigma == sigma) || !(back.tau == tau)) {
        throw std::invalid_argument("join_lah: (sigma, tau) is not the split of " + to_text(lambda));
    }
    return lambda;
}

} // namespace qcomb
