#pragma once

// Integer triangles and a brute-force extended Lah generator written
// without reference to the engine code.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qcomb/bigint.hpp"
#include "qcomb/structures.hpp"

namespace indep {

using qcomb::BigInt;
using Triangle = std::vector<std::vector<BigInt>>;

// t(n,k) = t(n-1,k-1) + coef(n,k) t(n-1,k), t(0,0) = 1.
inline Triangle triangle(int nmax, const std::function<long long(int, int)>& coef)
{
    Triangle t(static_cast<std::size_t>(nmax + 1), std::vector<BigInt>(static_cast<std::size_t>(nmax + 2), 0));
    t[0][0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            BigInt v = coef(n, k) * t[n - 1][k];
            if (k > 0) {
                v += t[n - 1][k - 1];
            }
            t[n][k] = v;
        }
    }
    return t;
}

// Counts of P^{(r)}_{n,k}, G^{(r)}_{n,k}, L^{(r)}_{n,k}, indexed by (n, k).
inline Triangle stirling2(int nmax, int r = 0)
{
    return triangle(nmax, [r](int, int k) { return k + r; });
}
inline Triangle stirling1(int nmax, int r = 0)
{
    return triangle(nmax, [r](int n, int) { return n + r - 1; });
}
inline Triangle lah(int nmax, int r = 0)
{
    return triangle(nmax, [r](int n, int k) { return n + k + 2 * r - 1; });
}

inline std::vector<BigInt> bell(int nmax)
{
    const Triangle s = stirling2(nmax);
    std::vector<BigInt> out;
    for (int n = 0; n <= nmax; ++n) {
        BigInt b = 0;
        for (int k = 0; k <= n; ++k) {
            b += s[n][k];
        }
        out.push_back(b);
    }
    return out;
}

// Every set partition of [n] via restricted growth strings, blocks by increasing minimum.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n)
{
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int maxb) {
        if (pos == n) {
            std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxb));
            for (int e = 0; e < n; ++e) {
                blocks[a[e]].push_back(e + 1);
            }
            out.push_back(blocks);
            return;
        }
        for (int b = 0; b <= maxb; ++b) {
            a[pos] = b;
            rec(pos + 1, std::max(maxb, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

// All extended Lah distributions of [n], as canonical strings, bucketed by true-block count.
inline std::vector<std::set<std::string>> extended_lah(int n)
{
    std::vector<std::set<std::string>> out(static_cast<std::size_t>(n + 1));
    for (const auto& partition : set_partitions(n)) {
        std::function<void(std::size_t, std::vector<std::vector<int>>&)> order =
            [&](std::size_t b, std::vector<std::vector<int>>& blocks) {
                if (b == blocks.size()) {
                    std::vector<int> scan;
                    std::vector<bool> starts(static_cast<std::size_t>(n + 1), false);
                    std::vector<bool> minima(static_cast<std::size_t>(n + 1), false);
                    for (const auto& blk : blocks) {
                        starts[blk.front()] = true;
                        minima[*std::min_element(blk.begin(), blk.end())] = true;
                        scan.insert(scan.end(), blk.begin(), blk.end());
                    }
                    std::vector<int> specials;
                    for (int i = 1; i <= n; ++i) {
                        if (i == 1) {
                            specials.push_back(1);
                            continue;
                        }
                        const auto pos_i = std::find(scan.begin(), scan.end(), i) - scan.begin();
                        bool preceded = true;
                        for (int j = 1; j < i; ++j) {
                            preceded = preceded && (std::find(scan.begin(), scan.end(), j) - scan.begin()) < pos_i;
                        }
                        if (!minima[i] && preceded) {
                            specials.push_back(i);
                        }
                    }
                    const std::size_t s = specials.size();
                    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
                        std::vector<bool> circ(static_cast<std::size_t>(n + 1), false);
                        bool ok = true;
                        for (std::size_t t = 0; t < s; ++t) {
                            if (mask >> t & 1U) {
                                const int e = specials[t];
                                circ[e] = true;
                                ok = ok && (e == 1 ? starts[1] : !starts[e]);
                            }
                        }
                        if (!ok) {
                            continue;
                        }
                        std::string text;
                        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                            if (bi) {
                                text += '/';
                            }
                            for (std::size_t ei = 0; ei < blocks[bi].size(); ++ei) {
                                if (ei) {
                                    text += ',';
                                }
                                const int e = blocks[bi][ei];
                                text += circ[e] ? "(" + std::to_string(e) + ")" : std::to_string(e);
                            }
                        }
                        const int k = static_cast<int>(blocks.size()) - (circ[1] ? 1 : 0);
                        out[k].insert(text);
                    }
                    return;
                }
                std::vector<int> blk = blocks[b];
                do {
                    blocks[b] = blk;
                    order(b + 1, blocks);
                } while (std::next_permutation(blk.begin(), blk.end()));
                blocks[b] = blk;
            };
        auto blocks = partition;
        order(0, blocks);
    }
    return out;
}

} // namespace indep
