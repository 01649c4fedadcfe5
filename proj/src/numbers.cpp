#include "qcomb/numbers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "qcomb/errors.hpp"
#include "qcomb/qprimitives.hpp"

namespace qcomb {

namespace {

using Key = std::tuple<int, int, int>;

// Append-only memo: concurrent readers, serialized insertion. Values are
// computed outside the lock; a racing duplicate insert keeps the first value.
template <class V>
class MemoTable {
public:
    std::optional<V> find(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    V insert(const Key& key, V value)
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, V> table_;
};

template <class V, class F>
V memoized(MemoTable<V>& table, const Key& key, F&& compute)
{
    if (auto hit = table.find(key)) {
        return *hit;
    }
    return table.insert(key, compute());
}

void require_non_negative(int n, const char* what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": n must be non-negative");
    }
}

void require_r(int r, const char* what)
{
    if (r < 0) {
        throw std::invalid_argument(std::string(what) + ": r must be non-negative");
    }
}

MemoTable<QPoly>& s2_table()
{
    static MemoTable<QPoly> t;
    return t;
}
MemoTable<QPoly>& c1_table()
{
    static MemoTable<QPoly> t;
    return t;
}
MemoTable<QPoly>& lah_table()
{
    static MemoTable<QPoly> t;
    return t;
}
MemoTable<MPoly>& hs_table()
{
    static MemoTable<MPoly> t;
    return t;
}

QPoly stirling2_base(int n, int k)
{
    if (k < 0 || k > n) {
        return {};
    }
    if (n == 0 || k == 0) {
        return n == k ? QPoly::constant(1) : QPoly{};
    }
    return memoized(s2_table(), Key{n, k, 0}, [&] {
        return stirling2_base(n - 1, k - 1).shifted(k - 1) + q_integer(k) * stirling2_base(n - 1, k);
    });
}

QPoly stirling1_base(int n, int k)
{
    if (k < 0 || k > n) {
        return {};
    }
    if (n == 0 || k == 0) {
        return n == k ? QPoly::constant(1) : QPoly{};
    }
    return memoized(c1_table(), Key{n, k, 0},
                    [&] { return stirling1_base(n - 1, k - 1) + q_integer(n - 1) * stirling1_base(n - 1, k); });
}

} // namespace

QPoly stirling2_q(int n, int k, int r)
{
    require_non_negative(n, "stirling2_q");
    require_r(r, "stirling2_q");
    if (k < 0 || k > n) {
        return {};
    }
    if (r == 0) {
        return stirling2_base(n, k);
    }
    // S^{(m)}(n,k) = sum_i q^{m i + C(m,2)} m_q^{n-i} C(n,i) S(i,k), here with m = r.
    return memoized(s2_table(), Key{n, k, r}, [&] {
        QPoly sum;
        const QPoly rq = q_integer(r);
        for (int i = k; i <= n; ++i) {
            QPoly term = rq.pow(static_cast<unsigned>(n - i)) * stirling2_base(i, k) * binomial(n, i);
            sum += term.shifted(static_cast<long long>(r) * i + static_cast<long long>(r) * (r - 1) / 2);
        }
        return sum;
    });
}

QPoly bell_q(int n, int r)
{
    require_non_negative(n, "bell_q");
    require_r(r, "bell_q");
    QPoly sum;
    for (int k = 0; k <= n; ++k) {
        sum += stirling2_q(n, k, r);
    }
    return sum;
}

QPoly lah_q_closed_form(int n, int k)
{
    require_non_negative(n, "lah_q_closed_form");
    if (k < 1 || k > n) {
        return (n == k) ? QPoly::constant(1) : QPoly{};
    }
    return (q_factorial(n).div_exact(q_factorial(k)) * q_binomial(n - 1, k - 1))
        .shifted(static_cast<long long>(k) * (k - 1));
}

QPoly lah_q_recurrence(int n, int k)
{
    require_non_negative(n, "lah_q_recurrence");
    if (k < 0 || k > n) {
        return {};
    }
    if (n == 0 || k == 0) {
        return n == k ? QPoly::constant(1) : QPoly{};
    }
    // Row-by-row so no memo is shared with the closed-form route.
    std::vector<QPoly> row{QPoly::constant(1)};
    for (int size = 1; size <= n; ++size) {
        std::vector<QPoly> next(static_cast<std::size_t>(size) + 1);
        for (int j = 1; j <= size; ++j) {
            if (j - 1 < static_cast<int>(row.size())) {
                next[j] += row[j - 1].shifted(size + j - 2);
            }
            if (j < static_cast<int>(row.size())) {
                next[j] += q_integer(size + j - 1) * row[j];
            }
        }
        row = std::move(next);
    }
    return row[k];
}

namespace {

QPoly lah_base(int n, int k)
{
    if (k < 0 || k > n) {
        return {};
    }
    return memoized(lah_table(), Key{n, k, 0}, [&] {
        QPoly closed = lah_q_closed_form(n, k);
        if (closed != lah_q_recurrence(n, k)) {
            throw InternalError("lah_q: closed form and recurrence disagree at n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
        }
        return closed;
    });
}

} // namespace

QPoly lah_q(int n, int k, int r)
{
    require_non_negative(n, "lah_q");
    require_r(r, "lah_q");
    if (k < 0 || k > n) {
        return {};
    }
    if (r == 0) {
        return lah_base(n, k);
    }
    // L^{(m)}(n,k) = sum_i q^{m(2i+m-1)} [2m]_q^{rising n-i} [n choose i]_q L(i,k), m = r.
    return memoized(lah_table(), Key{n, k, r}, [&] {
        QPoly sum;
        for (int i = k; i <= n; ++i) {
            QPoly term = q_rising(2 * r, n - i) * q_binomial(n, i) * lah_base(i, k);
            sum += term.shifted(static_cast<long long>(r) * (2LL * i + r - 1));
        }
        return sum;
    });
}

QPoly stirling1_q(int n, int k, int r)
{
    require_non_negative(n, "stirling1_q");
    require_r(r, "stirling1_q");
    if (k < 0 || k > n) {
        return {};
    }
    if (r == 0) {
        return stirling1_base(n, k);
    }
    // c^{(m)}(n,k) = sum_i [m]_q^{rising n-i} [n choose i]_q c(i,k), m = r.
    return memoized(c1_table(), Key{n, k, r}, [&] {
        QPoly sum;
        for (int i = k; i <= n; ++i) {
            sum += q_rising(r, n - i) * q_binomial(n, i) * stirling1_base(i, k);
        }
        return sum;
    });
}

BigInt stirling_neg1(Neg1Variant variant, int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    const long long kk = k;
    if (variant == Neg1Variant::plain) {
        return neg_one_pow(kk * (kk - 1) / 2) * binomial(n - kk / 2 - 1, n - kk);
    }
    return neg_one_pow(kk * (kk + 1) / 2) * binomial(n - (kk + 1) / 2, kk / 2);
}

MPoly hsu_shiue(int n, int k)
{
    require_non_negative(n, "hsu_shiue");
    if (k < 0 || k > n) {
        return {};
    }
    if (n == 0) {
        return MPoly::constant(1);
    }
    return memoized(hs_table(), Key{n, k, 0}, [&] {
        MPoly factor = MPoly::variable(Var::alpha) * BigInt(n - 1) + MPoly::variable(Var::beta) * BigInt(k) +
                       MPoly::variable(Var::r);
        return hsu_shiue(n - 1, k - 1) + factor * hsu_shiue(n - 1, k);
    });
}

MPoly gen_bell(int n)
{
    require_non_negative(n, "gen_bell");
    MPoly sum;
    for (int k = 0; k <= n; ++k) {
        sum += hsu_shiue(n, k) * MPoly::from_monomial(0, 0, 0, static_cast<std::uint32_t>(k));
    }
    return sum;
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::stirling2_q: return "stirling2_q";
    case Family::bell_q: return "bell_q";
    case Family::lah_q: return "lah_q";
    case Family::stirling1_q: return "stirling1_q";
    case Family::hsu_shiue: return "hsu_shiue";
    case Family::gen_bell: return "gen_bell";
    }
    return "?";
}

Family parse_family(const std::string& name)
{
    for (Family f : {Family::stirling2_q, Family::bell_q, Family::lah_q, Family::stirling1_q, Family::hsu_shiue,
                     Family::gen_bell}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::recurrence: return "recurrence";
    case Provenance::closed_form: return "closed-form";
    case Provenance::shift_formula: return "shift-formula";
    }
    return "?";
}

std::vector<FamilyRow> family_table(Family family, IntRange n, IntRange k, IntRange r)
{
    if (n.lo < 0 || r.lo < 0 || k.lo < 0 || n.lo > n.hi || r.lo > r.hi || k.lo > k.hi) {
        throw std::invalid_argument("family_table: invalid range");
    }
    std::vector<FamilyRow> rows;
    const bool has_r = family == Family::stirling2_q || family == Family::bell_q || family == Family::lah_q ||
                       family == Family::stirling1_q;
    const bool has_k = family != Family::bell_q && family != Family::gen_bell;
    const IntRange rr = has_r ? r : IntRange{-1, -1};
    for (int nn = n.lo; nn <= n.hi; ++nn) {
        for (int rv = rr.lo; rv <= rr.hi; ++rv) {
            const int k_lo = has_k ? k.lo : -1;
            const int k_hi = has_k ? std::min(k.hi, nn) : -1;
            for (int kk = k_lo; kk <= k_hi; ++kk) {
                FamilyRow row{family, nn, kk, rv, QPoly{}, Provenance::recurrence};
                switch (family) {
                case Family::stirling2_q:
                    row.value = stirling2_q(nn, kk, rv);
                    row.provenance = rv == 0 ? Provenance::recurrence : Provenance::shift_formula;
                    break;
                case Family::bell_q:
                    row.value = bell_q(nn, rv);
                    row.provenance = rv == 0 ? Provenance::recurrence : Provenance::shift_formula;
                    break;
                case Family::lah_q:
                    row.value = lah_q(nn, kk, rv);
                    row.provenance = rv == 0 ? Provenance::closed_form : Provenance::shift_formula;
                    break;
                case Family::stirling1_q:
                    row.value = stirling1_q(nn, kk, rv);
                    row.provenance = rv == 0 ? Provenance::recurrence : Provenance::shift_formula;
                    break;
                case Family::hsu_shiue: row.value = hsu_shiue(nn, kk); break;
                case Family::gen_bell: row.value = gen_bell(nn); break;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

} // namespace qcomb
