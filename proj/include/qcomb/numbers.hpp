#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qcomb/mpoly.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Exact engines for every number family. Values are memoized per
// (family, n, k, r) in append-only tables that admit concurrent readers;
// every function is safe to call from several threads at once.
//
// The r-variants are obtained from the r = 0 tables through the shift
// formulas with base r = 0, so each value of S_q^{(r)}, L_q^{(r)} and
// c_q^{(r)} equals the inversion/w generating function over the
// r-restricted structures.

/// S_q^{(r)}(n,k) = sum over P^{(r)}_{n,k} of q^{w}. Zero outside 0 <= k <= n.
QPoly stirling2_q(int n, int k, int r);

/// B_q^{(r)}(n) = sum_k S_q^{(r)}(n,k).
QPoly bell_q(int n, int r);

/// L_q^{(r)}(n,k) = sum over L^{(r)}_{n,k} of q^{inv_rho}.
QPoly lah_q(int n, int k, int r);
/// q^{k(k-1)} (n_q!/k_q!) [n-1 choose k-1]_q for 1 <= k <= n; delta_{n,k} otherwise.
QPoly lah_q_closed_form(int n, int k);
/// L_q(n,k) = q^{n+k-2} L_q(n-1,k-1) + [n+k-1]_q L_q(n-1,k).
QPoly lah_q_recurrence(int n, int k);

/// c_q^{(r)}(n,k) = sum over G^{(r)}_{n,k} of q^{inv_c}.
QPoly stirling1_q(int n, int k, int r);

enum class Neg1Variant { plain, r1 };

/// Closed forms of S_{-1}(n,k) (plain) and S^{(1)}_{-1}(n,k) (r1); 0 outside 0 <= k <= n.
BigInt stirling_neg1(Neg1Variant variant, int n, int k);

/// Hsu-Shiue S(n,k; alpha, beta, r) from
/// S(n,k) = S(n-1,k-1) + (alpha(n-1) + beta k + r) S(n-1,k).
MPoly hsu_shiue(int n, int k);

/// B_{n;alpha,beta,r}(x) = sum_k S(n,k;alpha,beta,r) x^k.
MPoly gen_bell(int n);

enum class Family { stirling2_q, bell_q, lah_q, stirling1_q, hsu_shiue, gen_bell };
enum class Provenance { recurrence, closed_form, shift_formula };

std::string family_name(Family f);
/// Throws std::invalid_argument for unknown names.
Family parse_family(const std::string& name);
std::string provenance_name(Provenance p);

struct FamilyRow {
    Family family;
    int n = 0;
    int k = -1; // -1 when the family has no k parameter
    int r = -1; // -1 when the family has no r parameter
    std::variant<QPoly, MPoly> value;
    Provenance provenance;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Rows for every (n, k, r) in the ranges; k is clipped to 0..n.
std::vector<FamilyRow> family_table(Family family, IntRange n, IntRange k, IntRange r);

} // namespace qcomb
