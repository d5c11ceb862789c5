#pragma once

#include "rperm/egf.hpp"
#include "rperm/permutation.hpp"

#include <optional>
#include <string>

namespace rperm {

TPoly descent_polynomial_to_tpoly(const DescentPolynomial& dp);

// Entry n is the descent polynomial of the permutations of {1^r,...,n^r},
// computed by exhaustive enumeration.
TruncatedEgf descent_series_by_enumeration(int r, int order,
                                           std::uint64_t cap = kDefaultEnumerationCap);

// Entry n+1 is entry n of A^r (A - 1 + t), advancing one order at a time
// from entry 0 = 1. Needs no enumeration.
TruncatedEgf descent_series_by_ode(int r, int order);

// Entry n accumulates t^descents over all (r+1)-ary increasing trees on n
// labels.
TruncatedEgf descent_series_by_trees(int r, int order,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// The r = 0 series 1 + t(e^z - 1): entry 0 is 1, every later entry is t.
TruncatedEgf closed_form_r0(int order);

// Outcome of an exact series comparison. ok == true implies no mismatch is
// recorded; otherwise mismatch_index and the two differing entries are set.
struct SeriesReport {
    std::string method;
    int r = 0;
    std::optional<int> s;
    int order = 0;
    TruncatedEgf series{0};  // the enumeration-built left-hand side
    bool ok = false;
    int compared_upto = -1;  // inclusive top index of the comparison
    std::optional<int> mismatch_index;
    TPoly lhs_at_mismatch;
    TPoly rhs_at_mismatch;
};

// Fills the verdict fields of a report by comparing entries 0..upto.
SeriesReport compare_series(std::string method, const TruncatedEgf& lhs,
                            const TruncatedEgf& rhs, int upto);

// d/dz A = A^r (A - 1) + t A^r with A built by enumeration; exact on entries
// 0..order-1.
SeriesReport check_ode(int r, int order, std::uint64_t cap = kDefaultEnumerationCap);

// A_r = A_s(int A_r^{r-s} dz) with both sides built from the enumeration
// series (closed form for s = 0); exact on entries 0..order. Requires
// 0 <= s < r.
SeriesReport check_skeleton_identity(int r, int s, int order,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace rperm
