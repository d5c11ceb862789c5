#include "rperm/series.hpp"

#include "rperm/errors.hpp"
#include "rperm/tree.hpp"

#include <stdexcept>
#include <utility>

namespace rperm {

TPoly descent_polynomial_to_tpoly(const DescentPolynomial& dp) {
    std::vector<Rat> coeffs;
    coeffs.reserve(dp.coeffs.size());
    for (const Int& c : dp.coeffs) coeffs.emplace_back(c);
    return TPoly(std::move(coeffs));
}

TruncatedEgf descent_series_by_enumeration(int r, int order, std::uint64_t cap) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    TruncatedEgf f(order);
    for (int n = 0; n <= order; ++n)
        f.set_coeff(n, descent_polynomial_to_tpoly(descent_polynomial(RSpec::first_n(r, n), cap)));
    return f;
}

TruncatedEgf descent_series_by_ode(int r, int order) {
    if (r < 1) throw std::invalid_argument("the recurrence needs r >= 1");
    TruncatedEgf a(order);
    a.set_coeff(0, TPoly::constant(1));
    const TruncatedEgf shift = TruncatedEgf::constant(order, TPoly::t() - TPoly::constant(1));
    for (int n = 0; n < order; ++n) {
        // Entry n of the right side only reads entries 0..n of a, which are
        // already final, so the series can be grown in place.
        const TruncatedEgf rhs = a.pow(r) * (a + shift);
        a.set_coeff(n + 1, rhs.coeff(n));
    }
    return a;
}

TruncatedEgf descent_series_by_trees(int r, int order, std::uint64_t cap) {
    if (r < 0) throw std::invalid_argument("r must be nonnegative");
    TruncatedEgf f(order);
    for (int n = 0; n <= order; ++n)
        f.set_coeff(n, descent_polynomial_to_tpoly(
                           tree_descent_polynomial(RSpec::first_n(r, n), cap)));
    return f;
}

TruncatedEgf closed_form_r0(int order) {
    TruncatedEgf f(order);
    f.set_coeff(0, TPoly::constant(1));
    for (int n = 1; n <= order; ++n) f.set_coeff(n, TPoly::t());
    return f;
}

SeriesReport compare_series(std::string method, const TruncatedEgf& lhs, const TruncatedEgf& rhs,
                            int upto) {
    if (upto > lhs.order()) upto = lhs.order();
    SeriesReport rep;
    rep.method = std::move(method);
    rep.order = lhs.order();
    rep.series = lhs;
    rep.compared_upto = upto;
    const int idx = first_mismatch(lhs, rhs, upto);
    if (idx < 0) {
        rep.ok = true;
    } else {
        rep.ok = false;
        rep.mismatch_index = idx;
        rep.lhs_at_mismatch = lhs.coeff(idx);
        rep.rhs_at_mismatch = rhs.coeff(idx);
    }
    return rep;
}

SeriesReport check_ode(int r, int order, std::uint64_t cap) {
    if (r < 1) throw std::invalid_argument("the differential equation check needs r >= 1");
    const TruncatedEgf a = descent_series_by_enumeration(r, order, cap);
    const TruncatedEgf lhs = a.differentiate();
    const TruncatedEgf ar = a.pow(r);
    const TruncatedEgf rhs = ar * (a - TruncatedEgf::one(order)) + TPoly::t() * ar;
    SeriesReport rep = compare_series("ode", lhs, rhs, order - 1);
    rep.r = r;
    rep.series = a;
    return rep;
}

SeriesReport check_skeleton_identity(int r, int s, int order, std::uint64_t cap) {
    if (s < 0 || s >= r)
        throw InvalidSkeletonArityError("need 0 <= s < r, got s=" + std::to_string(s) +
                                        ", r=" + std::to_string(r));
    const TruncatedEgf ar = descent_series_by_enumeration(r, order, cap);
    const TruncatedEgf as =
        s == 0 ? closed_form_r0(order) : descent_series_by_enumeration(s, order, cap);
    const TruncatedEgf rhs = as.compose(ar.pow(r - s).integrate());
    SeriesReport rep = compare_series("skeleton", ar, rhs, order);
    rep.r = r;
    rep.s = s;
    return rep;
}

}  // namespace rperm
