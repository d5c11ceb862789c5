#include "rperm/egf.hpp"

#include "rperm/errors.hpp"
#include "rperm/numeric.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace rperm {

namespace {

void require_same_order(const TruncatedEgf& f, const TruncatedEgf& g) {
    if (f.order() != g.order())
        throw OrderMismatchError("truncation orders differ: " + std::to_string(f.order()) +
                                 " vs " + std::to_string(g.order()));
}

}  // namespace

TruncatedEgf::TruncatedEgf(int order) : order_(order), coeffs_(order + 1) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

TruncatedEgf::TruncatedEgf(int order, std::vector<TPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("truncation order must be nonnegative");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("coefficient count must be order+1");
}

TruncatedEgf TruncatedEgf::one(int order) { return constant(order, TPoly::constant(1)); }

TruncatedEgf TruncatedEgf::z(int order) {
    TruncatedEgf f(order);
    if (order >= 1) f.coeffs_[1] = TPoly::constant(1);
    return f;
}

TruncatedEgf TruncatedEgf::constant(int order, TPoly c) {
    TruncatedEgf f(order);
    f.coeffs_[0] = std::move(c);
    return f;
}

const TPoly& TruncatedEgf::coeff(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("series index out of range");
    return coeffs_[n];
}

void TruncatedEgf::set_coeff(int n, TPoly value) {
    if (n < 0 || n > order_) throw std::out_of_range("series index out of range");
    coeffs_[n] = std::move(value);
}

TruncatedEgf operator+(const TruncatedEgf& f, const TruncatedEgf& g) {
    require_same_order(f, g);
    TruncatedEgf h(f.order_);
    for (int n = 0; n <= f.order_; ++n) h.coeffs_[n] = f.coeffs_[n] + g.coeffs_[n];
    return h;
}

TruncatedEgf operator-(const TruncatedEgf& f, const TruncatedEgf& g) {
    require_same_order(f, g);
    TruncatedEgf h(f.order_);
    for (int n = 0; n <= f.order_; ++n) h.coeffs_[n] = f.coeffs_[n] - g.coeffs_[n];
    return h;
}

TruncatedEgf operator*(const TruncatedEgf& f, const TruncatedEgf& g) {
    require_same_order(f, g);
    const auto binom = binomial_table(f.order_);
    TruncatedEgf h(f.order_);
    for (int n = 0; n <= f.order_; ++n) {
        TPoly acc;
        for (int k = 0; k <= n; ++k)
            acc = acc + Rat(binom[n][k]) * (f.coeffs_[k] * g.coeffs_[n - k]);
        h.coeffs_[n] = std::move(acc);
    }
    return h;
}

TruncatedEgf operator*(const TPoly& c, const TruncatedEgf& f) {
    TruncatedEgf h(f.order_);
    for (int n = 0; n <= f.order_; ++n) h.coeffs_[n] = c * f.coeffs_[n];
    return h;
}

TruncatedEgf TruncatedEgf::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative series power");
    TruncatedEgf acc = one(order_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TruncatedEgf TruncatedEgf::integrate() const {
    TruncatedEgf h(order_);
    for (int n = 1; n <= order_; ++n) h.coeffs_[n] = coeffs_[n - 1];
    return h;
}

TruncatedEgf TruncatedEgf::differentiate() const {
    TruncatedEgf h(order_);
    for (int n = 0; n < order_; ++n) h.coeffs_[n] = coeffs_[n + 1];
    return h;
}

TruncatedEgf TruncatedEgf::compose(const TruncatedEgf& inner) const {
    require_same_order(*this, inner);
    if (!inner.coeffs_[0].is_zero())
        throw NonzeroConstantTermError("composition inner series has nonzero constant term");
    TruncatedEgf acc(order_);
    for (int k = order_; k >= 0; --k) {
        acc = acc * inner;
        acc.coeffs_[0] = acc.coeffs_[0] + Rat(1, factorial(k)) * coeffs_[k];
    }
    return acc;
}

int first_mismatch(const TruncatedEgf& f, const TruncatedEgf& g, int upto) {
    require_same_order(f, g);
    for (int n = 0; n <= upto && n <= f.order(); ++n)
        if (f.coeff(n) != g.coeff(n)) return n;
    return -1;
}

}  // namespace rperm
