#pragma once

#include "rperm/tpoly.hpp"

#include <vector>

namespace rperm {

// Exponential generating function in z truncated at a fixed order N.
// Entry n holds the EGF numerator: n! times the ordinary z^n coefficient,
// a polynomial in t. Entry n of any operation depends only on input entries
// up to n. Binary operations require equal orders; mixing orders throws
// OrderMismatchError rather than re-truncating.
class TruncatedEgf {
public:
    explicit TruncatedEgf(int order);                    // zero series
    TruncatedEgf(int order, std::vector<TPoly> coeffs);  // needs order+1 entries

    static TruncatedEgf one(int order);
    static TruncatedEgf z(int order);
    static TruncatedEgf constant(int order, TPoly c);

    int order() const { return order_; }
    const TPoly& coeff(int n) const;
    void set_coeff(int n, TPoly value);

    friend TruncatedEgf operator+(const TruncatedEgf& f, const TruncatedEgf& g);
    friend TruncatedEgf operator-(const TruncatedEgf& f, const TruncatedEgf& g);
    // Binomial convolution: (fg)_n = sum_k C(n,k) f_k g_{n-k}.
    friend TruncatedEgf operator*(const TruncatedEgf& f, const TruncatedEgf& g);
    friend TruncatedEgf operator*(const TPoly& c, const TruncatedEgf& f);
    bool operator==(const TruncatedEgf&) const = default;

    TruncatedEgf pow(int e) const;

    // (int f)_0 = 0, (int f)_n = f_{n-1}; the top input coefficient drops out.
    TruncatedEgf integrate() const;

    // (f')_n = f_{n+1}; entry N of the result is zero and carries no
    // information, so comparisons after differentiating stop at N-1.
    TruncatedEgf differentiate() const;

    // sum_k (f_k / k!) inner^k by backward Horner; inner_0 must be zero.
    TruncatedEgf compose(const TruncatedEgf& inner) const;

private:
    int order_ = 0;
    std::vector<TPoly> coeffs_;
};

// First index in 0..upto where f and g differ, or -1 if none.
int first_mismatch(const TruncatedEgf& f, const TruncatedEgf& g, int upto);

}  // namespace rperm
