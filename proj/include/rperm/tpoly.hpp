#pragma once

#include "rperm/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rperm {

// Dense polynomial in the descent marker t over exact rationals.
// Canonical form: no trailing zero coefficient; the zero polynomial is the
// empty coefficient vector, so degree() is -1 for zero and size-1 otherwise.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(std::vector<Rat> coeffs);

    static TPoly constant(Rat c);
    static TPoly t();
    static TPoly monomial(int k, Rat c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TPoly operator-() const;
    friend TPoly operator+(const TPoly& a, const TPoly& b);
    friend TPoly operator-(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const Rat& c, const TPoly& p);
    bool operator==(const TPoly&) const = default;

    Rat eval(const Rat& x) const;

    // Ascending powers, zero terms omitted: "t + 8*t^2 + 6*t^3"; "0" for zero.
    std::string str() const;

private:
    void canonicalize();

    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

}  // namespace rperm
