#include "rperm/tpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace rperm {

TPoly::TPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

void TPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly TPoly::constant(Rat c) { return TPoly(std::vector<Rat>{std::move(c)}); }

TPoly TPoly::t() { return monomial(1, 1); }

TPoly TPoly::monomial(int k, Rat c) {
    std::vector<Rat> v(k + 1);
    v[k] = std::move(c);
    return TPoly(std::move(v));
}

Rat TPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

TPoly TPoly::operator-() const {
    std::vector<Rat> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return TPoly(std::move(v));
}

TPoly operator+(const TPoly& a, const TPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
    }
    return TPoly(std::move(v));
}

TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly{};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TPoly(std::move(v));
}

TPoly operator*(const Rat& c, const TPoly& p) {
    std::vector<Rat> v(p.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
    return TPoly(std::move(v));
}

Rat TPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

std::string rat_str(const Rat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += rat_str(mag);
        } else {
            const std::string var = k == 1 ? "t" : "t^" + std::to_string(k);
            out += mag == 1 ? var : rat_str(mag) + "*" + var;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

}  // namespace rperm
