#pragma once

#include "rperm/numeric.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rperm {

// A finite sequence of positive integers; the empty sequence is the empty
// permutation.
struct Permutation {
    std::vector<int> entries;

    bool empty() const { return entries.empty(); }
    int size() const { return static_cast<int>(entries.size()); }
    auto operator<=>(const Permutation&) const = default;
};

// Multiset parameters (r, S): the permutations of {s^r : s in S} in which
// every entry between two equal values is at least as large. r = 0 denotes
// the single increasing arrangement of S.
class RSpec {
public:
    RSpec(int r, std::vector<int> support);
    static RSpec first_n(int r, int n);  // S = {1..n}

    int r() const { return r_; }
    const std::vector<int>& support() const { return support_; }  // ascending
    int n() const { return static_cast<int>(support_.size()); }

private:
    int r_;
    std::vector<int> support_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// prod_{k=0}^{n-1} (k r + 1) for r >= 1; 1 for r = 0.
Int permutation_count(const RSpec& spec);

bool is_valid(const Permutation& p, const RSpec& spec);

// Indices i with a_i > a_{i+1}, plus one conventional descent at the end of
// every nonempty sequence.
int descent_number(const Permutation& p);

// All valid permutations in lexicographic order. Throws CapacityExceededError
// when permutation_count(spec) > cap.
std::vector<Permutation> generate_all(const RSpec& spec,
                                      std::uint64_t cap = kDefaultEnumerationCap);

struct DescentPolynomial {
    int n = 0;  // |S|
    int r = 0;
    std::vector<Int> coeffs;  // index k = number of permutations with k descents

    bool operator==(const DescentPolynomial&) const = default;
};

// Descent-count histogram over all valid permutations. OpenMP kernel:
// gap-insertion walk with incremental descent updates, parallel over seed
// prefixes with per-thread buckets.
DescentPolynomial descent_polynomial(const RSpec& spec,
                                     std::uint64_t cap = kDefaultEnumerationCap);

// Serial reference: same gap-insertion walk but recounting descents from
// scratch at every leaf. Kept for testing and benchmarking the kernel.
DescentPolynomial descent_polynomial_serial(const RSpec& spec,
                                            std::uint64_t cap = kDefaultEnumerationCap);

// "-" for the empty permutation; concatenated digits when all entries are
// single-digit, space-separated otherwise.
std::string perm_to_string(const Permutation& p);
Permutation perm_from_string(const std::string& text);

}  // namespace rperm
