#include "rperm/permutation.hpp"

#include "rperm/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rperm {

RSpec::RSpec(int r, std::vector<int> support) : r_(r), support_(std::move(support)) {
    if (r_ < 0) throw std::invalid_argument("r must be nonnegative");
    std::sort(support_.begin(), support_.end());
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (support_[i] <= 0) throw std::invalid_argument("support elements must be positive");
        if (i > 0 && support_[i] == support_[i - 1])
            throw std::invalid_argument("support elements must be distinct");
    }
}

RSpec RSpec::first_n(int r, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return RSpec(r, std::move(s));
}

Int permutation_count(const RSpec& spec) {
    Int c = 1;
    if (spec.r() == 0) return c;
    for (int k = 0; k < spec.n(); ++k) c *= k * spec.r() + 1;
    return c;
}

bool is_valid(const Permutation& p, const RSpec& spec) {
    const auto& sup = spec.support();
    if (spec.r() == 0) return p.entries == sup;  // support() is ascending

    if (p.entries.size() != sup.size() * static_cast<std::size_t>(spec.r())) return false;
    std::vector<int> sorted = p.entries;
    std::sort(sorted.begin(), sorted.end());
    std::size_t idx = 0;
    for (int s : sup)
        for (int i = 0; i < spec.r(); ++i)
            if (sorted[idx++] != s) return false;

    // Everything strictly between the first and last occurrence of a value
    // must be at least that value.
    std::map<int, std::pair<int, int>> span;
    for (int i = 0; i < p.size(); ++i) {
        auto [it, fresh] = span.try_emplace(p.entries[i], std::pair{i, i});
        if (!fresh) it->second.second = i;
    }
    for (const auto& [m, fl] : span)
        for (int j = fl.first + 1; j < fl.second; ++j)
            if (p.entries[j] < m) return false;
    return true;
}

int descent_number(const Permutation& p) {
    if (p.empty()) return 0;
    int d = 1;  // conventional descent at the end
    for (int i = 0; i + 1 < p.size(); ++i)
        if (p.entries[i] > p.entries[i + 1]) ++d;
    return d;
}

namespace {

void check_capacity(const RSpec& spec, std::uint64_t cap) {
    const Int count = permutation_count(spec);
    if (count > Int(cap))
        throw CapacityExceededError("enumeration needs " + count.str() +
                                    " permutations, cap is " + std::to_string(cap));
}

void insert_block(std::vector<int>& seq, int g, int v, int r) {
    seq.insert(seq.begin() + g, r, v);
}

void remove_block(std::vector<int>& seq, int g, int r) {
    seq.erase(seq.begin() + g, seq.begin() + g + r);
}

// Descent change when the block v^r (v above everything present) lands in
// gap g: a fresh first block or a front insertion adds one, an end insertion
// adds none, and an interior one adds 1 unless it replaces an existing
// descent at that gap.
int insertion_delta(const std::vector<int>& seq, int g) {
    const int L = static_cast<int>(seq.size());
    if (L == 0 || g == 0) return 1;
    if (g == L) return 0;
    return seq[g - 1] > seq[g] ? 0 : 1;
}

void walk_reference(const RSpec& spec, std::vector<int>& seq, int depth,
                    std::vector<std::uint64_t>& hist) {
    if (depth == spec.n()) {
        ++hist[descent_number(Permutation{seq})];
        return;
    }
    const int v = spec.support()[depth];
    const int L = static_cast<int>(seq.size());
    for (int g = 0; g <= L; ++g) {
        insert_block(seq, g, v, spec.r());
        walk_reference(spec, seq, depth + 1, hist);
        remove_block(seq, g, spec.r());
    }
}

void walk_incremental(const RSpec& spec, std::vector<int>& seq, int depth, int descents,
                      std::vector<std::uint64_t>& hist) {
    if (depth == spec.n()) {
        ++hist[descents];
        return;
    }
    const int v = spec.support()[depth];
    const int L = static_cast<int>(seq.size());
    for (int g = 0; g <= L; ++g) {
        const int delta = insertion_delta(seq, g);
        insert_block(seq, g, v, spec.r());
        walk_incremental(spec, seq, depth + 1, descents + delta, hist);
        remove_block(seq, g, spec.r());
    }
}

DescentPolynomial histogram_to_poly(const RSpec& spec, const std::vector<std::uint64_t>& hist) {
    std::size_t len = hist.size();
    while (len > 1 && hist[len - 1] == 0) --len;
    DescentPolynomial p;
    p.n = spec.n();
    p.r = spec.r();
    p.coeffs.assign(hist.begin(), hist.begin() + static_cast<std::ptrdiff_t>(len));
    return p;
}

DescentPolynomial r0_polynomial(const RSpec& spec) {
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(spec.n()) + 1, 0);
    ++hist[spec.n() == 0 ? 0 : 1];  // the single increasing arrangement
    return histogram_to_poly(spec, hist);
}

struct SeedState {
    std::vector<int> seq;
    int depth = 0;
    int descents = 0;
};

}  // namespace

std::vector<Permutation> generate_all(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    if (spec.r() == 0) return {Permutation{spec.support()}};
    std::vector<Permutation> out;
    std::vector<int> seq;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == spec.n()) {
            out.push_back(Permutation{seq});
            return;
        }
        const int v = spec.support()[depth];
        const int L = static_cast<int>(seq.size());
        for (int g = 0; g <= L; ++g) {
            insert_block(seq, g, v, spec.r());
            self(self, depth + 1);
            remove_block(seq, g, spec.r());
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

DescentPolynomial descent_polynomial_serial(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    if (spec.r() == 0) return r0_polynomial(spec);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(spec.n()) + 1, 0);
    std::vector<int> seq;
    walk_reference(spec, seq, 0, hist);
    return histogram_to_poly(spec, hist);
}

DescentPolynomial descent_polynomial(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    if (spec.r() == 0) return r0_polynomial(spec);
    const int n = spec.n();

    // Expand prefixes breadth-first until there are enough seeds to share out.
    std::vector<SeedState> frontier{SeedState{}};
    constexpr std::size_t kSeedTarget = 256;
    while (frontier.front().depth < n && frontier.size() < kSeedTarget) {
        std::vector<SeedState> next;
        for (const auto& st : frontier) {
            const int v = spec.support()[st.depth];
            const int L = static_cast<int>(st.seq.size());
            for (int g = 0; g <= L; ++g) {
                SeedState child;
                child.seq = st.seq;
                child.descents = st.descents + insertion_delta(st.seq, g);
                insert_block(child.seq, g, v, spec.r());
                child.depth = st.depth + 1;
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::vector<std::vector<std::uint64_t>> buckets(
        threads, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        std::vector<int> seq = frontier[i].seq;
        walk_incremental(spec, seq, frontier[i].depth, frontier[i].descents, buckets[tid]);
    }

    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : buckets)
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += b[k];
    return histogram_to_poly(spec, hist);
}

std::string perm_to_string(const Permutation& p) {
    if (p.empty()) return "-";
    const bool digits =
        std::all_of(p.entries.begin(), p.entries.end(), [](int e) { return e <= 9; });
    std::string out;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        if (!digits && i > 0) out += ' ';
        out += std::to_string(p.entries[i]);
    }
    return out;
}

Permutation perm_from_string(const std::string& text) {
    Permutation p;
    if (text.empty() || text == "-") return p;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v <= 0)
                throw std::invalid_argument("bad permutation entry: " + tok);
            p.entries.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad permutation character: " + std::string(1, c));
            p.entries.push_back(c - '0');
        }
    }
    return p;
}

}  // namespace rperm
