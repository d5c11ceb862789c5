#include "rperm/tree.hpp"

#include "rperm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rperm {

namespace {

bool node_equal(const TreeNodePtr& a, const TreeNodePtr& b) {
    if (!a || !b) return !a && !b;
    if (a->label != b->label || a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!node_equal(a->children[i], b->children[i])) return false;
    return true;
}

void validate_node(const TreeNodePtr& node, int arity, int parent_label, std::set<int>& seen) {
    if (!node) return;
    if (node->label <= 0) throw MalformedTreeError("node labels must be positive");
    if (node->label <= parent_label)
        throw MalformedTreeError("labels must increase away from the root");
    if (!seen.insert(node->label).second)
        throw MalformedTreeError("duplicate label " + std::to_string(node->label));
    if (static_cast<int>(node->children.size()) != arity)
        throw MalformedTreeError("node " + std::to_string(node->label) + " needs exactly " +
                                 std::to_string(arity) + " child slots");
    for (const auto& c : node->children) validate_node(c, arity, node->label, seen);
}

TreeNodePtr build_from_segment(const std::vector<int>& a, int b, int e, int r) {
    if (b == e) return nullptr;
    auto node = std::make_shared<TreeNode>();
    if (r == 0) {
        node->label = a[b];
        node->children.assign(1, nullptr);
        node->children[0] = build_from_segment(a, b + 1, e, 0);
        return node;
    }
    const int m = *std::min_element(a.begin() + b, a.begin() + e);
    std::vector<int> cuts;  // the r occurrences of the minimum
    for (int j = b; j < e; ++j)
        if (a[j] == m) cuts.push_back(j);
    node->label = m;
    node->children.assign(r + 1, nullptr);
    int start = b;
    for (int i = 0; i < r; ++i) {
        node->children[i] = build_from_segment(a, start, cuts[i], r);
        start = cuts[i] + 1;
    }
    node->children[r] = build_from_segment(a, start, e, r);
    return node;
}

void write_out(const TreeNodePtr& node, int r, std::vector<int>& out) {
    if (!node) return;
    if (r == 0) {
        out.push_back(node->label);
        write_out(node->children[0], 0, out);
        return;
    }
    write_out(node->children[0], r, out);
    for (int i = 1; i <= r; ++i) {
        out.push_back(node->label);
        write_out(node->children[i], r, out);
    }
}

int count_empty_last(const TreeNodePtr& node) {
    if (!node) return 0;
    int d = node->children.back() ? 0 : 1;
    for (const auto& c : node->children) d += count_empty_last(c);
    return d;
}

TreeNodePtr skeleton_node(const TreeNodePtr& node, int drop) {
    if (!node) return nullptr;
    auto out = std::make_shared<TreeNode>();
    out->label = node->label;
    out->children.reserve(node->children.size() - drop);
    for (std::size_t i = drop; i < node->children.size(); ++i)
        out->children.push_back(skeleton_node(node->children[i], drop));
    return out;
}

void collect_deleted(const TreeNodePtr& node, int drop, int r, std::vector<RTree>& out) {
    if (!node) return;
    for (int i = 0; i < drop; ++i)
        if (node->children[i]) out.push_back(RTree{r, node->children[i]});
    for (std::size_t i = drop; i < node->children.size(); ++i)
        collect_deleted(node->children[i], drop, r, out);
}

void require_skeleton_arity(const RTree& t, int s) {
    if (s < 0 || s >= t.r)
        throw InvalidSkeletonArityError("need 0 <= s < r, got s=" + std::to_string(s) +
                                        ", r=" + std::to_string(t.r));
}

void check_capacity(const RSpec& spec, std::uint64_t cap) {
    const Int count = permutation_count(spec);
    if (count > Int(cap))
        throw CapacityExceededError("enumeration needs " + count.str() + " trees, cap is " +
                                    std::to_string(cap));
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

// Mutable build scaffolding: labels are attached in ascending order, each
// into some currently-empty slot, which visits every increasing tree once.
struct MutNode {
    int label = 0;
    std::vector<MutNode*> kids;
};

TreeNodePtr freeze(const MutNode* node) {
    if (!node) return nullptr;
    auto out = std::make_shared<TreeNode>();
    out->label = node->label;
    out->children.reserve(node->kids.size());
    for (const MutNode* k : node->kids) out->children.push_back(freeze(k));
    return out;
}

int count_empty_last_mut(const MutNode* node) {
    if (!node) return 0;
    int d = node->kids.back() ? 0 : 1;
    for (const MutNode* k : node->kids) d += count_empty_last_mut(k);
    return d;
}

template <typename Leaf>
void build_trees(const RSpec& spec, std::deque<MutNode>& arena, MutNode* holder,
                 const std::vector<std::pair<MutNode*, int>>& slots, int depth, Leaf&& leaf) {
    if (depth == spec.n()) {
        leaf(holder->kids[0]);
        return;
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        arena.emplace_back();
        MutNode* node = &arena.back();
        node->label = spec.support()[depth];
        node->kids.assign(spec.r() + 1, nullptr);
        auto [parent, si] = slots[i];
        parent->kids[si] = node;
        std::vector<std::pair<MutNode*, int>> next;
        next.reserve(slots.size() + spec.r());
        for (std::size_t j = 0; j < slots.size(); ++j)
            if (j != i) next.push_back(slots[j]);
        for (int k = 0; k <= spec.r(); ++k) next.push_back({node, k});
        build_trees(spec, arena, holder, next, depth + 1, leaf);
        parent->kids[si] = nullptr;
        arena.pop_back();
    }
}

// Descent-only walk: the state is one flag per empty slot saying whether it
// is its node's last slot. Filling a slot adds a node whose own last slot is
// empty (+1) and, if the filled slot was a last slot, removes that node's
// pending descent (-1).
void walk_slots(const RSpec& spec, std::vector<unsigned char>& flags, int depth, int descents,
                std::vector<std::uint64_t>& hist) {
    if (depth == spec.n()) {
        ++hist[descents];
        return;
    }
    const int r = spec.r();
    const std::size_t L = flags.size();
    for (std::size_t i = 0; i < L; ++i) {
        const unsigned char old = flags[i];
        const int d2 = descents + 1 - old;
        if (r == 0) {
            flags[i] = 1;
        } else {
            flags[i] = 0;
            flags.insert(flags.end(), r - 1, 0);
            flags.push_back(1);
        }
        walk_slots(spec, flags, depth + 1, d2, hist);
        flags.resize(L);
        flags[i] = old;
    }
}

struct SlotSeed {
    std::vector<unsigned char> flags;
    int depth = 0;
    int descents = 0;
};

}  // namespace

bool operator==(const RTree& a, const RTree& b) { return a.r == b.r && node_equal(a.root, b.root); }

void validate_tree(const RTree& t) {
    if (t.r < 0) throw MalformedTreeError("arity parameter must be nonnegative");
    std::set<int> seen;
    validate_node(t.root, t.r + 1, 0, seen);
}

RTree tree_from_perm(const Permutation& p, const RSpec& spec) {
    if (!is_valid(p, spec))
        throw InvalidPermutationError("not a valid r-permutation for the given multiset: " +
                                      perm_to_string(p));
    RTree t{spec.r(), nullptr};
    t.root = build_from_segment(p.entries, 0, p.size(), spec.r());
    return t;
}

Permutation tree_to_perm(const RTree& t) {
    validate_tree(t);
    Permutation p;
    write_out(t.root, t.r, p.entries);
    return p;
}

int tree_descent_number(const RTree& t) {
    validate_tree(t);
    return count_empty_last(t.root);
}

RTree skeleton(const RTree& t, int s) {
    require_skeleton_arity(t, s);
    validate_tree(t);
    return RTree{s, skeleton_node(t.root, t.r - s)};
}

std::vector<RTree> skeleton_deleted_subtrees(const RTree& t, int s) {
    require_skeleton_arity(t, s);
    validate_tree(t);
    std::vector<RTree> out;
    collect_deleted(t.root, t.r - s, t.r, out);
    return out;
}

std::vector<RTree> generate_trees(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    std::vector<RTree> out;
    std::deque<MutNode> arena;
    arena.emplace_back();
    MutNode* holder = &arena.back();
    holder->kids.assign(1, nullptr);
    build_trees(spec, arena, holder, {{holder, 0}}, 0,
                [&](const MutNode* root) { out.push_back(RTree{spec.r(), freeze(root)}); });
    return out;
}

DescentPolynomial tree_descent_polynomial_serial(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(spec.n()) + 1, 0);
    std::deque<MutNode> arena;
    arena.emplace_back();
    MutNode* holder = &arena.back();
    holder->kids.assign(1, nullptr);
    build_trees(spec, arena, holder, {{holder, 0}}, 0,
                [&](const MutNode* root) { ++hist[count_empty_last_mut(root)]; });
    return histogram_to_poly(spec, hist);
}

DescentPolynomial tree_descent_polynomial(const RSpec& spec, std::uint64_t cap) {
    check_capacity(spec, cap);
    const int n = spec.n();
    const int r = spec.r();

    std::vector<SlotSeed> frontier{SlotSeed{{0}, 0, 0}};
    constexpr std::size_t kSeedTarget = 256;
    while (frontier.front().depth < n && frontier.size() < kSeedTarget) {
        std::vector<SlotSeed> next;
        for (const auto& st : frontier) {
            for (std::size_t i = 0; i < st.flags.size(); ++i) {
                SlotSeed child;
                child.flags = st.flags;
                child.descents = st.descents + 1 - st.flags[i];
                if (r == 0) {
                    child.flags[i] = 1;
                } else {
                    child.flags[i] = 0;
                    child.flags.insert(child.flags.end(), r - 1, 0);
                    child.flags.push_back(1);
                }
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
        std::vector<unsigned char> flags = frontier[i].flags;
        walk_slots(spec, flags, frontier[i].depth, frontier[i].descents, buckets[tid]);
    }

    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& b : buckets)
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += b[k];
    return histogram_to_poly(spec, hist);
}

namespace {

void render(const TreeNodePtr& node, std::string& out) {
    if (!node) {
        out += '_';
        return;
    }
    out += std::to_string(node->label);
    out += '(';
    for (std::size_t i = 0; i < node->children.size(); ++i) {
        if (i > 0) out += ',';
        render(node->children[i], out);
    }
    out += ')';
}

struct TreeParser {
    const std::string& text;
    std::size_t pos = 0;
    int arity = 1;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw MalformedTreeError("expected '" + std::string(1, c) + "' at position " +
                                     std::to_string(pos));
        ++pos;
    }

    TreeNodePtr parse_child() {
        if (peek() == '_') {
            ++pos;
            return nullptr;
        }
        return parse_node();
    }

    TreeNodePtr parse_node() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw MalformedTreeError("expected a label at position " + std::to_string(pos));
        long label = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            label = label * 10 + (text[pos] - '0');
            if (label > 1'000'000'000) throw MalformedTreeError("label too large");
            ++pos;
        }
        auto node = std::make_shared<TreeNode>();
        node->label = static_cast<int>(label);
        expect('(');
        for (int i = 0; i < arity; ++i) {
            if (i > 0) expect(',');
            node->children.push_back(parse_child());
        }
        expect(')');
        return node;
    }
};

}  // namespace

std::string tree_to_string(const RTree& t) {
    if (t.empty()) return "_";
    std::string out;
    render(t.root, out);
    return out;
}

RTree tree_from_string(const std::string& text, int r) {
    if (r < 0) throw MalformedTreeError("arity parameter must be nonnegative");
    TreeParser parser{text, 0, r + 1};
    RTree t{r, parser.parse_child()};
    if (parser.pos != text.size())
        throw MalformedTreeError("trailing characters at position " + std::to_string(parser.pos));
    validate_tree(t);
    return t;
}

}  // namespace rperm
