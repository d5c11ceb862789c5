#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rperm/errors.hpp"
#include "rperm/tree.hpp"

#include <memory>

using namespace rperm;

namespace {

Permutation perm(std::initializer_list<int> es) { return Permutation{es}; }

const Permutation kWorkedPerm = perm({1, 2, 2, 2, 1, 1, 3, 3, 4, 4, 4, 3});
const RSpec kWorkedSpec = RSpec::first_n(3, 4);

TreeNodePtr mk(int label, std::vector<TreeNodePtr> kids) {
    auto n = std::make_shared<TreeNode>();
    n->label = label;
    n->children = std::move(kids);
    return n;
}

}  // namespace

TEST_CASE("worked example decomposes as (empty, 222, empty, 334443)") {
    const RTree t = tree_from_perm(kWorkedPerm, kWorkedSpec);
    REQUIRE_FALSE(t.empty());
    CHECK(t.r == 3);
    CHECK(t.root->label == 1);
    REQUIRE(t.root->children.size() == 4);
    CHECK(t.root->children[0] == nullptr);
    CHECK(t.root->children[2] == nullptr);

    CHECK(tree_to_perm(RTree{3, t.root->children[1]}) == perm({2, 2, 2}));
    CHECK(tree_to_perm(RTree{3, t.root->children[3]}) == perm({3, 3, 4, 4, 4, 3}));

    CHECK(tree_to_string(t) == "1(_,2(_,_,_,_),_,3(_,_,4(_,_,_,_),_))");
    CHECK(tree_to_perm(t) == kWorkedPerm);
    CHECK(tree_descent_number(t) == 3);  // nodes 2, 3, 4 have empty last children
}

TEST_CASE("r = 0 chain") {
    const RTree t = tree_from_perm(perm({1, 2, 3}), RSpec::first_n(0, 3));
    CHECK(tree_to_string(t) == "1(2(3(_)))");
    CHECK(tree_to_perm(t) == perm({1, 2, 3}));
    CHECK(tree_descent_number(t) == 1);  // matches d(123)
}

TEST_CASE("degenerate trees") {
    const RTree empty = tree_from_perm(perm({}), RSpec(3, {}));
    CHECK(empty.empty());
    CHECK(tree_to_perm(empty) == perm({}));
    CHECK(tree_descent_number(empty) == 0);
    CHECK(tree_to_string(empty) == "_");

    const RTree single = tree_from_perm(perm({5, 5}), RSpec(2, {5}));
    CHECK(tree_to_perm(single) == perm({5, 5}));  // label twice for r = 2
    CHECK(tree_descent_number(single) == 1);
}

TEST_CASE("from_perm rejects invalid input") {
    CHECK_THROWS_AS(tree_from_perm(perm({2, 1, 2, 1}), RSpec::first_n(2, 2)),
                    InvalidPermutationError);
    CHECK_THROWS_AS(tree_from_perm(perm({1, 1}), RSpec::first_n(2, 2)), InvalidPermutationError);
    CHECK_THROWS_AS(tree_from_perm(perm({1, 3, 2}), RSpec::first_n(0, 3)),
                    InvalidPermutationError);
}

TEST_CASE("validate_tree rejects malformed trees") {
    // wrong arity
    CHECK_THROWS_AS(validate_tree(RTree{2, mk(1, {nullptr, nullptr})}), MalformedTreeError);
    // non-increasing labels
    CHECK_THROWS_AS(validate_tree(RTree{1, mk(2, {mk(1, {nullptr, nullptr}), nullptr})}),
                    MalformedTreeError);
    // duplicate labels
    CHECK_THROWS_AS(validate_tree(RTree{0, mk(1, {mk(1, {TreeNodePtr{}})})}), MalformedTreeError);
    // nonpositive label
    CHECK_THROWS_AS(validate_tree(RTree{0, mk(0, {TreeNodePtr{}})}), MalformedTreeError);
    // ok cases don't throw
    validate_tree(RTree{2, nullptr});
    validate_tree(RTree{1, mk(3, {nullptr, mk(9, {nullptr, nullptr})})});
    CHECK_THROWS_AS(tree_to_perm(RTree{2, mk(1, {nullptr, nullptr})}), MalformedTreeError);
    CHECK_THROWS_AS(tree_descent_number(RTree{2, mk(1, {nullptr, nullptr})}), MalformedTreeError);
}

TEST_CASE("skeleton of the worked example") {
    const RTree t = tree_from_perm(kWorkedPerm, kWorkedSpec);

    const RTree s2 = skeleton(t, 2);
    CHECK(s2.r == 2);
    CHECK(tree_to_string(s2) == "1(2(_,_,_),_,3(_,4(_,_,_),_))");

    const RTree s0 = skeleton(t, 0);
    CHECK(tree_to_string(s0) == "1(3(_))");  // unary chain 1 -> 3

    const RTree s1 = skeleton(t, 1);
    CHECK(s1 == skeleton(skeleton(t, 2), 1));  // composing deletions
    CHECK(s0 == skeleton(s1, 0));
    CHECK(s0 == skeleton(s2, 0));

    CHECK_THROWS_AS(skeleton(t, 3), InvalidSkeletonArityError);
    CHECK_THROWS_AS(skeleton(t, -1), InvalidSkeletonArityError);
    CHECK_THROWS_AS(skeleton(RTree{0, nullptr}, 0), InvalidSkeletonArityError);
}

TEST_CASE("skeleton of a single node keeps s+1 empty slots") {
    const RTree single = tree_from_perm(perm({1, 1, 1}), RSpec(3, {1}));
    const RTree sk = skeleton(single, 1);
    CHECK(sk.r == 1);
    CHECK(tree_to_string(sk) == "1(_,_)");
    CHECK(skeleton_deleted_subtrees(single, 1).empty());
}

TEST_CASE("deleted subtrees of the worked example at s = 0") {
    const RTree t = tree_from_perm(kWorkedPerm, kWorkedSpec);
    const auto deleted = skeleton_deleted_subtrees(t, 0);
    REQUIRE(deleted.size() == 2);
    CHECK(tree_to_perm(deleted[0]) == perm({2, 2, 2}));  // from the root
    CHECK(tree_to_perm(deleted[1]) == perm({4, 4, 4}));  // from node 3
    CHECK(deleted[0].r == 3);
    CHECK(tree_descent_number(deleted[0]) + tree_descent_number(deleted[1]) == 2);

    // s = r-1 when every first child is empty deletes nothing
    const RTree inc = tree_from_perm(perm({1, 1, 2, 2}), RSpec::first_n(2, 2));
    CHECK(skeleton_deleted_subtrees(inc, 1).empty());
}

TEST_CASE("generate_trees") {
    const auto t22 = generate_trees(RSpec::first_n(2, 2));
    CHECK(t22.size() == 3);  // node 2 in any of node 1's three slots
    for (const auto& t : t22) validate_tree(t);

    CHECK(generate_trees(RSpec(3, {1})).size() == 1);
    CHECK(generate_trees(RSpec(2, {})).size() == 1);
    CHECK(generate_trees(RSpec(2, {}))[0].empty());
    CHECK(generate_trees(RSpec::first_n(0, 3)).size() == 1);
    CHECK(tree_to_string(generate_trees(RSpec::first_n(0, 3))[0]) == "1(2(3(_)))");
    CHECK_THROWS_AS(generate_trees(RSpec::first_n(2, 12)), CapacityExceededError);
}

TEST_CASE("bijection round trips exhaustively") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 4; ++n) {
            const RSpec spec = RSpec::first_n(r, n);
            const auto perms = generate_all(spec);
            const auto trees = generate_trees(spec);
            CHECK(perms.size() == trees.size());

            for (const auto& p : perms) {
                const RTree t = tree_from_perm(p, spec);
                validate_tree(t);
                CHECK(tree_to_perm(t) == p);
                CHECK(tree_descent_number(t) == descent_number(p));
            }
            for (const auto& t : trees) {
                const Permutation p = tree_to_perm(t);
                CHECK(is_valid(p, spec));
                CHECK(tree_from_perm(p, spec) == t);
            }
        }
}

TEST_CASE("descent additivity under skeletons") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 0; n <= 4; ++n)
            for (int s = 0; s < r; ++s)
                for (const auto& t : generate_trees(RSpec::first_n(r, n))) {
                    int total = tree_descent_number(skeleton(t, s));
                    for (const auto& d : skeleton_deleted_subtrees(t, s))
                        total += tree_descent_number(d);
                    CHECK(total == tree_descent_number(t));
                }
}

TEST_CASE("skeleton composition law") {
    for (const auto& t : generate_trees(RSpec::first_n(3, 4)))
        for (int s = 1; s < 3; ++s)
            for (int u = 0; u < s; ++u) CHECK(skeleton(skeleton(t, s), u) == skeleton(t, u));
}

TEST_CASE("tree descent kernels agree with the permutation side") {
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= 5; ++n) {
            const RSpec spec = RSpec::first_n(r, n);
            const DescentPolynomial via_trees = tree_descent_polynomial(spec);
            CHECK(via_trees == tree_descent_polynomial_serial(spec));
            CHECK(via_trees == descent_polynomial(spec));
        }
    const RSpec big = RSpec::first_n(2, 7);
    CHECK(tree_descent_polynomial(big) == tree_descent_polynomial_serial(big));
    CHECK_THROWS_AS(tree_descent_polynomial(RSpec::first_n(2, 12)), CapacityExceededError);
}

TEST_CASE("serialization round trips") {
    const std::string text = "1(_,2(_,_,_,_),_,3(_,_,4(_,_,_,_),_))";
    const RTree t = tree_from_string(text, 3);
    CHECK(tree_to_string(t) == text);
    CHECK(t == tree_from_perm(kWorkedPerm, kWorkedSpec));

    CHECK(tree_from_string("_", 2).empty());
    CHECK(tree_to_string(RTree{2, nullptr}) == "_");

    for (int r = 0; r <= 2; ++r)
        for (int n = 0; n <= 3; ++n)
            for (const auto& tr : generate_trees(RSpec::first_n(r, n))) {
                const std::string text = tree_to_string(tr);
                CHECK(tree_from_string(text, r) == tr);
            }

    // labels above 9 round-trip too
    const RTree wide = tree_from_perm(perm({12, 30, 30, 12}), RSpec(2, {12, 30}));
    CHECK(tree_from_string(tree_to_string(wide), 2) == wide);
}

TEST_CASE("parser rejects malformed text") {
    CHECK_THROWS_AS(tree_from_string("", 2), MalformedTreeError);
    CHECK_THROWS_AS(tree_from_string("1(_,_)", 2), MalformedTreeError);    // arity 3 expected
    CHECK_THROWS_AS(tree_from_string("1(_,_,_)x", 2), MalformedTreeError); // trailing text
    CHECK_THROWS_AS(tree_from_string("1(_,_,_", 2), MalformedTreeError);
    CHECK_THROWS_AS(tree_from_string("1(2(_),_)", 0), MalformedTreeError);
    CHECK_THROWS_AS(tree_from_string("2(1(_))", 0), MalformedTreeError);   // decreasing labels
    CHECK_THROWS_AS(tree_from_string("1(1(_))", 0), MalformedTreeError);   // duplicate labels
    CHECK_THROWS_AS(tree_from_string("0(_)", 0), MalformedTreeError);
}
