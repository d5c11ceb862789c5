#pragma once

#include "rperm/permutation.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rperm {

// Node of an (r+1)-ary increasing tree. Structure is immutable and shared;
// an empty child slot is a null pointer.
struct TreeNode {
    int label = 0;
    std::vector<std::shared_ptr<const TreeNode>> children;  // exactly r+1 slots
};

using TreeNodePtr = std::shared_ptr<const TreeNode>;

// (r+1)-ary increasing tree (1 slot per node when r = 0); a null root is the
// empty tree, which represents the empty permutation.
struct RTree {
    int r = 0;
    TreeNodePtr root;

    bool empty() const { return root == nullptr; }
};

bool operator==(const RTree& a, const RTree& b);

// Checks arity r+1 at every node, labels strictly increasing along every
// root-to-leaf path, all labels positive and pairwise distinct. Throws
// MalformedTreeError.
void validate_tree(const RTree& t);

// Remove-the-minimum decomposition: the root is the least support value; its
// r occurrences cut the rest into r+1 segments which become the children
// (label-then-child for r = 0). Throws InvalidPermutationError unless
// is_valid(p, spec).
RTree tree_from_perm(const Permutation& p, const RSpec& spec);

// Inverse write-out: c_1 m c_2 m ... m c_{r+1} per node (m then child for
// r = 0). Validates the tree first.
Permutation tree_to_perm(const RTree& t);

// Number of nodes whose last child slot is empty; equals
// descent_number(tree_to_perm(t)). Validates the tree first.
int tree_descent_number(const RTree& t);

// The s-tree left after deleting the first r-s children, and all their
// descendants, of every surviving node. Requires 0 <= s < r.
RTree skeleton(const RTree& t, int s);

// The nonempty deleted subtrees, each still an r-tree, in preorder of their
// former parent and then slot index.
std::vector<RTree> skeleton_deleted_subtrees(const RTree& t, int s);

// All (r+1)-ary increasing trees on spec.support, in a deterministic order;
// bijective with generate_all(spec).
std::vector<RTree> generate_trees(const RSpec& spec,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// Tree-side descent histogram. OpenMP kernel: walks the slot-choice tree with
// incremental empty-last-child counting, parallel over seed states.
DescentPolynomial tree_descent_polynomial(const RSpec& spec,
                                          std::uint64_t cap = kDefaultEnumerationCap);

// Serial reference: materializes every tree and recounts empty last children
// structurally at each leaf.
DescentPolynomial tree_descent_polynomial_serial(const RSpec& spec,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

// Nested parenthesized text: node as label(child_1,...,child_{r+1}) with "_"
// for an empty child; the empty tree is "_". Round-trips bit-exactly.
std::string tree_to_string(const RTree& t);
RTree tree_from_string(const std::string& text, int r);

}  // namespace rperm
