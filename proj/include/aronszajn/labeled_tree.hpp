#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aronszajn/quasi_order.hpp"

namespace aronszajn {

/// Finite rooted tree with labels drawn from Q⁺ (plain labels or base-order
/// symbols). Nodes are numbered in preorder, so the root is node 0 and every
/// child has a larger index than its parent. The empty tree has no nodes.
class LabeledTree {
 public:
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  LabeledTree() = default;
  static LabeledTree leaf(std::string label);
  static LabeledTree node(std::string label, std::vector<LabeledTree> children);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::size_t parent(std::size_t v) const { return parent_[v]; }
  std::span<const std::size_t> children(std::size_t v) const { return children_[v]; }
  std::size_t depth(std::size_t v) const { return depth_[v]; }
  bool is_leaf(std::size_t v) const { return children_[v].empty(); }

  /// a is an ancestor of b or equal to it.
  bool is_ancestor(std::size_t a, std::size_t b) const;
  /// Deepest common ancestor.
  std::size_t meet(std::size_t a, std::size_t b) const;

  /// The tree on a meet-closed node subset, ordered by ancestry and rooted at
  /// its minimum. `nodes` must be sorted; the i-th node of the result is
  /// nodes[i]. Throws InputError if the subset is not meet-closed.
  LabeledTree induced(std::span<const std::size_t> nodes) const;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;

 private:
  void append(const LabeledTree& sub, std::size_t parent);

  std::vector<std::string> labels_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
};

/// ≤₁ (injective, meet-preserving), ≤_I (same tree, pointwise labels),
/// ≤_s (strictly order-preserving), ≤_m (weakly order-preserving). Each also
/// requires label domination l(v) ≤ m(f(v)). Sibling order is ignored except
/// by ≤_I, which compares the trees as given.
enum class TreeOrderKind { kOrd1, kOrdI, kOrdS, kOrdM };

std::string_view to_string(TreeOrderKind kind);
/// Accepts "1", "i", "s", "m".
std::optional<TreeOrderKind> parse_tree_order_kind(std::string_view text);

/// node of s -> node of t
using TreeMap = std::vector<std::size_t>;

/// Whether `f` witnesses s ≤ t for `kind`.
bool is_tree_embedding(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
                       const LabeledTree& t, const TreeMap& f);

/// A witness for s ≤ t, found by memoized matching over node pairs.
std::optional<TreeMap> find_tree_embedding(const QPlus& alphabet, TreeOrderKind kind,
                                           const LabeledTree& s, const LabeledTree& t);

bool tree_leq(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
              const LabeledTree& t);

inline constexpr std::size_t kBruteForceTreeLimit = 8;

/// Exhaustive search over all maps s -> t (with early rejection of partial
/// maps). Throws GuardRefusal if either tree exceeds kBruteForceTreeLimit.
std::optional<TreeMap> brute_force_tree_embedding(const QPlus& alphabet, TreeOrderKind kind,
                                                  const LabeledTree& s, const LabeledTree& t);
bool brute_force_tree_leq(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
                          const LabeledTree& t);

/// Number of leaves; 0 for the empty tree.
std::size_t treetops(const LabeledTree& t);

struct CoverEntry {
  /// Sorted node subset of the original tree.
  std::vector<std::size_t> nodes;
  LabeledTree subtree;
  /// subtree -> original (the inclusion).
  TreeMap into_original;
  /// original -> subtree, witnessing original ≤_m subtree.
  TreeMap onto_subtree;
};

struct CoverSolution {
  std::size_t bound = 0;
  std::vector<CoverEntry> entries;  // one per input tree, same order
};

inline constexpr std::size_t kCoverTreeLimit = 16;

/// For each tree, the smallest (then lexicographically least) meet-closed
/// node subset with at most n treetops that is ≡_m to the whole tree.
/// nullopt if some tree has no such subset. Throws GuardRefusal for trees
/// larger than kCoverTreeLimit.
std::optional<CoverSolution> find_cover(const QPlus& alphabet, std::span<const LabeledTree> family,
                                        std::size_t n);

/// Least n for which find_cover succeeds.
std::size_t minimal_cover_number(const QPlus& alphabet, std::span<const LabeledTree> family);

/// Re-checks a cover by brute force: meet-closure, treetop bound, both
/// witness maps, and both directions of ≡_m.
bool validate_cover(const QPlus& alphabet, std::span<const LabeledTree> family,
                    const CoverSolution& cover);

/// `(label child1 child2 ...)`; `()` is the empty tree.
std::string to_sexpr(const LabeledTree& t);
LabeledTree parse_tree(std::string_view text);

}  // namespace aronszajn
