#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hadj/dexterity.hpp"

namespace hadj {

/// Child roles: the unit branch is the left child, the counit branch the right.
enum class Branch : unsigned char { Unit, Counit };

/// Root-to-node address. Text form is a string over {u, c}; the root is "".
class TreePath {
 public:
  TreePath() = default;
  explicit TreePath(std::vector<Branch> steps) : steps_(std::move(steps)) {}

  static TreePath parse(std::string_view text);

  const std::vector<Branch>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  TreePath child(Branch b) const;
  std::string str() const;

  friend bool operator==(const TreePath&, const TreePath&) = default;
  friend auto operator<=>(const TreePath&, const TreePath&) = default;

 private:
  std::vector<Branch> steps_;
};

/// Complete binary tree of uniform depth n whose 2^n - 1 nodes carry a Side.
/// Nodes are stored in heap order: node i has children 2i+1 (unit) and 2i+2
/// (counit).
class DexterityTree {
 public:
  DexterityTree(std::size_t depth, std::vector<Side> labels);

  /// TREE := SIDE | SIDE "(" TREE "," TREE ")", both subtrees of equal depth.
  static DexterityTree parse(std::string_view text);
  /// Inverse of `code()`: bit i of `code` is the label of heap node i (1 = R).
  static DexterityTree from_code(std::size_t depth, std::uint64_t code);

  std::size_t depth() const noexcept { return depth_; }
  std::size_t node_count() const noexcept { return labels_.size(); }
  const std::vector<Side>& labels() const noexcept { return labels_; }

  Side label(const TreePath& p) const;
  std::string str() const;
  std::uint64_t code() const;  // depth <= 6

  static std::size_t index_of(const TreePath& p);

  friend bool operator==(const DexterityTree&, const DexterityTree&) = default;
  friend auto operator<=>(const DexterityTree&, const DexterityTree&) = default;

 private:
  std::size_t depth_;
  std::vector<Side> labels_;
};

inline std::string format_tree(const DexterityTree& t) { return t.str(); }
inline DexterityTree parse_tree(std::string_view text) { return DexterityTree::parse(text); }

/// Rewrites the internal node at `p` whose children share a label s: the node
/// label is negated, the two child subtrees trade places, and both child root
/// labels become -s. Everything below the children is carried along unchanged.
DexterityTree tree_interchange(const DexterityTree& t, const TreePath& p);

bool interchange_applicable(const DexterityTree& t, const TreePath& p);

/// Paths of every internal node, in heap (breadth-first) order.
std::vector<TreePath> internal_paths(std::size_t depth);

struct TreeEquivalence {
  bool equivalent = false;
  std::vector<TreePath> witness;  // replayable tree_interchange steps from s to t
};

/// Breadth-first search over tree_interchange steps; CapacityError if the
/// orbit of `s` exceeds `max_states`.
TreeEquivalence are_tree_equivalent(const DexterityTree& s, const DexterityTree& t,
                                    std::size_t max_states = std::size_t{1} << 20);

DexterityTree replay(const DexterityTree& t, const std::vector<TreePath>& steps);

/// Level-uniform tree: every node at depth j (1-based) is labelled a(j).
DexterityTree tree_from_function(const DexterityFunction& a);

}  // namespace hadj
