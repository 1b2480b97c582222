#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "hadj/tree.hpp"

namespace hadj {

using BigCount = boost::multiprecision::cpp_int;

/// Largest depth served by exhaustive enumeration (2^15 trees at depth 4).
inline constexpr std::size_t kMaxBruteDepth = 4;

struct ClassTable {
  std::size_t depth = 0;
  BigCount class_count = 0;
  /// One lexicographically least member (format_tree order, L < R) per class,
  /// sorted in that same order.
  std::vector<DexterityTree> representatives;
  /// orbit_sizes[i] is the size of the class of representatives[i].
  std::vector<std::uint64_t> orbit_sizes;

  nlohmann::json to_json() const;  // {depth, class_count, representatives}
};

/// Bit-level tree_interchange on heap-order codes of one fixed depth.
class TreeKernel {
 public:
  explicit TreeKernel(std::size_t depth);

  std::size_t depth() const noexcept { return depth_; }
  std::uint64_t tree_count() const noexcept { return std::uint64_t{1} << nodes_; }
  std::size_t internal_count() const noexcept { return moves_.size(); }

  /// Applies the rewrite at internal node `v` (heap index) if applicable.
  bool apply(std::uint32_t code, std::size_t v, std::uint32_t& out) const noexcept;

  /// Key whose integer order equals the format_tree string order.
  std::uint32_t preorder_key(std::uint32_t code) const noexcept;

 private:
  struct Move {
    std::uint32_t node_bit;
    std::uint32_t left_bit;
    std::uint32_t right_bit;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> swaps;  // below the children
  };
  std::size_t depth_;
  std::size_t nodes_;
  std::vector<Move> moves_;
  std::vector<std::uint8_t> preorder_;  // preorder position -> heap index
};

/// Union-find over every tree of depth n joined by tree_interchange, OpenMP
/// parallel over tree codes. The partition does not depend on thread count.
ClassTable brute_force_classes(std::size_t n, std::size_t max_depth = kMaxBruteDepth);

/// Serial reference: orbit-by-orbit breadth-first search on DexterityTree values.
ClassTable brute_force_classes_serial(std::size_t n, std::size_t max_depth = kMaxBruteDepth);

/// |T_1| = 2, |T_n| = |T_{n-1}|^2 + 2^(2^(n-1) - 1).
BigCount class_count_recurrence(std::size_t n);

/// Involutions (identity included) among the automorphisms of the complete
/// binary tree of depth n+1, each automorphism being a swap bit per internal
/// node. OpenMP parallel over the group.
BigCount wreath_involutions(std::size_t n, std::size_t max_depth = kMaxBruteDepth);
BigCount wreath_involutions_serial(std::size_t n, std::size_t max_depth = kMaxBruteDepth);

}  // namespace hadj
