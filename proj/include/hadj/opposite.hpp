#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hadj/dexterity.hpp"

namespace hadj {

enum class Direction : unsigned char { Id, Op };

/// A map {1..N} -> {id, op}; position j says whether j-morphisms are reversed.
/// Text form is a string over {i, o}, index 1 leftmost.
class OppositeFunction {
 public:
  explicit OppositeFunction(std::vector<Direction> entries);

  static OppositeFunction parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  Direction at(std::size_t position) const;  // 1-based
  const std::vector<Direction>& entries() const noexcept { return entries_; }

  std::string str() const;
  nlohmann::json to_json() const;  // ["id", "op", ...]

  friend bool operator==(const OppositeFunction&, const OppositeFunction&) = default;

 private:
  std::vector<Direction> entries_;
};

struct OppositeVariant {
  enum class Kind { EvenOp, OddOp, Constant } kind;
  Direction value = Direction::Id;  // Constant only
};

OppositeFunction build_opposite(OppositeVariant variant, std::size_t N);

/// op at position j+k (j = 0..n) iff the L-counts of a and b on 1..j have odd
/// sum; every other position is id.
OppositeFunction op_for_pair(const DexterityFunction& a, const DexterityFunction& b,
                             std::size_t k, std::size_t N);

/// op_for_pair(a, r^n, 1, N).
OppositeFunction op_for(const DexterityFunction& a, std::size_t N);

OppositeFunction negate_opposite(const OppositeFunction& o);
OppositeFunction xor_compose(const OppositeFunction& lhs, const OppositeFunction& rhs);

}  // namespace hadj
