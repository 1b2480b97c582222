#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hadj/dexterity.hpp"
#include "hadj/tree.hpp"

namespace hadj {

/// One adjunction of a tower, seen from the morphism it makes adjunctible.
/// Side R reads (g ⊣ adjoint, unit, counit); side L reads (adjoint ⊣ g, ...).
/// Boundaries are prefix-syntax strings: (id X) and (comp r l).
struct SchemaRecord {
  std::size_t level = 0;
  std::string morphism;
  std::string adjoint;
  Side side = Side::R;
  std::string unit;
  std::string counit;
  std::string source;
  std::string target;

  std::string text() const;
  std::pair<std::string, std::string> unit_boundary() const;
  std::pair<std::string, std::string> counit_boundary() const;

  friend bool operator==(const SchemaRecord&, const SchemaRecord&) = default;
};

enum class SchemaVariant { OneSided, Full };

/// Adjunctibility data for `base`, generated level by level.
///   one-sided: record i has children 2i+1 (for its unit) and 2i+2 (counit);
///   full: every morphism carries a left and a right record, stored level by
///   level; record i of a level has children 4i..4i+3 on the next level
///   (unit-left, unit-right, counit-left, counit-right).
struct SchemaTower {
  std::string base;
  std::size_t k = 1;
  std::size_t dimension = 0;  // ambient N
  std::size_t depth = 0;      // n
  SchemaVariant variant = SchemaVariant::OneSided;
  std::optional<DexterityFunction> function;
  std::optional<DexterityTree> tree;
  std::vector<SchemaRecord> records;

  /// Records per level, from the base level up.
  std::vector<std::size_t> level_counts() const;
  /// Root-to-record address: {u,c} words for one-sided towers, and words
  /// over {u1,c1,u2,c2} joined by '.' for full ones.
  std::string path_of(std::size_t index) const;

  friend bool operator==(const SchemaTower&, const SchemaTower&) = default;
};

inline constexpr std::size_t kMaxOneSidedDepth = 20;
inline constexpr std::size_t kMaxFullDepth = 10;

/// Level overflow (k + n > N) is a DomainError; N = 0 means N = k + n.
SchemaTower generate_schema(const std::string& base, std::size_t k, const DexterityFunction& a,
                            std::size_t dimension = 0);
SchemaTower generate_schema(const std::string& base, std::size_t k, const DexterityTree& t,
                            std::size_t dimension = 0);
SchemaTower generate_full_schema(const std::string& base, std::size_t k, std::size_t n,
                                 std::size_t dimension = 0);

/// Closed-form record count at level k + offset: 2^offset one-sided,
/// 2^(2 offset + 1) full.
std::uint64_t schema_counts(std::size_t n, SchemaVariant variant, std::size_t offset);
/// 2^n - 1 one-sided, (2/3)(4^n - 1) full.
std::uint64_t schema_total(std::size_t n, SchemaVariant variant);

/// Replaces the record at `node` by the reversed adjunction whose unit and
/// counit are the adjoints of the old counit and unit; its two children are
/// re-read from the other side and trade places. Deeper records are kept.
SchemaTower interchange_schema(const SchemaTower& tower, const TreePath& node);
/// The same at every node of level j (1 <= j <= n-1).
SchemaTower interchange_schema(const SchemaTower& tower, std::size_t level);

/// Throws DomainError unless every child's morphism is its parent's unit or
/// counit with the matching boundary, and sides agree with the source.
void check_tower(const SchemaTower& tower);

}  // namespace hadj
