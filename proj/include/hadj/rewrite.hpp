#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "hadj/cell.hpp"

namespace hadj {

inline constexpr std::size_t kDefaultFuel = 10000;

/// For layers applied x then y on disjoint regions, the same composite with
/// y applied first. Empty if the layers touch.
std::optional<std::pair<Layer, Layer>> commute(const Layer& x, const Layer& y);

/// Largest interchange class searched exhaustively by interchange_normal_form.
inline constexpr std::size_t kMaxInterchangeClass = 200000;

/// Canonical representative under the interchange law: the layer order that is
/// least in (offset, input, output, generator) rank, leftmost layers first.
/// Exact for classes of up to kMaxInterchangeClass orders; larger classes fall
/// back to a greedy choice that can depend on the input order. `swaps` gets
/// the number of adjacent exchanges separating the input from the result.
TwoCell interchange_normal_form(const TwoCell& cell, std::size_t* swaps = nullptr);

struct Reduction {
  TwoCell cell;
  std::size_t steps = 0;
  std::size_t contractions = 0;
  bool exhausted = false;
};

/// Directed rewriting: cancels adjacent zig and zag patterns of axiom
/// adjunctions and inverse pairs of invertible generators (commuting layers
/// out of the way first), then puts the result in interchange normal form.
/// Every committed swap and contraction costs one unit of fuel.
Reduction reduce(const TwoCell& cell, const FormalContext& ctx, std::size_t fuel = kDefaultFuel);

struct Comparison {
  bool equal = false;
  bool exhausted = false;
  std::size_t steps = 0;
  TwoCell lhs;
  TwoCell rhs;
};

/// Reduces both sides with a shared budget and compares normal forms.
Comparison compare_reduced(const TwoCell& lhs, const TwoCell& rhs, const FormalContext& ctx,
                           std::size_t fuel = kDefaultFuel);

}  // namespace hadj
