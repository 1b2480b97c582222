#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hadj/adjunction.hpp"

namespace hadj {

/// A chain of objects X0 -> ... -> Xm with left and right adjoint axioms for
/// every link, plus records derived from them by composition and transport.
struct RandomCorpus {
  std::shared_ptr<const FormalContext> context;
  std::vector<AdjunctionRecord> axioms;
  std::vector<AdjunctionRecord> derived;
};

/// Deterministic in `seed`.
RandomCorpus random_corpus(std::uint64_t seed);

/// A random well-typed 2-cell with `layers` generator occurrences, starting
/// from `source`; stops early if no generator applies.
TwoCell random_two_cell(const FormalContext& ctx, const OneCell& source, std::size_t layers,
                        std::mt19937_64& rng);

/// A syntactically random term denoting `cell`: random bracketing, explicit
/// whiskers and identities sprinkled in.
Cell random_presentation(const TwoCell& cell, const FormalContext& ctx, std::mt19937_64& rng);

/// `cell` with random applications of the interchange law.
TwoCell random_interchange(const TwoCell& cell, std::size_t swaps, std::mt19937_64& rng);

}  // namespace hadj
