#pragma once

#include <memory>
#include <string>

#include "hadj/cell.hpp"
#include "hadj/rewrite.hpp"

namespace hadj {

enum class Witness { Axiom, Verified, Unverified };
const char* to_string(Witness w) noexcept;

/// (left ⊣ right, unit, counit) over a context. Terms stay symbolic; the
/// context pointer says which bicategory (or dual) they live in.
struct AdjunctionRecord {
  std::string name;
  Cell left;
  Cell right;
  Cell unit;
  Cell counit;
  Witness status = Witness::Unverified;
  std::shared_ptr<const FormalContext> context;

  friend bool operator==(const AdjunctionRecord& a, const AdjunctionRecord& b);
};

/// The record of a declared axiom of `ctx`.
AdjunctionRecord axiom_record(std::shared_ptr<const FormalContext> ctx, const std::string& name);

/// Normal forms of a record's four components.
struct TypedRecord {
  OneCell left;
  OneCell right;
  TwoCell unit;
  TwoCell counit;
};

/// Checks u: id_A ⇒ r∘l and c: l∘r ⇒ id_B; throws DomainError otherwise.
TypedRecord type_check(const AdjunctionRecord& a);

enum class ZigzagOutcome { Verified, NotReduced, TypeError };
const char* to_string(ZigzagOutcome o) noexcept;

struct ZigzagReport {
  ZigzagOutcome outcome = ZigzagOutcome::TypeError;
  std::size_t steps = 0;
  std::string zig;  // final normal forms, for inspection
  std::string zag;
  std::string message;
};

/// Reduces (c◁l)∘(l▷u) against id_l and (r▷c)∘(u◁r) against id_r.
ZigzagReport verify_zigzag(const AdjunctionRecord& a, std::size_t fuel = kDefaultFuel);

/// The record with status upgraded to Verified when the zig-zags reduce.
AdjunctionRecord with_verification(AdjunctionRecord a, std::size_t fuel = kDefaultFuel);

/// f^L∘g^L ⊣ g∘f from f^L ⊣ f (f: X→Y) and g^L ⊣ g (g: Y→Z).
AdjunctionRecord compose_adjunctions(const AdjunctionRecord& af, const AdjunctionRecord& ag);

/// (l' ⊣ r', (ν×μ)∘u, c∘(μ⁻¹×ν⁻¹)) for invertible μ: l ⇒ l', ν: r ⇒ r'.
AdjunctionRecord transport(const AdjunctionRecord& a, const Cell& mu, const Cell& nu);

/// The same adjunction read in C^op, C^co or C^coop.
AdjunctionRecord dualize(const AdjunctionRecord& a, Duality d);

/// Whether all four components reduce to identical normal forms.
bool same_adjunction(const AdjunctionRecord& a, const AdjunctionRecord& b, std::size_t fuel = kDefaultFuel);

struct ComparisonCell {
  Cell phi;              // φ = (r ▷ c2) ∘ (u1 ◁ r): r ⇒ r
  std::string normal_form;
  ZigzagOutcome unit_equation = ZigzagOutcome::NotReduced;    // (φ ◁ l) ∘ u2 = u1
  ZigzagOutcome counit_equation = ZigzagOutcome::NotReduced;  // c1 ∘ (l ▷ φ) = c2
  std::size_t steps = 0;
};

/// Compares two adjunctions on the same l and r. Throws DomainError if the
/// records disagree on l or r.
ComparisonCell comparison_cell(const AdjunctionRecord& a1, const AdjunctionRecord& a2,
                               std::size_t fuel = kDefaultFuel);

}  // namespace hadj
