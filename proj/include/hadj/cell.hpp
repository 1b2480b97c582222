#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hadj {

/// Which directions of a bicategory are reversed: op reverses 1-cells, co
/// reverses 2-cells, coop both.
enum class Duality : unsigned char { None = 0, Op = 1, Co = 2, Coop = 3 };

constexpr Duality compose(Duality a, Duality b) noexcept {
  return static_cast<Duality>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
const char* to_string(Duality d) noexcept;
Duality parse_duality(std::string_view text);

/// A composable string of 1-cell generators in written order: {r, l} is r∘l,
/// l applied first. The empty word is the identity on `source` (== `target`).
struct OneCell {
  std::vector<std::string> word;
  std::string source;
  std::string target;

  std::string str() const;  // "(id A)", "f" or "(hcomp r l)"
  friend bool operator==(const OneCell&, const OneCell&) = default;
};

/// One whiskered generator occurrence: (prefix ▷ g ◁ suffix) acting on the
/// positions [offset, offset + in_len) of the current word.
struct Layer {
  std::string gen;
  bool inverse = false;
  std::size_t offset = 0;
  std::vector<std::string> input;
  std::vector<std::string> output;

  std::size_t in_len() const { return input.size(); }
  std::size_t out_len() const { return output.size(); }

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// 2-cell in normal form: a vertical sequence of layers, first applied first.
/// Associativity and identities are absorbed by construction.
struct TwoCell {
  OneCell source;
  OneCell target;
  std::vector<Layer> layers;

  std::string str() const;
  friend bool operator==(const TwoCell&, const TwoCell&) = default;
};

struct MorphismGen {
  std::string source;
  std::string target;
  friend bool operator==(const MorphismGen&, const MorphismGen&) = default;
};

struct CellGen {
  OneCell source;
  OneCell target;
  bool invertible = false;
  friend bool operator==(const CellGen&, const CellGen&) = default;
};

/// An adjunction whose zig-zag identities hold by declaration. Unit and counit
/// are single 2-cell generators.
struct AxiomRule {
  std::string name;
  OneCell left;
  OneCell right;
  std::string unit;
  std::string counit;
  friend bool operator==(const AxiomRule&, const AxiomRule&) = default;
};

/// Declared objects, 1-cell and 2-cell generators of a free bicategory, with
/// unitors and associators strictified.
class FormalContext {
 public:
  void add_object(const std::string& name);
  void add_morphism(const std::string& name, const std::string& source, const std::string& target);
  void add_cell(const std::string& name, const OneCell& source, const OneCell& target,
                bool invertible = false);
  void add_axiom(AxiomRule rule);

  bool has_object(const std::string& name) const { return objects_.count(name) > 0; }
  const MorphismGen* find_morphism(const std::string& name) const;
  const CellGen* find_cell(const std::string& name) const;
  const AxiomRule* find_axiom(const std::string& name) const;
  /// The axiom whose unit (or counit) is `gen`, if any.
  const AxiomRule* axiom_with_unit(const std::string& gen) const;
  const AxiomRule* axiom_with_counit(const std::string& gen) const;

  const std::map<std::string, bool>& objects() const { return objects_; }
  const std::map<std::string, MorphismGen>& morphisms() const { return morphisms_; }
  const std::map<std::string, CellGen>& cells() const { return cells_; }
  const std::vector<AxiomRule>& axioms() const { return axioms_; }
  Duality duality() const { return duality_; }
  /// Marks generators that were declared directly in dual form.
  void set_duality(Duality d) { duality_ = d; }
  /// The same generators read in the dual bicategory.
  FormalContext dual(Duality d) const;

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  void claim_name(const std::string& name);
  void check_one_cell(const OneCell& c) const;

  std::map<std::string, bool> objects_;
  std::map<std::string, MorphismGen> morphisms_;
  std::map<std::string, CellGen> cells_;
  std::vector<AxiomRule> axioms_;
  Duality duality_ = Duality::None;
};

/// Term syntax for objects, 1-cells and 2-cells. Text form is a parenthesized
/// prefix syntax:
///   name | (id X) | (inv X) | (hcomp X Y ...) | (vcomp X Y ...) | (whisker L X R)
/// hcomp lists factors in written order; vcomp lists them in composition
/// order, so (vcomp a b) runs b first.
class Cell {
 public:
  enum class Kind { Atom, Identity, Inverse, HComp, VComp, Whisker };

  /// The empty term: a placeholder that prints as "" and fails to interpret.
  Cell() = default;
  bool empty() const noexcept { return node_ == nullptr; }

  static Cell atom(std::string name);
  static Cell identity(Cell of);
  static Cell inverse(Cell of);
  static Cell hcomp(std::vector<Cell> factors);
  static Cell vcomp(std::vector<Cell> factors);
  static Cell whisker(Cell left, Cell body, Cell right);

  static Cell parse(std::string_view text);

  Kind kind() const;
  const std::string& name() const;  // Atom only
  const std::vector<Cell>& children() const;

  std::string str() const;

  friend bool operator==(const Cell& a, const Cell& b);

 private:
  struct Node;
  explicit Cell(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Interpreted = std::variant<std::string, OneCell, TwoCell>;  // object | 1-cell | 2-cell

/// Resolves a term against the context and flattens it to normal form.
/// Throws DomainError on unresolved names and boundary mismatches.
Interpreted interpret(const Cell& term, const FormalContext& ctx);
OneCell interpret_one_cell(const Cell& term, const FormalContext& ctx);
TwoCell interpret_two_cell(const Cell& term, const FormalContext& ctx);

struct Boundary {
  int dimension = 0;
  std::string source;
  std::string target;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

Boundary check_typing(const Cell& term, const FormalContext& ctx);

/// Normal-form helpers used by the constructions.
OneCell concat(const OneCell& left, const OneCell& right);  // written order
TwoCell identity_two_cell(const OneCell& c);
TwoCell whisker(const OneCell& prefix, const TwoCell& body, const OneCell& suffix);
TwoCell horizontal(const TwoCell& left, const TwoCell& right);
TwoCell vertical(const TwoCell& second, const TwoCell& first);  // second ∘ first
TwoCell inverse(const TwoCell& cell, const FormalContext& ctx);

Cell to_term(const OneCell& c);
Cell to_term(const TwoCell& c);

/// Reads the same cell in a dual bicategory (see FormalContext::dual).
OneCell dualize(const OneCell& c, Duality d);
TwoCell dualize(const TwoCell& c, Duality d);
Cell dualize(const Cell& term, Duality d);

}  // namespace hadj
