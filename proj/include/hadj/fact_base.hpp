#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "hadj/dexterity.hpp"

namespace hadj {

/// `left` is a left adjoint of `right`.
struct AdjunctionFact {
  std::string left;
  std::string right;
  friend auto operator<=>(const AdjunctionFact&, const AdjunctionFact&) = default;
};

/// `morphism` is `function`-adjunctible.
struct ClassFact {
  std::string morphism;
  DexterityFunction function;
  friend bool operator==(const ClassFact&, const ClassFact&) = default;
  friend auto operator<=>(const ClassFact&, const ClassFact&) = default;
};

using LevelFlag = std::pair<std::string, std::size_t>;  // (morphism, n)

struct FactBase {
  std::map<std::string, int> morphisms;  // name -> level k
  std::set<AdjunctionFact> adjunctions;
  std::set<ClassFact> classes;
  std::set<LevelFlag> n_adjunctible;
  std::set<LevelFlag> ambidextrous;

  friend bool operator==(const FactBase&, const FactBase&) = default;
};

/// Throws DomainError when a fact names an undeclared morphism or relates
/// morphisms of different levels.
void validate(const FactBase& facts);

/// Least fixed point of the adjunctibility inference rules:
///   n = 1 only: g -| f  gives g an R-adjoint and f an L-adjoint;
///   parity pairs: a-adjunctible gives canonical(a)-adjunctible;
///   n-adjunctible gives even^n and odd^n adjunctible, and conversely;
///   n >= 2: a^n-adjunctible gives ambidextrous (n-1)-adjunctible;
///   n >= 2: any adjoint of an a^n-adjunctible morphism is adjunctible for the
///           other parity class;
///   g -| f both in the same class: g (first entry L) resp. f (first entry R)
///           is n-adjunctible;
///   n >= 2: adjoints of n-adjunctible morphisms are n-adjunctible.
/// n-adjunctibility is kept as a flag plus the canonical pair {even^n, odd^n};
/// use `is_adjunctible` for membership of any other dexterity function.
FactBase saturate(const FactBase& facts);

bool is_adjunctible(const FactBase& saturated, const std::string& morphism,
                    const DexterityFunction& a);
bool is_n_adjunctible(const FactBase& saturated, const std::string& morphism, std::size_t n);

nlohmann::json to_json(const FactBase& facts);
FactBase fact_base_from_json(const nlohmann::json& doc);

}  // namespace hadj
