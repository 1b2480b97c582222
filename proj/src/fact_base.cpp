#include "hadj/fact_base.hpp"

#include <vector>

#include "hadj/errors.hpp"

namespace hadj {

void validate(const FactBase& facts) {
  auto level_of = [&](const std::string& name) {
    auto it = facts.morphisms.find(name);
    if (it == facts.morphisms.end()) {
      throw DomainError("malformed fact base: undeclared morphism '" + name + "'");
    }
    return it->second;
  };
  for (const auto& [name, level] : facts.morphisms) {
    if (level < 1) throw DomainError("malformed fact base: level of '" + name + "' must be >= 1");
  }
  for (const auto& adj : facts.adjunctions) {
    if (level_of(adj.left) != level_of(adj.right)) {
      throw DomainError("malformed fact base: adjunction " + adj.left + " -| " + adj.right +
                        " relates morphisms of different levels");
    }
  }
  for (const auto& c : facts.classes) level_of(c.morphism);
  for (const auto& [name, n] : facts.n_adjunctible) {
    level_of(name);
    if (n == 0) throw DomainError("malformed fact base: n_adjunctible needs n >= 1");
  }
  for (const auto& [name, n] : facts.ambidextrous) {
    level_of(name);
    if (n == 0) throw DomainError("malformed fact base: ambidextrous needs n >= 1");
  }
}

namespace {

// Does the parity class of length n contain a function whose first entry is s?
bool class_has_first_entry(Parity p, std::size_t n, Side s) {
  if (n >= 2) return true;
  return (s == Side::L) == (p == Parity::Odd);
}

DexterityFunction representative(Parity p, std::size_t n) {
  return p == Parity::Even ? even_function(n) : odd_function(n);
}

Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

struct Saturator {
  FactBase base;
  bool changed = false;

  void add_class(const std::string& m, const DexterityFunction& a) {
    changed |= base.classes.insert(ClassFact{m, a}).second;
  }
  void add_n_adj(const std::string& m, std::size_t n) {
    changed |= base.n_adjunctible.insert({m, n}).second;
  }
  void add_ambi(const std::string& m, std::size_t n) {
    changed |= base.ambidextrous.insert({m, n}).second;
  }

  bool has_class(const std::string& m, Parity p, std::size_t n) const {
    return base.classes.count(ClassFact{m, representative(p, n)}) > 0;
  }

  void round() {
    // Snapshots keep each round's premises fixed while conclusions accumulate.
    const std::vector<ClassFact> classes(base.classes.begin(), base.classes.end());
    const std::vector<LevelFlag> nadj(base.n_adjunctible.begin(), base.n_adjunctible.end());

    for (const auto& adj : base.adjunctions) {
      add_class(adj.left, constant(Side::R, 1));
      add_class(adj.right, constant(Side::L, 1));
    }
    for (const auto& c : classes) add_class(c.morphism, canonical(c.function));
    for (const auto& [m, n] : nadj) {
      add_class(m, even_function(n));
      add_class(m, odd_function(n));
    }
    for (const auto& c : classes) {
      const std::size_t n = c.function.length();
      if (has_class(c.morphism, Parity::Even, n) && has_class(c.morphism, Parity::Odd, n)) {
        add_n_adj(c.morphism, n);
      }
      if (n >= 2) add_ambi(c.morphism, n - 1);
    }
    for (const auto& adj : base.adjunctions) {
      for (const auto& c : classes) {
        const std::size_t n = c.function.length();
        if (n < 2) continue;
        const Parity other = flip(parity(c.function));
        if (c.morphism == adj.right) add_class(adj.left, representative(other, n));
        if (c.morphism == adj.left) add_class(adj.right, representative(other, n));
      }
      for (const auto& c : classes) {
        if (c.morphism != adj.right) continue;
        const std::size_t n = c.function.length();
        const Parity p = parity(c.function);
        if (!has_class(adj.left, p, n)) continue;
        if (class_has_first_entry(p, n, Side::L)) add_n_adj(adj.left, n);
        if (class_has_first_entry(p, n, Side::R)) add_n_adj(adj.right, n);
      }
      for (const auto& [m, n] : nadj) {
        if (n < 2) continue;
        if (m == adj.right) add_n_adj(adj.left, n);
        if (m == adj.left) add_n_adj(adj.right, n);
      }
    }
  }
};

}  // namespace

FactBase saturate(const FactBase& facts) {
  validate(facts);
  Saturator s{facts};
  do {
    s.changed = false;
    s.round();
  } while (s.changed);
  return std::move(s.base);
}

bool is_n_adjunctible(const FactBase& saturated, const std::string& morphism, std::size_t n) {
  return saturated.n_adjunctible.count({morphism, n}) > 0;
}

bool is_adjunctible(const FactBase& saturated, const std::string& morphism,
                    const DexterityFunction& a) {
  if (is_n_adjunctible(saturated, morphism, a.length())) return true;
  return saturated.classes.count(ClassFact{morphism, canonical(a)}) > 0;
}

nlohmann::json to_json(const FactBase& facts) {
  nlohmann::json doc;
  doc["morphisms"] = nlohmann::json::array();
  for (const auto& [name, level] : facts.morphisms) {
    doc["morphisms"].push_back({{"name", name}, {"level", level}});
  }
  doc["adjunctions"] = nlohmann::json::array();
  for (const auto& a : facts.adjunctions) {
    doc["adjunctions"].push_back({{"left", a.left}, {"right", a.right}});
  }
  doc["classes"] = nlohmann::json::array();
  for (const auto& c : facts.classes) {
    doc["classes"].push_back({{"morphism", c.morphism}, {"function", c.function.str()}});
  }
  auto flags = [](const std::set<LevelFlag>& s) {
    auto arr = nlohmann::json::array();
    for (const auto& [m, n] : s) arr.push_back({{"morphism", m}, {"n", n}});
    return arr;
  };
  doc["n_adjunctible"] = flags(facts.n_adjunctible);
  doc["ambidextrous"] = flags(facts.ambidextrous);
  return doc;
}

FactBase fact_base_from_json(const nlohmann::json& doc) {
  try {
    FactBase facts;
    if (!doc.is_object()) throw ParseError("fact base must be a JSON object");
    for (const auto& m : doc.value("morphisms", nlohmann::json::array())) {
      const auto name = m.at("name").get<std::string>();
      if (!facts.morphisms.emplace(name, m.value("level", 1)).second) {
        throw ParseError("duplicate morphism '" + name + "'");
      }
    }
    for (const auto& a : doc.value("adjunctions", nlohmann::json::array())) {
      facts.adjunctions.insert({a.at("left").get<std::string>(), a.at("right").get<std::string>()});
    }
    for (const auto& c : doc.value("classes", nlohmann::json::array())) {
      facts.classes.insert({c.at("morphism").get<std::string>(),
                            DexterityFunction::parse(c.at("function").get<std::string>())});
    }
    for (const auto& f : doc.value("n_adjunctible", nlohmann::json::array())) {
      facts.n_adjunctible.insert({f.at("morphism").get<std::string>(), f.at("n").get<std::size_t>()});
    }
    for (const auto& f : doc.value("ambidextrous", nlohmann::json::array())) {
      facts.ambidextrous.insert({f.at("morphism").get<std::string>(), f.at("n").get<std::size_t>()});
    }
    return facts;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fact base JSON: ") + e.what());
  }
}

}  // namespace hadj
