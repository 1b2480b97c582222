#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hadj/adjunction.hpp"
#include "hadj/schema.hpp"

namespace hadj {

/// A context file:
///   {"objects": ["X", ...],
///    "morphisms": [{"name", "source", "target"}],
///    "cells": [{"name", "source", "target", "invertible"}],   // 1-cell terms
///    "adjunctions": [{"name", "left", "right", "unit", "counit", "status"}],
///    "compose": ["A1", "A2", ...],                           // optional
///    "duality": "op"}                                        // optional
/// Adjunctions with status "axiom" become rewrite rules; the others are
/// records to be checked.
struct ContextDocument {
  std::shared_ptr<const FormalContext> context;
  std::vector<AdjunctionRecord> records;
  std::vector<std::string> compose;

  const AdjunctionRecord& record(const std::string& name) const;
};

ContextDocument load_context(const nlohmann::json& doc);
ContextDocument load_context_file(const std::string& path);

nlohmann::json to_json(const FormalContext& ctx);
nlohmann::json to_json(const AdjunctionRecord& a);
nlohmann::json to_json(const ZigzagReport& r);
nlohmann::json to_json(const ComparisonCell& c);
nlohmann::json to_json(const SchemaTower& t);

SchemaTower tower_from_json(const nlohmann::json& doc);

}  // namespace hadj
