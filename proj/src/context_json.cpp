#include "hadj/context_json.hpp"

#include <fstream>

#include "hadj/errors.hpp"

namespace hadj {

using nlohmann::json;

const AdjunctionRecord& ContextDocument::record(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return r;
  }
  throw DomainError("no adjunction named '" + name + "'");
}

namespace {

Witness parse_witness(const std::string& s) {
  if (s == "axiom") return Witness::Axiom;
  if (s == "verified") return Witness::Verified;
  if (s == "unverified") return Witness::Unverified;
  throw ParseError("unknown adjunction status '" + s + "'");
}

std::string witness_name(Witness w) {
  switch (w) {
    case Witness::Axiom: return "axiom";
    case Witness::Verified: return "verified";
    case Witness::Unverified: return "unverified";
  }
  return "unverified";
}

ContextDocument load(const json& doc) {
  if (!doc.is_object()) throw ParseError("context document must be a JSON object");
  auto ctx = std::make_shared<FormalContext>();
  for (const auto& o : doc.value("objects", json::array())) ctx->add_object(o.get<std::string>());
  for (const auto& m : doc.value("morphisms", json::array())) {
    ctx->add_morphism(m.at("name").get<std::string>(), m.at("source").get<std::string>(),
                      m.at("target").get<std::string>());
  }
  for (const auto& c : doc.value("cells", json::array())) {
    const OneCell src = interpret_one_cell(Cell::parse(c.at("source").get<std::string>()), *ctx);
    const OneCell tgt = interpret_one_cell(Cell::parse(c.at("target").get<std::string>()), *ctx);
    ctx->add_cell(c.at("name").get<std::string>(), src, tgt, c.value("invertible", false));
  }
  ContextDocument out;
  for (const auto& a : doc.value("adjunctions", json::array())) {
    AdjunctionRecord r;
    r.name = a.at("name").get<std::string>();
    r.left = Cell::parse(a.at("left").get<std::string>());
    r.right = Cell::parse(a.at("right").get<std::string>());
    r.unit = Cell::parse(a.at("unit").get<std::string>());
    r.counit = Cell::parse(a.at("counit").get<std::string>());
    r.status = parse_witness(a.value("status", std::string("unverified")));
    if (r.status == Witness::Axiom) {
      if (r.unit.kind() != Cell::Kind::Atom || r.counit.kind() != Cell::Kind::Atom) {
        throw DomainError("axiom '" + r.name + "' must name single unit and counit generators");
      }
      ctx->add_axiom(AxiomRule{r.name, interpret_one_cell(r.left, *ctx), interpret_one_cell(r.right, *ctx),
                               r.unit.name(), r.counit.name()});
    }
    out.records.push_back(std::move(r));
  }
  if (doc.contains("duality")) ctx->set_duality(parse_duality(doc.at("duality").get<std::string>()));
  for (const auto& n : doc.value("compose", json::array())) out.compose.push_back(n.get<std::string>());
  out.context = ctx;
  for (auto& r : out.records) r.context = out.context;
  return out;
}

}  // namespace

ContextDocument load_context(const json& doc) {
  try {
    return load(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed context document: ") + e.what());
  }
}

ContextDocument load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return load_context(doc);
}

json to_json(const FormalContext& ctx) {
  json out;
  out["objects"] = json::array();
  for (const auto& [name, unused] : ctx.objects()) out["objects"].push_back(name);
  out["morphisms"] = json::array();
  for (const auto& [name, m] : ctx.morphisms()) {
    out["morphisms"].push_back({{"name", name}, {"source", m.source}, {"target", m.target}});
  }
  out["cells"] = json::array();
  for (const auto& [name, c] : ctx.cells()) {
    out["cells"].push_back({{"name", name},
                            {"source", c.source.str()},
                            {"target", c.target.str()},
                            {"invertible", c.invertible}});
  }
  out["adjunctions"] = json::array();
  for (const auto& a : ctx.axioms()) {
    out["adjunctions"].push_back({{"name", a.name},
                                  {"left", a.left.str()},
                                  {"right", a.right.str()},
                                  {"unit", a.unit},
                                  {"counit", a.counit},
                                  {"status", "axiom"}});
  }
  if (ctx.duality() != Duality::None) out["duality"] = to_string(ctx.duality());
  return out;
}

json to_json(const AdjunctionRecord& a) {
  json out{{"name", a.name},
           {"left", a.left.str()},
           {"right", a.right.str()},
           {"unit", a.unit.str()},
           {"counit", a.counit.str()},
           {"status", witness_name(a.status)}};
  if (a.context && a.context->duality() != Duality::None) out["duality"] = to_string(a.context->duality());
  return out;
}

json to_json(const ZigzagReport& r) {
  json out{{"outcome", to_string(r.outcome)}, {"steps", r.steps}, {"zig", r.zig}, {"zag", r.zag}};
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

json to_json(const ComparisonCell& c) {
  return json{{"phi", c.phi.str()},
              {"normal_form", c.normal_form},
              {"unit_equation", to_string(c.unit_equation)},
              {"counit_equation", to_string(c.counit_equation)},
              {"steps", c.steps}};
}

json to_json(const SchemaTower& t) {
  json out{{"base", t.base},
           {"k", t.k},
           {"dimension", t.dimension},
           {"depth", t.depth},
           {"variant", t.variant == SchemaVariant::Full ? "full" : "one_sided"}};
  if (t.function) out["function"] = t.function->str();
  if (t.tree) out["tree"] = t.tree->str();
  out["level_counts"] = t.level_counts();
  json recs = json::array();
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const SchemaRecord& r = t.records[i];
    recs.push_back({{"path", t.path_of(i)},
                    {"level", r.level},
                    {"morphism", r.morphism},
                    {"adjoint", r.adjoint},
                    {"side", std::string(1, to_char(r.side))},
                    {"unit", r.unit},
                    {"counit", r.counit},
                    {"source", r.source},
                    {"target", r.target},
                    {"record", r.text()}});
  }
  out["records"] = std::move(recs);
  return out;
}

SchemaTower tower_from_json(const json& doc) {
  try {
    SchemaTower t;
    t.base = doc.at("base").get<std::string>();
    t.k = doc.at("k").get<std::size_t>();
    t.dimension = doc.at("dimension").get<std::size_t>();
    t.depth = doc.at("depth").get<std::size_t>();
    const auto variant = doc.at("variant").get<std::string>();
    if (variant != "full" && variant != "one_sided") throw ParseError("unknown tower variant '" + variant + "'");
    t.variant = variant == "full" ? SchemaVariant::Full : SchemaVariant::OneSided;
    if (doc.contains("function")) t.function = DexterityFunction::parse(doc.at("function").get<std::string>());
    if (doc.contains("tree")) t.tree = DexterityTree::parse(doc.at("tree").get<std::string>());
    for (const auto& r : doc.at("records")) {
      SchemaRecord rec;
      rec.level = r.at("level").get<std::size_t>();
      rec.morphism = r.at("morphism").get<std::string>();
      rec.adjoint = r.at("adjoint").get<std::string>();
      const auto side = r.at("side").get<std::string>();
      if (side != "L" && side != "R") throw ParseError("record side must be L or R");
      rec.side = side == "L" ? Side::L : Side::R;
      rec.unit = r.at("unit").get<std::string>();
      rec.counit = r.at("counit").get<std::string>();
      rec.source = r.at("source").get<std::string>();
      rec.target = r.at("target").get<std::string>();
      t.records.push_back(std::move(rec));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed tower document: ") + e.what());
  }
}

}  // namespace hadj
