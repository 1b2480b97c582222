#include "hadj/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hadj/adjunction.hpp"
#include "hadj/context_json.hpp"
#include "hadj/dexterity.hpp"
#include "hadj/errors.hpp"
#include "hadj/fact_base.hpp"
#include "hadj/opposite.hpp"
#include "hadj/random_context.hpp"
#include "hadj/schema.hpp"
#include "hadj/tree.hpp"
#include "hadj/tree_enum.hpp"

namespace hadj::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::size_t fuel = kDefaultFuel;
  std::size_t max_n = kMaxBruteDepth;
  std::optional<std::uint64_t> seed;
};

struct Args {
  std::string a, b, c, d;
  std::size_t n = 0;
  bool full = false;
  bool reps = false;
  std::size_t dim = 0;
};

class Emitter {
 public:
  Emitter(std::ostream& out, const Options& opt, std::string command)
      : out_(out), opt_(opt), command_(std::move(command)) {}

  // text: what plain mode prints; value: the JSON result.
  void emit(const std::string& text, const json& value) {
    if (opt_.json) {
      out_ << json{{"command", command_}, {"result", value}}.dump() << '\n';
    } else {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
    }
  }

 private:
  std::ostream& out_;
  const Options& opt_;
  std::string command_;
};

std::size_t to_size(const std::string& text, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text.front() == '-') {
    throw ParseError(std::string(what) + " must be a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string trace_text(const RewriteTrace& t) { return json(t).dump(); }

std::string big(const BigCount& v) { return v.str(); }

std::size_t capped_depth(const Options& opt, std::size_t n) {
  const std::size_t cap = std::min(opt.max_n, kMaxBruteDepth);
  if (n > cap) {
    throw CapacityError("exhaustive enumeration is limited to n <= " + std::to_string(cap) +
                        "; use tree-classes for larger n");
  }
  return cap;
}

std::string record_text(const AdjunctionRecord& r) {
  std::ostringstream s;
  s << "name: " << r.name << '\n'
    << "left: " << r.left.str() << '\n'
    << "right: " << r.right.str() << '\n'
    << "unit: " << r.unit.str() << '\n'
    << "counit: " << r.counit.str() << '\n'
    << "status: " << to_string(r.status) << '\n';
  if (r.context && r.context->duality() != Duality::None) s << "duality: " << to_string(r.context->duality()) << '\n';
  return s.str();
}

std::string report_line(const std::string& name, const ZigzagReport& rep) {
  std::string line = name + ": " + to_string(rep.outcome) + " (steps " + std::to_string(rep.steps) + ")";
  if (!rep.message.empty() && rep.outcome != ZigzagOutcome::Verified) line += " " + rep.message;
  return line;
}

int cmd_parity(const Args& a, Emitter& e) {
  const PairKind k = parity_pair(DexterityFunction::parse(a.a), DexterityFunction::parse(a.b));
  e.emit(to_string(k), to_string(k));
  return k == PairKind::Parity ? kOk : kDomain;
}

int cmd_canonical(const Args& a, Emitter& e) {
  const auto c = canonical(DexterityFunction::parse(a.a)).str();
  e.emit(c, c);
  return kOk;
}

int cmd_interchange(const Args& a, Emitter& e) {
  const auto c = interchange(DexterityFunction::parse(a.a), to_size(a.b, "J")).str();
  e.emit(c, c);
  return kOk;
}

int cmd_normalize(const Args& a, Emitter& e) {
  const RewriteTrace t = normalize_witness(DexterityFunction::parse(a.a), DexterityFunction::parse(a.b));
  e.emit(trace_text(t), json(t));
  return kOk;
}

int cmd_saturate(const Args& a, Emitter& e) {
  const json doc = to_json(saturate(fact_base_from_json(read_json_file(a.a))));
  e.emit(doc.dump(2), doc);
  return kOk;
}

int cmd_oppose(const Args& a, Emitter& e) {
  const OppositeFunction o = op_for_pair(DexterityFunction::parse(a.a), DexterityFunction::parse(a.b),
                                         to_size(a.c, "K"), to_size(a.d, "N"));
  e.emit(o.str(), o.to_json());
  return kOk;
}

int cmd_opbuild(const Args& a, Emitter& e) {
  const std::size_t n = to_size(a.b, "N");
  OppositeVariant v{OppositeVariant::Kind::Constant};
  if (a.a == "even_op") {
    v.kind = OppositeVariant::Kind::EvenOp;
  } else if (a.a == "odd_op") {
    v.kind = OppositeVariant::Kind::OddOp;
  } else if (a.a == "id") {
    v.value = Direction::Id;
  } else if (a.a == "op") {
    v.value = Direction::Op;
  } else {
    throw ParseError("VARIANT must be even_op, odd_op, id or op, got '" + a.a + "'");
  }
  const OppositeFunction o = build_opposite(v, n);
  e.emit(o.str(), o.to_json());
  return kOk;
}

int cmd_tree_classes(const Args& a, Emitter& e) {
  const std::string v = big(class_count_recurrence(to_size(a.a, "N")));
  e.emit(v, v);
  return kOk;
}

int cmd_tree_brute(const Args& a, const Options& opt, Emitter& e) {
  const std::size_t n = to_size(a.a, "N");
  const ClassTable t = brute_force_classes(n, capped_depth(opt, n));
  std::string text = big(t.class_count);
  if (a.reps) {
    for (std::size_t i = 0; i < t.representatives.size(); ++i) {
      text += "\n" + t.representatives[i].str() + " " + std::to_string(t.orbit_sizes[i]);
    }
  }
  json value = t.to_json();
  value["orbit_sizes"] = t.orbit_sizes;
  e.emit(text, a.reps ? value : json(big(t.class_count)));
  return kOk;
}

int cmd_wreath(const Args& a, const Options& opt, Emitter& e) {
  const std::size_t n = to_size(a.a, "N");
  const std::string v = big(wreath_involutions(n, capped_depth(opt, n)));
  e.emit(v, v);
  return kOk;
}

int cmd_tree_equiv(const Args& a, Emitter& e) {
  const TreeEquivalence r = are_tree_equivalent(parse_tree(a.a), parse_tree(a.b));
  json steps = json::array();
  for (const auto& p : r.witness) steps.push_back(p.str());
  std::string text = r.equivalent ? "equivalent" : "inequivalent";
  if (r.equivalent) text += "\n" + steps.dump();
  e.emit(text, json{{"equivalent", r.equivalent}, {"witness", steps}});
  return kOk;
}

bool looks_like_function(const std::string& s) {
  return !s.empty() && s.find_first_not_of("LR") == std::string::npos;
}

int cmd_schema(const Args& a, Emitter& e) {
  const std::size_t k = to_size(a.b, "K");
  SchemaTower tower;
  if (a.full) {
    tower = generate_full_schema(a.a, k, to_size(a.c, "DEX (depth for --full)"), a.dim);
  } else if (looks_like_function(a.c)) {
    tower = generate_schema(a.a, k, DexterityFunction::parse(a.c), a.dim);
  } else {
    tower = generate_schema(a.a, k, parse_tree(a.c), a.dim);
  }
  std::ostringstream text;
  text << "records: " << tower.records.size() << '\n';
  for (std::size_t i = 0; i < tower.records.size(); ++i) {
    const std::string path = tower.path_of(i);
    text << "[" << path << "] level " << tower.records[i].level << ": " << tower.records[i].text() << '\n';
  }
  e.emit(text.str(), to_json(tower));
  return kOk;
}

int cmd_compose(const Args& a, const Options& opt, Emitter& e) {
  const ContextDocument doc = load_context_file(a.a);
  std::vector<std::string> names = doc.compose;
  if (names.empty()) {
    for (const auto& r : doc.records) names.push_back(r.name);
  }
  if (names.empty()) throw DomainError("nothing to compose");
  AdjunctionRecord acc = doc.record(names.front());
  for (std::size_t i = 1; i < names.size(); ++i) acc = compose_adjunctions(acc, doc.record(names[i]));
  const ZigzagReport rep = verify_zigzag(acc, opt.fuel);
  if (rep.outcome == ZigzagOutcome::Verified) acc.status = Witness::Verified;
  e.emit(record_text(acc) + report_line("zigzag", rep), json{{"record", to_json(acc)}, {"zigzag", to_json(rep)}});
  return rep.outcome == ZigzagOutcome::TypeError ? kDomain : kOk;
}

int cmd_verify(const Args& a, const Options& opt, Emitter& e, std::ostream& err) {
  std::vector<AdjunctionRecord> records;
  if (opt.seed) {
    if (!a.a.empty()) throw ParseError("give either FILE or --seed, not both");
    RandomCorpus corpus = random_corpus(*opt.seed);
    records = corpus.axioms;
    records.insert(records.end(), corpus.derived.begin(), corpus.derived.end());
  } else {
    if (a.a.empty()) throw ParseError("verify-zigzag needs FILE or --seed");
    records = load_context_file(a.a).records;
  }
  std::string text;
  json results = json::array();
  std::size_t type_errors = 0;
  for (const auto& r : records) {
    const ZigzagReport rep = verify_zigzag(r, opt.fuel);
    if (rep.outcome == ZigzagOutcome::TypeError) ++type_errors;
    text += report_line(r.name, rep) + "\n";
    json item = to_json(rep);
    item["name"] = r.name;
    results.push_back(std::move(item));
  }
  e.emit(text, results);
  if (type_errors == 0) return kOk;
  err << "error: " << type_errors << " record(s) failed to type-check\n";
  return kDomain;
}

int cmd_dualize(const Args& a, Emitter& e) {
  const ContextDocument doc = load_context_file(a.a);
  const AdjunctionRecord r = dualize(doc.record(a.b), parse_duality(a.c));
  type_check(r);
  e.emit(record_text(r), to_json(r));
  return kOk;
}

int cmd_compare(const Args& a, const Options& opt, Emitter& e) {
  const ContextDocument doc = load_context_file(a.a);
  const ComparisonCell c = comparison_cell(doc.record(a.b), doc.record(a.c), opt.fuel);
  std::ostringstream text;
  text << "phi: " << c.phi.str() << '\n'
       << "normal form: " << c.normal_form << '\n'
       << "unit equation: " << to_string(c.unit_equation) << '\n'
       << "counit equation: " << to_string(c.counit_equation) << '\n';
  e.emit(text.str(), to_json(c));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher adjunctibility combinatorics", "hadj"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  Args a;
  app.add_flag("--json", opt.json, "Wrap results as {\"command\", \"result\"} JSON");
  app.add_option("--fuel", opt.fuel, "Rewrite budget for the zig-zag verifier")->check(CLI::PositiveNumber);
  app.add_option("--max-n", opt.max_n, "Largest depth for exhaustive enumeration (at most 4)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Random corpus seed for verify-zigzag");

  auto two = [&](const char* name, const char* help, const char* x, const char* y) {
    auto* s = app.add_subcommand(name, help);
    s->add_option(x, a.a)->required();
    s->add_option(y, a.b)->required();
    return s;
  };
  auto one = [&](const char* name, const char* help, const char* x) {
    auto* s = app.add_subcommand(name, help);
    s->add_option(x, a.a)->required();
    return s;
  };

  auto* parity = two("parity", "Parity or Nonparity of two dexterity functions", "A", "B");
  auto* canon = one("canonical", "even^n or odd^n in the parity class of A", "A");
  auto* inter = two("interchange", "Negate entries J and J+1 of A", "A", "J");
  auto* norm = two("normalize", "Interchange positions rewriting A into B", "A", "B");
  auto* sat = one("saturate", "Close a fact base under the inference rules", "FILE");
  auto* oppose = two("oppose", "Opposite function of a pair at offset K in dimension N", "A", "B");
  oppose->add_option("K", a.c)->required();
  oppose->add_option("N", a.d)->required();
  auto* opbuild = two("opbuild", "Opposite function even_op, odd_op, id or op of length N", "VARIANT", "N");
  auto* classes = one("tree-classes", "Number of dexterity-tree classes by recurrence", "N");
  auto* brute = one("tree-brute", "Number of dexterity-tree classes by enumeration", "N");
  brute->add_flag("--reps", a.reps, "List class representatives with orbit sizes");
  auto* wreath = one("wreath", "Involutions of the depth-(N+1) binary tree automorphism group", "N");
  auto* equiv = two("tree-equiv", "Interchange equivalence of two dexterity trees", "S", "T");
  auto* schema = two("schema", "Adjunctibility data tower for F at level K", "F", "K");
  schema->add_option("DEX", a.c, "Dexterity function, dexterity tree, or depth with --full")->required();
  schema->add_flag("--full", a.full, "Two-sided (n-adjunctibility) data");
  schema->add_option("--dim", a.dim, "Ambient dimension N (default K + depth)");
  auto* compose = one("compose-adj", "Compose the adjunctions of a context file", "FILE");
  auto* verify = app.add_subcommand("verify-zigzag", "Check zig-zag identities of context records");
  verify->add_option("FILE", a.a);
  auto* dual = two("dualize", "Read a record in the op, co or coop dual", "FILE", "NAME");
  dual->add_option("VARIANT", a.c)->required();
  auto* compare = two("compare", "Comparison cell between two adjunctions on the same adjoints", "FILE", "A1");
  compare->add_option("A2", a.c)->required();

  std::vector<std::string> argv_store{"hadj"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Emitter emit(out, opt, chosen->get_name());
  try {
    if (chosen == parity) return cmd_parity(a, emit);
    if (chosen == canon) return cmd_canonical(a, emit);
    if (chosen == inter) return cmd_interchange(a, emit);
    if (chosen == norm) return cmd_normalize(a, emit);
    if (chosen == sat) return cmd_saturate(a, emit);
    if (chosen == oppose) return cmd_oppose(a, emit);
    if (chosen == opbuild) return cmd_opbuild(a, emit);
    if (chosen == classes) return cmd_tree_classes(a, emit);
    if (chosen == brute) return cmd_tree_brute(a, opt, emit);
    if (chosen == wreath) return cmd_wreath(a, opt, emit);
    if (chosen == equiv) return cmd_tree_equiv(a, emit);
    if (chosen == schema) return cmd_schema(a, emit);
    if (chosen == compose) return cmd_compose(a, opt, emit);
    if (chosen == verify) return cmd_verify(a, opt, emit, err);
    if (chosen == dual) return cmd_dualize(a, emit);
    if (chosen == compare) return cmd_compare(a, opt, emit);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n' << "run 'hadj " << chosen->get_name() << " --help' for usage\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  err << "error: unhandled subcommand\n";
  return kUsage;
}

}  // namespace hadj::cli
