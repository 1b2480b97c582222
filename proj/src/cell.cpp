#include "hadj/cell.hpp"

#include <algorithm>
#include <cctype>

#include "hadj/errors.hpp"

namespace hadj {

const char* to_string(Duality d) noexcept {
  switch (d) {
    case Duality::None: return "none";
    case Duality::Op: return "op";
    case Duality::Co: return "co";
    case Duality::Coop: return "coop";
  }
  return "?";
}

Duality parse_duality(std::string_view text) {
  if (text == "none") return Duality::None;
  if (text == "op") return Duality::Op;
  if (text == "co") return Duality::Co;
  if (text == "coop") return Duality::Coop;
  throw ParseError("unknown duality '" + std::string(text) + "' (expected op, co or coop)");
}

namespace {

bool has_op(Duality d) { return (static_cast<unsigned>(d) & 1U) != 0; }
bool has_co(Duality d) { return (static_cast<unsigned>(d) & 2U) != 0; }

std::string join_words(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

std::string OneCell::str() const {
  if (word.empty()) return "(id " + source + ")";
  if (word.size() == 1) return word.front();
  return "(hcomp " + join_words(word) + ")";
}

std::string TwoCell::str() const { return to_term(*this).str(); }

// ---------------------------------------------------------------------------
// FormalContext

void FormalContext::claim_name(const std::string& name) {
  if (name.empty()) throw DomainError("generator names must be nonempty");
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')') {
      throw DomainError("generator name '" + name + "' contains whitespace or parentheses");
    }
  }
  if (name == "id" || name == "inv" || name == "hcomp" || name == "vcomp" || name == "whisker") {
    throw DomainError("'" + name + "' is reserved");
  }
  if (objects_.count(name) || morphisms_.count(name) || cells_.count(name)) {
    throw DomainError("duplicate generator '" + name + "'");
  }
}

void FormalContext::add_object(const std::string& name) {
  claim_name(name);
  objects_.emplace(name, true);
}

void FormalContext::add_morphism(const std::string& name, const std::string& source,
                                 const std::string& target) {
  if (!has_object(source)) throw DomainError("morphism '" + name + "': undeclared object '" + source + "'");
  if (!has_object(target)) throw DomainError("morphism '" + name + "': undeclared object '" + target + "'");
  claim_name(name);
  morphisms_.emplace(name, MorphismGen{source, target});
}

void FormalContext::check_one_cell(const OneCell& c) const {
  if (!has_object(c.source) || !has_object(c.target)) {
    throw DomainError("1-cell " + c.str() + " has undeclared endpoints");
  }
  if (c.word.empty()) {
    if (c.source != c.target) throw DomainError("identity 1-cell with distinct endpoints");
    return;
  }
  for (std::size_t i = 0; i < c.word.size(); ++i) {
    const MorphismGen* m = find_morphism(c.word[i]);
    if (m == nullptr) throw DomainError("unresolved generator '" + c.word[i] + "'");
    if (i == 0 && m->target != c.target) throw DomainError("1-cell " + c.str() + " has the wrong target");
    if (i + 1 == c.word.size() && m->source != c.source) {
      throw DomainError("1-cell " + c.str() + " has the wrong source");
    }
    if (i + 1 < c.word.size()) {
      const MorphismGen* next = find_morphism(c.word[i + 1]);
      if (next == nullptr) throw DomainError("unresolved generator '" + c.word[i + 1] + "'");
      if (next->target != m->source) {
        throw DomainError("boundary mismatch: " + c.word[i] + " starts at " + m->source + " but " +
                          c.word[i + 1] + " ends at " + next->target);
      }
    }
  }
}

void FormalContext::add_cell(const std::string& name, const OneCell& source, const OneCell& target,
                             bool invertible) {
  check_one_cell(source);
  check_one_cell(target);
  if (source.source != target.source || source.target != target.target) {
    throw DomainError("2-cell '" + name + "': " + source.str() + " and " + target.str() +
                      " are not parallel");
  }
  claim_name(name);
  cells_.emplace(name, CellGen{source, target, invertible});
}

void FormalContext::add_axiom(AxiomRule rule) {
  check_one_cell(rule.left);
  check_one_cell(rule.right);
  if (rule.left.source != rule.right.target || rule.left.target != rule.right.source) {
    throw DomainError("axiom '" + rule.name + "': left and right adjoints are not opposed");
  }
  const CellGen* u = find_cell(rule.unit);
  const CellGen* c = find_cell(rule.counit);
  if (u == nullptr) throw DomainError("axiom '" + rule.name + "': unresolved unit '" + rule.unit + "'");
  if (c == nullptr) throw DomainError("axiom '" + rule.name + "': unresolved counit '" + rule.counit + "'");
  const std::string& a = rule.left.source;
  const std::string& b = rule.left.target;
  if (u->source != OneCell{{}, a, a} || u->target != concat(rule.right, rule.left)) {
    throw DomainError("axiom '" + rule.name + "': unit must be (id " + a + ") => " +
                      concat(rule.right, rule.left).str());
  }
  if (c->source != concat(rule.left, rule.right) || c->target != OneCell{{}, b, b}) {
    throw DomainError("axiom '" + rule.name + "': counit must be " + concat(rule.left, rule.right).str() +
                      " => (id " + b + ")");
  }
  if (find_axiom(rule.name) != nullptr) throw DomainError("duplicate axiom '" + rule.name + "'");
  axioms_.push_back(std::move(rule));
}

const MorphismGen* FormalContext::find_morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  return it == morphisms_.end() ? nullptr : &it->second;
}

const CellGen* FormalContext::find_cell(const std::string& name) const {
  auto it = cells_.find(name);
  return it == cells_.end() ? nullptr : &it->second;
}

const AxiomRule* FormalContext::find_axiom(const std::string& name) const {
  for (const auto& a : axioms_) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const AxiomRule* FormalContext::axiom_with_unit(const std::string& gen) const {
  for (const auto& a : axioms_) {
    if (a.unit == gen) return &a;
  }
  return nullptr;
}

const AxiomRule* FormalContext::axiom_with_counit(const std::string& gen) const {
  for (const auto& a : axioms_) {
    if (a.counit == gen) return &a;
  }
  return nullptr;
}

FormalContext FormalContext::dual(Duality d) const {
  FormalContext out = *this;
  out.duality_ = compose(duality_, d);
  if (has_op(d)) {
    for (auto& [name, m] : out.morphisms_) std::swap(m.source, m.target);
  }
  for (auto& [name, c] : out.cells_) {
    c.source = dualize(c.source, d);
    c.target = dualize(c.target, d);
    if (has_co(d)) std::swap(c.source, c.target);
  }
  for (auto& a : out.axioms_) {
    a.left = dualize(a.left, d);
    a.right = dualize(a.right, d);
    if (has_op(d)) std::swap(a.left, a.right);
    if (has_co(d)) {
      std::swap(a.left, a.right);
      std::swap(a.unit, a.counit);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cell syntax

struct Cell::Node {
  Kind kind;
  std::string name;
  std::vector<Cell> children;
};

Cell Cell::atom(std::string name) {
  if (name.empty()) throw ParseError("empty generator name");
  return Cell(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}
Cell Cell::identity(Cell of) {
  return Cell(std::make_shared<const Node>(Node{Kind::Identity, {}, {std::move(of)}}));
}
Cell Cell::inverse(Cell of) {
  return Cell(std::make_shared<const Node>(Node{Kind::Inverse, {}, {std::move(of)}}));
}
Cell Cell::hcomp(std::vector<Cell> factors) {
  if (factors.empty()) throw ParseError("hcomp needs at least one factor");
  return Cell(std::make_shared<const Node>(Node{Kind::HComp, {}, std::move(factors)}));
}
Cell Cell::vcomp(std::vector<Cell> factors) {
  if (factors.empty()) throw ParseError("vcomp needs at least one factor");
  return Cell(std::make_shared<const Node>(Node{Kind::VComp, {}, std::move(factors)}));
}
Cell Cell::whisker(Cell left, Cell body, Cell right) {
  return Cell(std::make_shared<const Node>(
      Node{Kind::Whisker, {}, {std::move(left), std::move(body), std::move(right)}}));
}

namespace {

const std::string kNoName;
const std::vector<Cell> kNoChildren;

}  // namespace

Cell::Kind Cell::kind() const {
  if (!node_) throw DomainError("empty term");
  return node_->kind;
}
const std::string& Cell::name() const { return node_ ? node_->name : kNoName; }
const std::vector<Cell>& Cell::children() const { return node_ ? node_->children : kNoChildren; }

std::string Cell::str() const {
  if (!node_) return "";
  const char* head = nullptr;
  switch (node_->kind) {
    case Kind::Atom: return node_->name;
    case Kind::Identity: head = "id"; break;
    case Kind::Inverse: head = "inv"; break;
    case Kind::HComp: head = "hcomp"; break;
    case Kind::VComp: head = "vcomp"; break;
    case Kind::Whisker: head = "whisker"; break;
  }
  std::string out = "(";
  out += head;
  for (const auto& c : node_->children) out += ' ' + c.str();
  out += ')';
  return out;
}

bool operator==(const Cell& a, const Cell& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.kind() == b.kind() && a.name() == b.name() && a.children() == b.children();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Cell parse_all() {
    Cell c = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("term parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string parse_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Cell parse_term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return Cell::atom(parse_atom());
    ++pos_;
    skip_space();
    std::string head = parse_atom();
    std::vector<Cell> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(parse_term());
    }
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail("'" + head + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (head == "id") {
      arity(1);
      return Cell::identity(args[0]);
    }
    if (head == "inv") {
      arity(1);
      return Cell::inverse(args[0]);
    }
    if (head == "whisker") {
      arity(3);
      return Cell::whisker(args[0], args[1], args[2]);
    }
    if (head == "hcomp" || head == "vcomp") {
      if (args.empty()) fail("'" + head + "' needs at least one argument");
      return head == "hcomp" ? Cell::hcomp(std::move(args)) : Cell::vcomp(std::move(args));
    }
    fail("unknown operator '" + head + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cell Cell::parse(std::string_view text) { return TermParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Normal forms

OneCell concat(const OneCell& left, const OneCell& right) {
  if (left.source != right.target) {
    throw DomainError("boundary mismatch: " + left.str() + " starts at " + left.source + " but " +
                      right.str() + " ends at " + right.target);
  }
  OneCell out{left.word, right.source, left.target};
  out.word.insert(out.word.end(), right.word.begin(), right.word.end());
  return out;
}

TwoCell identity_two_cell(const OneCell& c) { return TwoCell{c, c, {}}; }

TwoCell horizontal(const TwoCell& left, const TwoCell& right) {
  if (left.source.source != right.source.target) {
    throw DomainError("boundary mismatch in horizontal composite: " + left.str() + " starts at " +
                      left.source.source + " but " + right.str() + " ends at " + right.source.target);
  }
  TwoCell out{concat(left.source, right.source), concat(left.target, right.target), {}};
  const std::size_t shift = left.source.word.size();
  out.layers.reserve(left.layers.size() + right.layers.size());
  for (Layer l : right.layers) {
    l.offset += shift;
    out.layers.push_back(std::move(l));
  }
  out.layers.insert(out.layers.end(), left.layers.begin(), left.layers.end());
  return out;
}

TwoCell whisker(const OneCell& prefix, const TwoCell& body, const OneCell& suffix) {
  return horizontal(horizontal(identity_two_cell(prefix), body), identity_two_cell(suffix));
}

TwoCell vertical(const TwoCell& second, const TwoCell& first) {
  if (first.target != second.source) {
    throw DomainError("boundary mismatch in vertical composite: " + first.str() + " ends at " +
                      first.target.str() + " but " + second.str() + " starts at " + second.source.str());
  }
  TwoCell out{first.source, second.target, first.layers};
  out.layers.insert(out.layers.end(), second.layers.begin(), second.layers.end());
  return out;
}

TwoCell inverse(const TwoCell& cell, const FormalContext& ctx) {
  TwoCell out{cell.target, cell.source, {}};
  for (auto it = cell.layers.rbegin(); it != cell.layers.rend(); ++it) {
    const CellGen* g = ctx.find_cell(it->gen);
    if (g == nullptr) throw DomainError("unresolved generator '" + it->gen + "'");
    if (!g->invertible) throw DomainError("2-cell '" + it->gen + "' is not declared invertible");
    out.layers.push_back(Layer{it->gen, !it->inverse, it->offset, it->output, it->input});
  }
  return out;
}

namespace {

Interpreted interpret_node(const Cell& term, const FormalContext& ctx);

OneCell as_one_cell(const Interpreted& v, const Cell& term) {
  if (const auto* obj = std::get_if<std::string>(&v)) return OneCell{{}, *obj, *obj};
  if (const auto* one = std::get_if<OneCell>(&v)) return *one;
  throw DomainError("expected a 1-cell, got the 2-cell " + term.str());
}

TwoCell as_two_cell(const Interpreted& v) {
  if (const auto* two = std::get_if<TwoCell>(&v)) return *two;
  if (const auto* obj = std::get_if<std::string>(&v)) return identity_two_cell(OneCell{{}, *obj, *obj});
  return identity_two_cell(std::get<OneCell>(v));
}

Interpreted interpret_node(const Cell& term, const FormalContext& ctx) {
  switch (term.kind()) {
    case Cell::Kind::Atom: {
      const std::string& n = term.name();
      if (ctx.has_object(n)) return n;
      if (const MorphismGen* m = ctx.find_morphism(n)) return OneCell{{n}, m->source, m->target};
      if (const CellGen* c = ctx.find_cell(n)) {
        return TwoCell{c->source, c->target,
                       {Layer{n, false, 0, c->source.word, c->target.word}}};
      }
      throw DomainError("unresolved generator '" + n + "'");
    }
    case Cell::Kind::Identity: {
      Interpreted inner = interpret_node(term.children()[0], ctx);
      if (const auto* obj = std::get_if<std::string>(&inner)) return OneCell{{}, *obj, *obj};
      if (const auto* one = std::get_if<OneCell>(&inner)) return identity_two_cell(*one);
      throw DomainError("identity on the 2-cell " + term.children()[0].str() +
                        " exceeds the 2-dimensional term model");
    }
    case Cell::Kind::Inverse: {
      Interpreted inner = interpret_node(term.children()[0], ctx);
      const auto* two = std::get_if<TwoCell>(&inner);
      if (two == nullptr) throw DomainError("inverse of a non-2-cell " + term.children()[0].str());
      return inverse(*two, ctx);
    }
    case Cell::Kind::HComp:
    case Cell::Kind::Whisker: {
      std::vector<Interpreted> parts;
      bool two_dimensional = false;
      for (const auto& c : term.children()) {
        parts.push_back(interpret_node(c, ctx));
        two_dimensional = two_dimensional || std::holds_alternative<TwoCell>(parts.back());
      }
      if (term.kind() == Cell::Kind::Whisker &&
          !std::holds_alternative<TwoCell>(parts[1])) {
        throw DomainError("whisker body " + term.children()[1].str() + " is not a 2-cell");
      }
      if (term.kind() == Cell::Kind::Whisker) {
        for (std::size_t i : {std::size_t{0}, std::size_t{2}}) {
          if (std::holds_alternative<TwoCell>(parts[i])) {
            throw DomainError("whiskering by the 2-cell " + term.children()[i].str());
          }
        }
      }
      if (!two_dimensional) {
        OneCell acc = as_one_cell(parts[0], term.children()[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) acc = concat(acc, as_one_cell(parts[i], term.children()[i]));
        return acc;
      }
      TwoCell acc = as_two_cell(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) acc = horizontal(acc, as_two_cell(parts[i]));
      return acc;
    }
    case Cell::Kind::VComp: {
      const auto& kids = term.children();
      TwoCell acc = as_two_cell(interpret_node(kids.back(), ctx));
      for (std::size_t i = kids.size() - 1; i-- > 0;) {
        acc = vertical(as_two_cell(interpret_node(kids[i], ctx)), acc);
      }
      return acc;
    }
  }
  throw DomainError("malformed term");
}

}  // namespace

Interpreted interpret(const Cell& term, const FormalContext& ctx) { return interpret_node(term, ctx); }

OneCell interpret_one_cell(const Cell& term, const FormalContext& ctx) {
  Interpreted v = interpret_node(term, ctx);
  if (std::holds_alternative<std::string>(v)) {
    throw DomainError("expected a 1-cell, got the object " + term.str());
  }
  return as_one_cell(v, term);
}

TwoCell interpret_two_cell(const Cell& term, const FormalContext& ctx) {
  Interpreted v = interpret_node(term, ctx);
  if (!std::holds_alternative<TwoCell>(v)) throw DomainError("expected a 2-cell, got " + term.str());
  return std::get<TwoCell>(std::move(v));
}

Boundary check_typing(const Cell& term, const FormalContext& ctx) {
  Interpreted v = interpret_node(term, ctx);
  if (const auto* obj = std::get_if<std::string>(&v)) return Boundary{0, *obj, *obj};
  if (const auto* one = std::get_if<OneCell>(&v)) return Boundary{1, one->source, one->target};
  const auto& two = std::get<TwoCell>(v);
  return Boundary{2, two.source.str(), two.target.str()};
}

// ---------------------------------------------------------------------------
// Printing normal forms as terms

Cell to_term(const OneCell& c) {
  if (c.word.empty()) return Cell::identity(Cell::atom(c.source));
  if (c.word.size() == 1) return Cell::atom(c.word.front());
  std::vector<Cell> atoms;
  for (const auto& w : c.word) atoms.push_back(Cell::atom(w));
  return Cell::hcomp(std::move(atoms));
}

Cell to_term(const TwoCell& c) {
  if (c.layers.empty()) return Cell::identity(to_term(c.source));
  std::vector<std::string> word = c.source.word;
  std::vector<Cell> steps;
  for (const Layer& l : c.layers) {
    Cell g = Cell::atom(l.gen);
    if (l.inverse) g = Cell::inverse(g);
    std::vector<Cell> factors;
    for (std::size_t i = 0; i < l.offset; ++i) factors.push_back(Cell::atom(word[i]));
    factors.push_back(g);
    for (std::size_t i = l.offset + l.in_len(); i < word.size(); ++i) factors.push_back(Cell::atom(word[i]));
    steps.push_back(factors.size() == 1 ? g : Cell::hcomp(std::move(factors)));
    auto first = word.begin() + static_cast<std::ptrdiff_t>(l.offset);
    word.erase(first, first + static_cast<std::ptrdiff_t>(l.in_len()));
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(l.offset), l.output.begin(), l.output.end());
  }
  if (steps.size() == 1) return steps.front();
  std::reverse(steps.begin(), steps.end());
  return Cell::vcomp(std::move(steps));
}

// ---------------------------------------------------------------------------
// Duals

OneCell dualize(const OneCell& c, Duality d) {
  if (!has_op(d)) return c;
  OneCell out{{c.word.rbegin(), c.word.rend()}, c.target, c.source};
  return out;
}

TwoCell dualize(const TwoCell& c, Duality d) {
  TwoCell out = c;
  if (has_op(d)) {
    std::size_t len = c.source.word.size();
    for (Layer& l : out.layers) {
      std::size_t before = len;
      len = len - l.in_len() + l.out_len();
      l.offset = before - l.offset - l.in_len();
      std::reverse(l.input.begin(), l.input.end());
      std::reverse(l.output.begin(), l.output.end());
    }
    out.source = dualize(c.source, d);
    out.target = dualize(c.target, d);
  }
  if (has_co(d)) {
    std::reverse(out.layers.begin(), out.layers.end());
    for (Layer& l : out.layers) std::swap(l.input, l.output);
    std::swap(out.source, out.target);
  }
  return out;
}

Cell dualize(const Cell& term, Duality d) {
  std::vector<Cell> kids;
  for (const auto& c : term.children()) kids.push_back(dualize(c, d));
  switch (term.kind()) {
    case Cell::Kind::Atom: return term;
    case Cell::Kind::Identity: return Cell::identity(kids[0]);
    case Cell::Kind::Inverse: return Cell::inverse(kids[0]);
    case Cell::Kind::HComp:
      if (has_op(d)) std::reverse(kids.begin(), kids.end());
      return Cell::hcomp(std::move(kids));
    case Cell::Kind::VComp:
      if (has_co(d)) std::reverse(kids.begin(), kids.end());
      return Cell::vcomp(std::move(kids));
    case Cell::Kind::Whisker:
      if (has_op(d)) std::swap(kids[0], kids[2]);
      return Cell::whisker(kids[0], kids[1], kids[2]);
  }
  return term;
}

}  // namespace hadj
