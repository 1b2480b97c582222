#include "hadj/tree.hpp"

#include <deque>
#include <map>

#include "hadj/errors.hpp"

namespace hadj {

TreePath TreePath::parse(std::string_view text) {
  std::vector<Branch> steps;
  for (char ch : text) {
    if (ch == 'u') {
      steps.push_back(Branch::Unit);
    } else if (ch == 'c') {
      steps.push_back(Branch::Counit);
    } else {
      throw ParseError("tree path must be a string over {u,c}: '" + std::string(text) + "'");
    }
  }
  return TreePath(std::move(steps));
}

TreePath TreePath::child(Branch b) const {
  auto steps = steps_;
  steps.push_back(b);
  return TreePath(std::move(steps));
}

std::string TreePath::str() const {
  std::string out;
  for (Branch b : steps_) out.push_back(b == Branch::Unit ? 'u' : 'c');
  return out;
}

DexterityTree::DexterityTree(std::size_t depth, std::vector<Side> labels)
    : depth_(depth), labels_(std::move(labels)) {
  if (depth_ < 1 || depth_ > 30) throw DomainError("tree depth must be in 1..30");
  if (labels_.size() != (std::size_t{1} << depth_) - 1) {
    throw DomainError("a complete tree of depth " + std::to_string(depth_) + " has " +
                      std::to_string((std::size_t{1} << depth_) - 1) + " nodes");
  }
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  struct Node {
    Side side;
    std::vector<Node> children;
  };

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree parse error at offset " + std::to_string(pos) + ": " + what + " in '" +
                     std::string(text) + "'");
  }

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  Node parse_node() {
    skip_space();
    Node node{Side::L, {}};
    if (peek() == 'L') {
      node.side = Side::L;
    } else if (peek() == 'R') {
      node.side = Side::R;
    } else {
      fail("expected L or R");
    }
    ++pos;
    skip_space();
    if (peek() == '(') {
      ++pos;
      node.children.push_back(parse_node());
      skip_space();
      if (peek() != ',') fail("expected ','");
      ++pos;
      node.children.push_back(parse_node());
      skip_space();
      if (peek() != ')') fail("expected ')' (each node has exactly two children)");
      ++pos;
    }
    return node;
  }

  static std::size_t depth_of(const Node& node) {
    if (node.children.empty()) return 1;
    const std::size_t l = depth_of(node.children[0]);
    const std::size_t r = depth_of(node.children[1]);
    if (l != r) throw ParseError("ragged tree: subtrees of depth " + std::to_string(l) + " and " +
                                 std::to_string(r));
    return l + 1;
  }

  static void fill(const Node& node, std::size_t index, std::vector<Side>& labels) {
    labels[index] = node.side;
    if (!node.children.empty()) {
      fill(node.children[0], 2 * index + 1, labels);
      fill(node.children[1], 2 * index + 2, labels);
    }
  }
};

void format_node(const DexterityTree& t, std::size_t index, std::string& out) {
  out.push_back(to_char(t.labels()[index]));
  if (2 * index + 1 < t.node_count()) {
    out.push_back('(');
    format_node(t, 2 * index + 1, out);
    out.push_back(',');
    format_node(t, 2 * index + 2, out);
    out.push_back(')');
  }
}

}  // namespace

DexterityTree DexterityTree::parse(std::string_view text) {
  Parser p{text};
  auto root = p.parse_node();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing characters");
  const std::size_t depth = Parser::depth_of(root);
  if (depth > 30) throw ParseError("tree too deep");
  std::vector<Side> labels((std::size_t{1} << depth) - 1);
  Parser::fill(root, 0, labels);
  return DexterityTree(depth, std::move(labels));
}

DexterityTree DexterityTree::from_code(std::size_t depth, std::uint64_t code) {
  if (depth < 1 || depth > 6) throw DomainError("tree codes support depth 1..6");
  const std::size_t m = (std::size_t{1} << depth) - 1;
  std::vector<Side> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = ((code >> i) & 1U) ? Side::R : Side::L;
  return DexterityTree(depth, std::move(labels));
}

std::uint64_t DexterityTree::code() const {
  if (depth_ > 6) throw DomainError("tree codes support depth 1..6");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == Side::R) code |= (std::uint64_t{1} << i);
  }
  return code;
}

std::size_t DexterityTree::index_of(const TreePath& p) {
  std::size_t index = 0;
  for (Branch b : p.steps()) index = 2 * index + (b == Branch::Unit ? 1 : 2);
  return index;
}

Side DexterityTree::label(const TreePath& p) const {
  if (p.size() >= depth_) {
    throw DomainError("path '" + p.str() + "' does not address a node of a depth-" +
                      std::to_string(depth_) + " tree");
  }
  return labels_[index_of(p)];
}

std::string DexterityTree::str() const {
  std::string out;
  format_node(*this, 0, out);
  return out;
}

bool interchange_applicable(const DexterityTree& t, const TreePath& p) {
  if (p.size() + 1 >= t.depth()) return false;
  const std::size_t v = DexterityTree::index_of(p);
  return t.labels()[2 * v + 1] == t.labels()[2 * v + 2];
}

DexterityTree tree_interchange(const DexterityTree& t, const TreePath& p) {
  if (p.size() + 1 >= t.depth()) {
    throw DomainError("path '" + p.str() + "' addresses a leaf or no node; interchange needs an "
                      "internal node");
  }
  const std::size_t v = DexterityTree::index_of(p);
  const std::size_t left = 2 * v + 1;
  const std::size_t right = 2 * v + 2;
  const auto& in = t.labels();
  if (in[left] != in[right]) {
    throw DomainError("interchange at '" + p.str() + "' needs equal child labels, found " +
                      to_char(in[left]) + " and " + to_char(in[right]));
  }
  std::vector<Side> out = in;
  out[v] = negate(in[v]);
  // Walk both child subtrees level by level, swapping corresponding nodes.
  std::vector<std::size_t> a{left};
  std::vector<std::size_t> b{right};
  while (!a.empty() && a.front() < in.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[a[i]] = in[b[i]];
      out[b[i]] = in[a[i]];
    }
    std::vector<std::size_t> na, nb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      na.push_back(2 * a[i] + 1);
      na.push_back(2 * a[i] + 2);
      nb.push_back(2 * b[i] + 1);
      nb.push_back(2 * b[i] + 2);
    }
    a = std::move(na);
    b = std::move(nb);
  }
  out[left] = negate(out[left]);
  out[right] = negate(out[right]);
  return DexterityTree(t.depth(), std::move(out));
}

std::vector<TreePath> internal_paths(std::size_t depth) {
  std::vector<TreePath> out;
  if (depth < 2) return out;
  std::vector<TreePath> level{TreePath{}};
  for (std::size_t d = 0; d + 1 < depth; ++d) {
    std::vector<TreePath> next;
    for (const auto& p : level) {
      out.push_back(p);
      next.push_back(p.child(Branch::Unit));
      next.push_back(p.child(Branch::Counit));
    }
    level = std::move(next);
  }
  return out;
}

DexterityTree replay(const DexterityTree& t, const std::vector<TreePath>& steps) {
  DexterityTree current = t;
  for (const auto& p : steps) current = tree_interchange(current, p);
  return current;
}

TreeEquivalence are_tree_equivalent(const DexterityTree& s, const DexterityTree& t,
                                    std::size_t max_states) {
  if (s.depth() != t.depth()) {
    throw DomainError("depth mismatch: " + std::to_string(s.depth()) + " vs " +
                      std::to_string(t.depth()));
  }
  if (s == t) return {true, {}};
  const auto paths = internal_paths(s.depth());
  // predecessor map: tree -> (parent tree, path used)
  std::map<std::vector<Side>, std::pair<std::vector<Side>, std::size_t>> seen;
  seen.emplace(s.labels(), std::make_pair(std::vector<Side>{}, std::size_t{0}));
  std::deque<DexterityTree> queue{s};
  while (!queue.empty()) {
    DexterityTree cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (!interchange_applicable(cur, paths[i])) continue;
      DexterityTree next = tree_interchange(cur, paths[i]);
      if (seen.count(next.labels())) continue;
      if (seen.size() >= max_states) {
        throw CapacityError("orbit exceeds " + std::to_string(max_states) + " trees");
      }
      seen.emplace(next.labels(), std::make_pair(cur.labels(), i));
      if (next == t) {
        std::vector<TreePath> witness;
        std::vector<Side> at = next.labels();
        while (at != s.labels()) {
          const auto& [parent, step] = seen.at(at);
          witness.push_back(paths[step]);
          at = parent;
        }
        return {true, {witness.rbegin(), witness.rend()}};
      }
      queue.push_back(std::move(next));
    }
  }
  return {false, {}};
}

DexterityTree tree_from_function(const DexterityFunction& a) {
  const std::size_t n = a.length();
  if (n > 30) throw DomainError("tree depth must be in 1..30");
  std::vector<Side> labels((std::size_t{1} << n) - 1);
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t i = (std::size_t{1} << d) - 1; i < (std::size_t{1} << (d + 1)) - 1; ++i) {
      labels[i] = a.entries()[d];
    }
  }
  return DexterityTree(n, std::move(labels));
}

}  // namespace hadj
