#include "hadj/tree_enum.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <set>

#include <omp.h>

#include "hadj/errors.hpp"

namespace hadj {

namespace {

void check_brute_depth(std::size_t n, std::size_t max_depth) {
  if (n < 1) throw DomainError("depth must be >= 1");
  const std::size_t cap = std::min(max_depth, kMaxBruteDepth);
  if (n > cap) {
    throw CapacityError("exhaustive enumeration refused for n = " + std::to_string(n) +
                        " (capacity n <= " + std::to_string(cap) + ")");
  }
}

std::string decimal(const BigCount& v) { return v.str(); }

}  // namespace

nlohmann::json ClassTable::to_json() const {
  nlohmann::json doc;
  doc["depth"] = depth;
  doc["class_count"] = decimal(class_count);
  auto reps = nlohmann::json::array();
  for (const auto& t : representatives) reps.push_back(t.str());
  doc["representatives"] = reps;
  return doc;
}

TreeKernel::TreeKernel(std::size_t depth) : depth_(depth), nodes_((std::size_t{1} << depth) - 1) {
  if (depth < 1 || depth > 5) throw DomainError("TreeKernel supports depth 1..5");
  for (std::size_t v = 0; 2 * v + 2 < nodes_; ++v) {
    Move m;
    m.node_bit = 1U << v;
    m.left_bit = 1U << (2 * v + 1);
    m.right_bit = 1U << (2 * v + 2);
    std::vector<std::size_t> a{2 * (2 * v + 1) + 1, 2 * (2 * v + 1) + 2};
    std::vector<std::size_t> b{2 * (2 * v + 2) + 1, 2 * (2 * v + 2) + 2};
    while (a.front() < nodes_) {
      std::vector<std::size_t> na, nb;
      for (std::size_t i = 0; i < a.size(); ++i) {
        m.swaps.emplace_back(static_cast<std::uint8_t>(a[i]), static_cast<std::uint8_t>(b[i]));
        na.push_back(2 * a[i] + 1);
        na.push_back(2 * a[i] + 2);
        nb.push_back(2 * b[i] + 1);
        nb.push_back(2 * b[i] + 2);
      }
      a = std::move(na);
      b = std::move(nb);
    }
    moves_.push_back(std::move(m));
  }
  // preorder traversal of heap indices
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    preorder_.push_back(static_cast<std::uint8_t>(i));
    if (2 * i + 2 < nodes_) {
      stack.push_back(2 * i + 2);
      stack.push_back(2 * i + 1);
    }
  }
}

bool TreeKernel::apply(std::uint32_t code, std::size_t v, std::uint32_t& out) const noexcept {
  const Move& m = moves_[v];
  const bool l = code & m.left_bit;
  const bool r = code & m.right_bit;
  if (l != r) return false;
  std::uint32_t next = code ^ m.node_bit;
  // children trade places (equal labels) and both flip
  next ^= m.left_bit | m.right_bit;
  for (const auto& [x, y] : m.swaps) {
    const std::uint32_t bx = (code >> x) & 1U;
    const std::uint32_t by = (code >> y) & 1U;
    if (bx != by) next ^= (1U << x) | (1U << y);
  }
  out = next;
  return true;
}

std::uint32_t TreeKernel::preorder_key(std::uint32_t code) const noexcept {
  std::uint32_t key = 0;
  for (std::uint8_t i : preorder_) key = (key << 1) | ((code >> i) & 1U);
  return key;
}

namespace {

std::uint32_t find_root(std::vector<std::atomic<std::uint32_t>>& parent, std::uint32_t x) {
  while (true) {
    std::uint32_t p = parent[x].load(std::memory_order_acquire);
    if (p == x) return x;
    std::uint32_t gp = parent[p].load(std::memory_order_acquire);
    // path halving; parents only ever decrease, so this keeps x in its set
    if (gp != p) parent[x].compare_exchange_weak(p, gp, std::memory_order_acq_rel);
    x = gp;
  }
}

void unite(std::vector<std::atomic<std::uint32_t>>& parent, std::uint32_t a, std::uint32_t b) {
  while (true) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    // link the larger root below the smaller one
    std::uint32_t expected = b;
    if (parent[b].compare_exchange_strong(expected, a, std::memory_order_acq_rel)) return;
  }
}

ClassTable table_from_partition(std::size_t n, const TreeKernel& kernel,
                                const std::vector<std::uint32_t>& root_of) {
  // root -> (min preorder key, member code with that key, size)
  std::map<std::uint32_t, std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> classes;
  for (std::uint32_t code = 0; code < root_of.size(); ++code) {
    const std::uint32_t key = kernel.preorder_key(code);
    auto [it, inserted] = classes.try_emplace(root_of[code], key, code, 0);
    auto& [best_key, best_code, size] = it->second;
    if (key < best_key) {
      best_key = key;
      best_code = code;
    }
    ++size;
  }
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> rows;
  for (const auto& [root, row] : classes) rows.push_back(row);
  std::sort(rows.begin(), rows.end());
  ClassTable table;
  table.depth = n;
  table.class_count = rows.size();
  for (const auto& [key, code, size] : rows) {
    table.representatives.push_back(DexterityTree::from_code(n, code));
    table.orbit_sizes.push_back(size);
  }
  return table;
}

}  // namespace

ClassTable brute_force_classes(std::size_t n, std::size_t max_depth) {
  check_brute_depth(n, max_depth);
  const TreeKernel kernel(n);
  const auto count = static_cast<std::int64_t>(kernel.tree_count());
  std::vector<std::atomic<std::uint32_t>> parent(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) parent[i].store(static_cast<std::uint32_t>(i));

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto code = static_cast<std::uint32_t>(i);
    for (std::size_t v = 0; v < kernel.internal_count(); ++v) {
      std::uint32_t next = 0;
      if (kernel.apply(code, v, next) && next > code) unite(parent, code, next);
    }
  }

  std::vector<std::uint32_t> root_of(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    root_of[i] = find_root(parent, static_cast<std::uint32_t>(i));
  }
  return table_from_partition(n, kernel, root_of);
}

ClassTable brute_force_classes_serial(std::size_t n, std::size_t max_depth) {
  check_brute_depth(n, max_depth);
  const auto paths = internal_paths(n);
  const std::uint64_t total = std::uint64_t{1} << ((std::size_t{1} << n) - 1);
  std::vector<bool> visited(total, false);
  struct Row {
    std::string repr;
    DexterityTree tree;
    std::uint64_t size;
  };
  std::vector<Row> rows;
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    visited[code] = true;
    DexterityTree start = DexterityTree::from_code(n, code);
    Row row{start.str(), start, 0};
    std::deque<DexterityTree> queue{start};
    while (!queue.empty()) {
      DexterityTree cur = std::move(queue.front());
      queue.pop_front();
      ++row.size;
      if (const auto s = cur.str(); s < row.repr) {
        row.repr = s;
        row.tree = cur;
      }
      for (const auto& p : paths) {
        if (!interchange_applicable(cur, p)) continue;
        DexterityTree next = tree_interchange(cur, p);
        const auto c = next.code();
        if (!visited[c]) {
          visited[c] = true;
          queue.push_back(std::move(next));
        }
      }
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.repr < b.repr; });
  ClassTable table;
  table.depth = n;
  table.class_count = rows.size();
  for (auto& r : rows) {
    table.representatives.push_back(std::move(r.tree));
    table.orbit_sizes.push_back(r.size);
  }
  return table;
}

BigCount class_count_recurrence(std::size_t n) {
  if (n < 1) throw DomainError("depth must be >= 1");
  BigCount count = 2;
  for (std::size_t m = 2; m <= n; ++m) {
    BigCount power = 1;
    power <<= ((std::size_t{1} << (m - 1)) - 1);
    count = count * count + power;
  }
  return count;
}

namespace {

// Image of leaf `x` (n branch bits, root branch most significant) under the
// automorphism with swap bits `g` over the heap-ordered internal nodes.
std::uint32_t act_on_leaf(std::uint32_t g, std::uint32_t x, std::size_t n) {
  std::uint32_t node = 0;
  std::uint32_t image = 0;
  for (std::size_t level = 0; level < n; ++level) {
    const std::uint32_t b = (x >> (n - 1 - level)) & 1U;
    const std::uint32_t s = (g >> node) & 1U;
    image = (image << 1) | (b ^ s);
    node = 2 * node + 1 + b;
  }
  return image;
}

bool is_involution(std::uint32_t g, std::size_t n) {
  const std::uint32_t leaves = 1U << n;
  for (std::uint32_t x = 0; x < leaves; ++x) {
    if (act_on_leaf(g, act_on_leaf(g, x, n), n) != x) return false;
  }
  return true;
}

}  // namespace

BigCount wreath_involutions(std::size_t n, std::size_t max_depth) {
  check_brute_depth(n, max_depth);
  const auto order = static_cast<std::int64_t>(std::uint64_t{1} << ((std::size_t{1} << n) - 1));
  std::int64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t g = 0; g < order; ++g) {
    if (is_involution(static_cast<std::uint32_t>(g), n)) ++count;
  }
  return BigCount(count);
}

BigCount wreath_involutions_serial(std::size_t n, std::size_t max_depth) {
  check_brute_depth(n, max_depth);
  const std::uint64_t order = std::uint64_t{1} << ((std::size_t{1} << n) - 1);
  std::uint64_t count = 0;
  for (std::uint64_t g = 0; g < order; ++g) {
    if (is_involution(static_cast<std::uint32_t>(g), n)) ++count;
  }
  return BigCount(count);
}

}  // namespace hadj
