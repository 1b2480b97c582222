#include "hadj/schema.hpp"

#include <algorithm>

#include "hadj/errors.hpp"

namespace hadj {

namespace {

std::string id_of(const std::string& x) { return "(id " + x + ")"; }
std::string comp(const std::string& r, const std::string& l) { return "(comp " + r + " " + l + ")"; }

std::string subscripted(const std::string& letter, const std::string& sub) {
  if (sub.empty()) return letter;
  if (sub.size() == 1) return letter + "_" + sub;
  return letter + "_{" + sub + "}";
}

std::size_t resolve_dimension(std::size_t k, std::size_t n, std::size_t dimension) {
  if (k < 1) throw DomainError("base level k must be at least 1");
  if (dimension == 0) return k + n;
  if (k + n > dimension) {
    throw DomainError("level overflow: k + n = " + std::to_string(k + n) + " exceeds N = " +
                      std::to_string(dimension));
  }
  return dimension;
}

SchemaRecord make_record(std::size_t level, std::string morphism, Side side, std::string unit,
                         std::string counit, std::pair<std::string, std::string> boundary) {
  SchemaRecord r;
  r.level = level;
  r.adjoint = morphism + (side == Side::L ? "^L" : "^R");
  r.morphism = std::move(morphism);
  r.side = side;
  r.unit = std::move(unit);
  r.counit = std::move(counit);
  r.source = std::move(boundary.first);
  r.target = std::move(boundary.second);
  return r;
}

// Reverses the one-sided path of heap index i, giving the name subscript.
std::string reversed_path(std::size_t i) {
  std::string out;
  while (i > 0) {
    out.push_back(i % 2 == 1 ? 'u' : 'c');
    i = (i - 1) / 2;
  }
  return out;  // node-to-root order
}

SchemaTower one_sided(const std::string& base, std::size_t k, const DexterityTree& t, std::size_t dimension) {
  const std::size_t n = t.depth();
  if (n > kMaxOneSidedDepth) {
    throw CapacityError("one-sided towers are generated up to depth " + std::to_string(kMaxOneSidedDepth));
  }
  SchemaTower tower;
  tower.base = base;
  tower.k = k;
  tower.depth = n;
  tower.dimension = resolve_dimension(k, n, dimension);
  tower.records.reserve(t.node_count());
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const std::string sub = reversed_path(i);
    std::size_t depth = 0;
    for (std::size_t j = i; j > 0; j = (j - 1) / 2) ++depth;
    std::string morphism;
    std::pair<std::string, std::string> boundary;
    if (i == 0) {
      morphism = base;
      boundary = {"src_" + base, "tgt_" + base};
    } else {
      const SchemaRecord& parent = tower.records[(i - 1) / 2];
      const bool unit_child = i % 2 == 1;
      morphism = unit_child ? parent.unit : parent.counit;
      boundary = unit_child ? parent.unit_boundary() : parent.counit_boundary();
    }
    tower.records.push_back(make_record(k + depth, morphism, t.labels()[i], subscripted("u", sub),
                                        subscripted("c", sub), std::move(boundary)));
  }
  return tower;
}

}  // namespace

std::string SchemaRecord::text() const {
  if (side == Side::R) return "(" + morphism + " -| " + adjoint + ", " + unit + ", " + counit + ")";
  return "(" + adjoint + " -| " + morphism + ", " + unit + ", " + counit + ")";
}

std::pair<std::string, std::string> SchemaRecord::unit_boundary() const {
  if (side == Side::R) return {id_of(source), comp(adjoint, morphism)};
  return {id_of(target), comp(morphism, adjoint)};
}

std::pair<std::string, std::string> SchemaRecord::counit_boundary() const {
  if (side == Side::R) return {comp(morphism, adjoint), id_of(target)};
  return {comp(adjoint, morphism), id_of(source)};
}

std::vector<std::size_t> SchemaTower::level_counts() const {
  std::vector<std::size_t> counts(depth, 0);
  for (const auto& r : records) ++counts[r.level - k];
  return counts;
}

std::string SchemaTower::path_of(std::size_t index) const {
  if (variant == SchemaVariant::OneSided) {
    std::string p = reversed_path(index);
    std::reverse(p.begin(), p.end());
    return p;
  }
  // Full towers: level ℓ occupies [2(4^ℓ - 1)/3, 2(4^(ℓ+1) - 1)/3).
  std::size_t level = 0;
  std::size_t start = 0;
  while (index >= start + (std::size_t{2} << (2 * level))) {
    start += std::size_t{2} << (2 * level);
    ++level;
  }
  std::size_t pos = index - start;  // record pos of its level; side = pos % 2
  std::vector<std::string> tokens;
  std::string out = (pos % 2 == 0) ? "L" : "R";
  while (level > 0) {
    const std::size_t parent = pos / 4;
    const std::size_t slot = pos % 4;
    const std::size_t parent_side = parent % 2;
    tokens.push_back(std::string(slot < 2 ? "u" : "c") + (parent_side == 0 ? "1" : "2"));
    pos = parent;
    --level;
  }
  std::string joined;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) joined += *it + ".";
  return joined + out;
}

SchemaTower generate_schema(const std::string& base, std::size_t k, const DexterityFunction& a,
                            std::size_t dimension) {
  if (a.length() > kMaxOneSidedDepth) {
    throw CapacityError("one-sided towers are generated up to depth " + std::to_string(kMaxOneSidedDepth));
  }
  SchemaTower tower = one_sided(base, k, tree_from_function(a), dimension);
  tower.function = a;
  return tower;
}

SchemaTower generate_schema(const std::string& base, std::size_t k, const DexterityTree& t,
                            std::size_t dimension) {
  SchemaTower tower = one_sided(base, k, t, dimension);
  tower.tree = t;
  return tower;
}

SchemaTower generate_full_schema(const std::string& base, std::size_t k, std::size_t n, std::size_t dimension) {
  if (n < 1) throw DomainError("tower depth must be at least 1");
  if (n > kMaxFullDepth) {
    throw CapacityError("full towers are generated up to depth " + std::to_string(kMaxFullDepth));
  }
  SchemaTower tower;
  tower.base = base;
  tower.k = k;
  tower.depth = n;
  tower.dimension = resolve_dimension(k, n, dimension);
  tower.variant = SchemaVariant::Full;
  tower.records.reserve(static_cast<std::size_t>(schema_total(n, SchemaVariant::Full)));

  // Name subscripts for the morphisms of the current level: "" at the root.
  struct Pending {
    std::string morphism;
    std::string tokens;  // node-to-root token string, e.g. "u1c2"
    std::pair<std::string, std::string> boundary;
  };
  std::vector<Pending> level{{base, "", {"src_" + base, "tgt_" + base}}};
  for (std::size_t depth = 0; depth < n; ++depth) {
    std::vector<Pending> next;
    next.reserve(level.size() * 4);
    const std::size_t first = tower.records.size();
    for (const Pending& p : level) {
      for (int side = 1; side <= 2; ++side) {
        const std::string idx = std::to_string(side);
        const std::string sub = p.tokens.empty() ? idx : "{" + idx + "," + p.tokens + "}";
        tower.records.push_back(make_record(k + depth, p.morphism, side == 1 ? Side::L : Side::R,
                                            "u_" + sub, "c_" + sub, p.boundary));
      }
    }
    if (depth + 1 < n) {
      for (std::size_t i = first; i < tower.records.size(); ++i) {
        const SchemaRecord& r = tower.records[i];
        const std::string idx = r.side == Side::L ? "1" : "2";
        const std::string& parent_tokens = level[(i - first) / 2].tokens;
        next.push_back({r.unit, "u" + idx + parent_tokens, r.unit_boundary()});
        next.push_back({r.counit, "c" + idx + parent_tokens, r.counit_boundary()});
      }
    }
    level = std::move(next);
  }
  return tower;
}

std::uint64_t schema_counts(std::size_t n, SchemaVariant variant, std::size_t offset) {
  if (n < 1 || offset >= n) {
    throw DomainError("level offset " + std::to_string(offset) + " outside 0.." +
                      (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
  }
  if (variant == SchemaVariant::OneSided) {
    if (offset > 63) throw CapacityError("count exceeds 64 bits");
    return std::uint64_t{1} << offset;
  }
  if (2 * offset + 1 > 63) throw CapacityError("count exceeds 64 bits");
  return std::uint64_t{1} << (2 * offset + 1);
}

std::uint64_t schema_total(std::size_t n, SchemaVariant variant) {
  if (n < 1) throw DomainError("tower depth must be at least 1");
  if (variant == SchemaVariant::OneSided) {
    if (n > 63) throw CapacityError("count exceeds 64 bits");
    return (std::uint64_t{1} << n) - 1;
  }
  if (n > 31) throw CapacityError("count exceeds 64 bits");
  return ((std::uint64_t{1} << (2 * n)) - 1) / 3 * 2;
}

namespace {

void require_one_sided(const SchemaTower& tower) {
  if (tower.variant != SchemaVariant::OneSided) {
    throw DomainError("interchange applies to one-sided towers only");
  }
}

// Record surgery at heap index v; children must exist and share a side.
void flip_at(std::vector<SchemaRecord>& recs, std::size_t v) {
  const std::size_t a = 2 * v + 1;
  const std::size_t b = 2 * v + 2;
  if (b >= recs.size()) throw DomainError("interchange at a leaf: no unit/counit data below");
  if (recs[a].side != recs[b].side) {
    throw DomainError("interchange needs the unit and counit adjunctions on the same side");
  }
  SchemaRecord& node = recs[v];
  SchemaRecord unit_child = recs[a];
  SchemaRecord counit_child = recs[b];
  // (l ⊣ r, u, c) becomes (r ⊣ l, adj(c), adj(u)).
  node.side = negate(node.side);
  node.unit = counit_child.adjoint;
  node.counit = unit_child.adjoint;
  auto reread = [](SchemaRecord r) {
    std::swap(r.morphism, r.adjoint);
    std::swap(r.source, r.target);
    r.side = negate(r.side);
    return r;
  };
  recs[a] = reread(counit_child);
  recs[b] = reread(unit_child);
  // Swap the subtrees below the two children, level by level.
  std::size_t lo_a = a;
  std::size_t lo_b = b;
  std::size_t width = 1;
  for (;;) {
    lo_a = 2 * lo_a + 1;
    lo_b = 2 * lo_b + 1;
    width *= 2;
    if (lo_b >= recs.size()) break;
    std::swap_ranges(recs.begin() + static_cast<std::ptrdiff_t>(lo_a),
                     recs.begin() + static_cast<std::ptrdiff_t>(lo_a + width),
                     recs.begin() + static_cast<std::ptrdiff_t>(lo_b));
  }
}

}  // namespace

SchemaTower interchange_schema(const SchemaTower& tower, const TreePath& node) {
  require_one_sided(tower);
  const DexterityTree source = tower.tree ? *tower.tree : tree_from_function(*tower.function);
  if (node.size() + 1 >= tower.depth) throw DomainError("interchange at a leaf: no unit/counit data below");
  DexterityTree flipped = tree_interchange(source, node);
  SchemaTower out = tower;
  flip_at(out.records, DexterityTree::index_of(node));
  out.function.reset();
  out.tree = std::move(flipped);
  return out;
}

SchemaTower interchange_schema(const SchemaTower& tower, std::size_t level) {
  require_one_sided(tower);
  if (level < 1 || level + 1 > tower.depth) {
    throw DomainError("interchange level " + std::to_string(level) + " outside 1.." +
                      std::to_string(tower.depth == 0 ? 0 : tower.depth - 1));
  }
  SchemaTower out = tower;
  const std::size_t first = (std::size_t{1} << (level - 1)) - 1;
  const std::size_t last = (std::size_t{1} << level) - 1;
  for (std::size_t v = first; v < last; ++v) flip_at(out.records, v);
  if (tower.function) {
    out.function = interchange(*tower.function, level);
  } else {
    DexterityTree t = *tower.tree;
    for (const TreePath& p : internal_paths(tower.depth)) {
      if (p.size() == level - 1) t = tree_interchange(t, p);
    }
    out.tree = std::move(t);
  }
  return out;
}

void check_tower(const SchemaTower& tower) {
  const auto& recs = tower.records;
  const std::uint64_t expected = schema_total(tower.depth, tower.variant);
  if (recs.size() != expected) {
    throw DomainError("tower holds " + std::to_string(recs.size()) + " records, expected " +
                      std::to_string(expected));
  }
  if (tower.k + tower.depth > tower.dimension) throw DomainError("tower exceeds the ambient dimension");
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError("ill-typed tower: " + what);
  };
  if (tower.variant == SchemaVariant::OneSided) {
    const DexterityTree source = tower.tree ? *tower.tree : tree_from_function(*tower.function);
    for (std::size_t i = 0; i < recs.size(); ++i) {
      expect(recs[i].side == source.labels()[i], "record " + recs[i].text() + " has the wrong side");
      if (i == 0) {
        expect(recs[0].level == tower.k, "root level");
        continue;
      }
      const SchemaRecord& parent = recs[(i - 1) / 2];
      const bool unit_child = i % 2 == 1;
      // After an interchange the child may be the adjoint of the parent's cell.
      const std::string& cell = unit_child ? parent.unit : parent.counit;
      const auto boundary = unit_child ? parent.unit_boundary() : parent.counit_boundary();
      expect(recs[i].level == parent.level + 1, "level of " + recs[i].text());
      expect(recs[i].morphism == cell, recs[i].text() + " is not about " + cell);
      expect(std::pair{recs[i].source, recs[i].target} == boundary,
             "boundary of " + recs[i].morphism + " does not match " + parent.text());
    }
    return;
  }
  std::size_t start = 0;
  for (std::size_t level = 0; level < tower.depth; ++level) {
    const std::size_t width = std::size_t{2} << (2 * level);
    for (std::size_t pos = 0; pos < width; ++pos) {
      const SchemaRecord& r = recs[start + pos];
      expect(r.level == tower.k + level, "level of " + r.text());
      expect(r.side == (pos % 2 == 0 ? Side::L : Side::R), "side of " + r.text());
      if (level == 0) continue;
      const SchemaRecord& parent = recs[start - width / 4 + pos / 4];
      const bool unit_child = (pos % 4) < 2;
      const auto boundary = unit_child ? parent.unit_boundary() : parent.counit_boundary();
      expect(r.morphism == (unit_child ? parent.unit : parent.counit), r.text() + " is not about its parent");
      expect(std::pair{r.source, r.target} == boundary, "boundary of " + r.morphism);
    }
    start += width;
  }
}

}  // namespace hadj
