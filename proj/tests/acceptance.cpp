// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fact_scenarios.hpp"
#include "hadj/adjunction.hpp"
#include "hadj/cli.hpp"
#include "hadj/dexterity.hpp"
#include "hadj/fact_base.hpp"
#include "hadj/opposite.hpp"
#include "hadj/random_context.hpp"
#include "hadj/schema.hpp"
#include "hadj/tree_enum.hpp"

using namespace hadj;

namespace {

// Pinned budgets.
constexpr double kTreeCountSeconds = 60.0;
constexpr double kTwoClassSeconds = 30.0;
constexpr std::size_t kZigzagFuel = 10000;
constexpr std::uint64_t kCorpusSeeds = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  if (cli::run(args, out, err) != 0) return "exit!=0: " + err.str();
  std::string s = out.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Outcome tree_counts() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::string> expected{"2", "6", "44", "2064"};
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::string arg = std::to_string(n);
    const std::string brute = cli({"tree-brute", arg});
    const std::string rec = cli({"tree-classes", arg});
    const std::string wreath = cli({"wreath", arg});
    if (brute != expected[n - 1] || rec != expected[n - 1] || wreath != expected[n - 1]) {
      o.fail("n=" + arg + ": brute " + brute + ", recurrence " + rec + ", wreath " + wreath);
    }
  }
  const std::string five = cli({"tree-classes", "5"});
  if (five != "4292864") o.fail("tree-classes 5 = " + five);
  const double secs = seconds_since(t0);
  if (secs >= kTreeCountSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "2, 6, 44, 2064 by all three methods; 4292864 at n=5 (" + std::to_string(secs) + " s)";
  return o;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Outcome two_classes() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto all = all_functions(n);
    std::set<Parity> classes;
    for (const auto& a : all) classes.insert(parity(a));
    if (classes.size() != 2) o.fail("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");

    if (n <= 8) {
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < all.size(); ++i) index[all[i].str()] = i;
      UnionFind uf(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 1; j < n; ++j) uf.join(i, index.at(interchange(all[i], j).str()));
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t k = i + 1; k < all.size(); ++k) {
          const bool reach = uf.find(i) == uf.find(k);
          const bool same = parity_pair(all[i], all[k]) == PairKind::Parity;
          if (reach != same) o.fail("reachability differs from parity at " + all[i].str() + ", " + all[k].str());
        }
      }
    }

    for (const auto& a : all) {
      for (const auto& b : all) {
        if (parity_pair(a, b) != PairKind::Parity) continue;
        const RewriteTrace w = normalize_witness(a, b);
        ++pairs;
        if (w.size() > n - 1 || !(replay(a, w) == b)) {
          o.fail("bad witness for " + a.str() + " -> " + b.str());
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kTwoClassSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) {
    o.detail = "n=1..10, " + std::to_string(pairs) + " witnesses replayed (" + std::to_string(secs) + " s)";
  }
  return o;
}

Outcome opposite_examples() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t N = n + 1;
    const auto r = constant(Side::R, n);
    std::string ids(N, 'i');
    std::string last = ids;
    last[n] = 'o';
    std::string even = ids;
    for (std::size_t j = 2; j <= n + 1; j += 2) even[j - 1] = 'o';
    const auto a = op_for_pair(r, r, 1, N);
    const auto b = op_for_pair(r, odd_function(n), 1, N);
    const auto c = op_for_pair(r, constant(Side::L, n), 1, N);
    if (a.str() != ids) o.fail("n=" + std::to_string(n) + " (r,r): " + a.str());
    if (b.str() != last) o.fail("n=" + std::to_string(n) + " (r,odd): " + b.str());
    if (c.str() != even) o.fail("n=" + std::to_string(n) + " (r,l): " + c.str());
    if (!(c == build_opposite({OppositeVariant::Kind::EvenOp}, N)) ||
        !(negate_opposite(c) == build_opposite({OppositeVariant::Kind::OddOp}, N))) {
      o.fail("n=" + std::to_string(n) + ": even op identification");
    }
  }
  if (o.pass) o.detail = "n=1..8, N=n+1, three values each, even op identified";
  return o;
}

Outcome schema_counts_check() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const SchemaTower one = generate_schema("f", 1, constant(Side::R, n));
    const SchemaTower full = generate_full_schema("f", 1, n);
    if (one.records.size() != (std::uint64_t{1} << n) - 1) o.fail("one-sided total at n=" + std::to_string(n));
    if (3 * full.records.size() != 2 * ((std::uint64_t{1} << (2 * n)) - 1)) {
      o.fail("full total at n=" + std::to_string(n));
    }
    const auto a = one.level_counts();
    const auto b = full.level_counts();
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] != (std::uint64_t{1} << j)) o.fail("one-sided level " + std::to_string(j));
      if (b[j] != (std::uint64_t{1} << (2 * j + 1))) o.fail("full level " + std::to_string(j));
    }
  }
  if (o.pass) o.detail = "n=1..8, totals and per-level counts exact";
  return o;
}

Outcome zigzags() {
  Outcome o;
  std::size_t verified = 0;
  std::size_t not_reduced = 0;
  std::size_t duals = 0;
  for (std::uint64_t seed = 0; seed < kCorpusSeeds; ++seed) {
    const RandomCorpus corpus = random_corpus(seed);
    for (const auto& r : corpus.derived) {
      const ZigzagReport rep = verify_zigzag(r, kZigzagFuel);
      if (rep.outcome == ZigzagOutcome::Verified) {
        ++verified;
      } else {
        ++not_reduced;
        o.fail("seed " + std::to_string(seed) + " " + r.name + ": " + to_string(rep.outcome));
      }
    }
    std::vector<AdjunctionRecord> all = corpus.axioms;
    all.insert(all.end(), corpus.derived.begin(), corpus.derived.end());
    for (const auto& r : all) {
      for (Duality d : {Duality::Op, Duality::Co, Duality::Coop}) {
        if (!(dualize(dualize(r, d), d) == r)) o.fail("seed " + std::to_string(seed) + ": double dual of " + r.name);
      }
      if (!(dualize(r, Duality::Coop) == dualize(dualize(r, Duality::Co), Duality::Op))) {
        o.fail("seed " + std::to_string(seed) + ": coop != op after co for " + r.name);
      }
      ++duals;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kCorpusSeeds) + " seeds, " + std::to_string(verified) + " Verified, " +
               std::to_string(not_reduced) + " NotReduced, " + std::to_string(duals) + " records dualized";
  }
  return o;
}

Outcome inference() {
  Outcome o;
  const auto suite = scenarios::all();
  if (suite.size() < 12) o.fail("only " + std::to_string(suite.size()) + " scenarios");
  for (const auto& s : suite) {
    if (!(saturate(scenarios::make(s.input)) == scenarios::expected(s))) o.fail("closure differs: " + s.name);
  }
  if (o.pass) o.detail = std::to_string(suite.size()) + " scenarios, exact closures";
  return o;
}

Outcome orbits() {
  Outcome o;
  std::vector<std::uint64_t> sizes = brute_force_classes(2).orbit_sizes;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  const std::vector<std::uint64_t> expected{2, 2, 1, 1, 1, 1};
  if (sizes != expected) {
    std::string got;
    for (auto s : sizes) got += std::to_string(s) + " ";
    o.fail("orbit sizes " + got);
  } else {
    o.detail = "{2, 2, 1, 1, 1, 1}";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 tree counts", tree_counts},
      {"2 two parity classes", two_classes},
      {"3 opposite-function examples", opposite_examples},
      {"4 schema count formulas", schema_counts_check},
      {"5 zig-zag verification and duals", zigzags},
      {"6 inference closures", inference},
      {"7 depth-2 orbit structure", orbits},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << '\n';
    if (!o.pass) ++failed;
  }
  return failed;
}
