#include "hadj/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "hadj/errors.hpp"

namespace hadj {

std::optional<std::pair<Layer, Layer>> commute(const Layer& x, const Layer& y) {
  if (y.offset + y.in_len() <= x.offset) {
    Layer x2 = x;
    x2.offset = x.offset - y.in_len() + y.out_len();
    return std::pair{y, x2};
  }
  if (y.offset >= x.offset + x.out_len()) {
    Layer y2 = y;
    y2.offset = y.offset - x.out_len() + x.in_len();
    return std::pair{y2, x};
  }
  return std::nullopt;
}

namespace {

auto rank(const Layer& l) {
  return std::tie(l.offset, l.input, l.output, l.gen, l.inverse);
}

// Every result of commute, plus the mirror reading when a layer with empty
// output is followed by one with empty input at the same gap: nothing
// separates the two, so either may sit on the left.
std::vector<std::pair<Layer, Layer>> commutations(const Layer& x, const Layer& y) {
  std::vector<std::pair<Layer, Layer>> out;
  if (auto c = commute(x, y)) out.push_back(*c);
  if (x.out_len() == 0 && y.in_len() == 0 && y.offset == x.offset) {
    Layer y2 = y;
    y2.offset = x.offset + x.in_len();
    out.emplace_back(y2, x);
  }
  return out;
}

// Every arrangement of s that brings s[k] to index `begin` by adjacent swaps.
void fronts(std::vector<Layer>& s, std::size_t begin, std::size_t k, std::vector<std::vector<Layer>>& out) {
  if (k == begin) {
    out.push_back(s);
    return;
  }
  for (const auto& [first, second] : commutations(s[k - 1], s[k])) {
    const Layer saved_first = s[k - 1];
    const Layer saved_second = s[k];
    s[k - 1] = first;
    s[k] = second;
    fronts(s, begin, k - 1, out);
    s[k - 1] = saved_first;
    s[k] = saved_second;
  }
}

// Moves s[k] to index a, just ahead of the layer at a, pulling blockers ahead
// recursively. On success `a` tracks the original layer's new index.
bool pull_before(std::vector<Layer>& s, std::size_t& a, std::size_t k, std::size_t& swaps) {
  std::size_t pos = k;
  while (pos > a) {
    if (auto c = commute(s[pos - 1], s[pos])) {
      s[pos - 1] = c->first;
      s[pos] = c->second;
      --pos;
      ++swaps;
      continue;
    }
    if (pos - 1 == a) return false;
    if (!pull_before(s, a, pos - 1, swaps)) return false;
  }
  ++a;
  return true;
}

// Rearranges s so that the layers at indices a < b become adjacent, keeping
// their relative order. Returns the new index of the first one.
std::optional<std::size_t> make_adjacent(std::vector<Layer>& s, std::size_t a, std::size_t b,
                                         std::size_t& swaps) {
  while (b > a + 1) {
    const std::size_t k = b - 1;
    if (auto c = commute(s[k], s[b])) {
      s[k] = c->first;
      s[b] = c->second;
      --b;
      ++swaps;
      continue;
    }
    if (!pull_before(s, a, k, swaps)) return std::nullopt;
  }
  return a;
}

enum class Pattern { None, Axiom, Inverse };

struct Candidate {
  Pattern pattern = Pattern::None;
  const AxiomRule* axiom = nullptr;
};

Candidate classify(const Layer& first, const Layer& second, const FormalContext& ctx) {
  if (first.gen == second.gen && first.inverse != second.inverse) return {Pattern::Inverse, nullptr};
  if (first.inverse || second.inverse) return {};
  const AxiomRule* ax = ctx.axiom_with_unit(first.gen);
  if (ax != nullptr && ax->counit == second.gen) return {Pattern::Axiom, ax};
  return {};
}

bool contracts(const Layer& first, const Layer& second, const Candidate& c) {
  if (c.pattern == Pattern::Inverse) return first.offset == second.offset;
  const std::size_t p = c.axiom->left.word.size();
  const std::size_t q = c.axiom->right.word.size();
  const bool zig = first.offset >= p && second.offset == first.offset - p;
  const bool zag = second.offset == first.offset + q;
  return zig || zag;
}

// One contraction, or false if none applies.
bool contract_once(std::vector<Layer>& s, const FormalContext& ctx, std::size_t& steps) {
  for (std::size_t j = 1; j < s.size(); ++j) {
    for (std::size_t i = j; i-- > 0;) {
      Candidate cand = classify(s[i], s[j], ctx);
      if (cand.pattern == Pattern::None) continue;
      std::vector<Layer> trial = s;
      std::size_t swaps = 0;
      auto a = make_adjacent(trial, i, j, swaps);
      if (!a || !contracts(trial[*a], trial[*a + 1], cand)) continue;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(*a),
                  trial.begin() + static_cast<std::ptrdiff_t>(*a + 2));
      s = std::move(trial);
      steps += swaps + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

bool rank_less(const Layer& a, const Layer& b) { return rank(a) < rank(b); }

// Greedy least-rank-first order of s[begin..]. Several arrangements can tie
// for the front (identical layers, or a cap and a cup at one gap) and leave
// different remainders, so ties branch and the least completion wins.
void least_order(std::vector<Layer>& s, std::size_t begin, std::size_t& count) {
  for (; begin < s.size(); ++begin) {
    std::vector<std::pair<std::vector<Layer>, std::size_t>> tied;
    for (std::size_t k = begin; k < s.size(); ++k) {
      std::vector<std::vector<Layer>> options;
      fronts(s, begin, k, options);
      for (auto& o : options) {
        if (!tied.empty() && rank_less(tied.front().first[begin], o[begin])) continue;
        if (!tied.empty() && rank_less(o[begin], tied.front().first[begin])) tied.clear();
        bool seen = false;
        for (const auto& t : tied) seen = seen || t.first == o;
        if (seen) continue;
        tied.emplace_back(std::move(o), k - begin);
      }
    }
    if (tied.size() == 1) {
      s = std::move(tied.front().first);
      count += tied.front().second;
      continue;
    }
    std::vector<Layer> best;
    std::size_t best_count = 0;
    for (auto& [trial, moved] : tied) {
      std::size_t c = count + moved;
      least_order(trial, begin + 1, c);
      if (best.empty() || std::lexicographical_compare(trial.begin(), trial.end(), best.begin(), best.end(),
                                                       rank_less)) {
        best = std::move(trial);
        best_count = c;
      }
    }
    s = std::move(best);
    count = best_count;
    return;
  }
}

}  // namespace

namespace {

// A layer order as (original index, current offset) pairs; generators and
// words never change under interchange, only positions do.
struct Placed {
  std::uint32_t id;
  std::size_t offset;
  friend auto operator<=>(const Placed&, const Placed&) = default;
};
using Arrangement = std::vector<Placed>;

// Exhaustive search over the interchange class, least arrangement first.
// Returns false when the class outgrows `limit`.
bool least_in_class(const std::vector<Layer>& base, std::size_t limit, std::vector<Layer>& best_out,
                    std::size_t& distance) {
  auto layer_at = [&](const Placed& p) {
    Layer l = base[p.id];
    l.offset = p.offset;
    return l;
  };
  auto less = [&](const Arrangement& a, const Arrangement& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Layer x = layer_at(a[i]);
      const Layer y = layer_at(b[i]);
      if (rank_less(x, y)) return true;
      if (rank_less(y, x)) return false;
    }
    return false;
  };
  Arrangement start;
  for (std::uint32_t i = 0; i < base.size(); ++i) start.push_back({i, base[i].offset});
  std::map<Arrangement, std::size_t> seen{{start, 0}};
  std::deque<Arrangement> queue{start};
  Arrangement best = start;
  std::size_t best_distance = 0;
  while (!queue.empty()) {
    Arrangement cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t d = seen.at(cur);
    if (less(cur, best)) {
      best = cur;
      best_distance = d;
    }
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      for (const auto& [first, second] : commutations(layer_at(cur[i]), layer_at(cur[i + 1]))) {
        Arrangement next = cur;
        next[i] = {cur[i + 1].id, first.offset};
        next[i + 1] = {cur[i].id, second.offset};
        if (seen.emplace(next, d + 1).second) {
          if (seen.size() > limit) return false;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  best_out.clear();
  for (const auto& p : best) best_out.push_back(layer_at(p));
  distance = best_distance;
  return true;
}

}  // namespace

TwoCell interchange_normal_form(const TwoCell& cell, std::size_t* swaps) {
  TwoCell out = cell;
  std::size_t count = 0;
  std::vector<Layer> exact;
  if (least_in_class(cell.layers, kMaxInterchangeClass, exact, count)) {
    out.layers = std::move(exact);
  } else {
    count = 0;
    least_order(out.layers, 0, count);
  }
  if (swaps != nullptr) *swaps = count;
  return out;
}

Reduction reduce(const TwoCell& cell, const FormalContext& ctx, std::size_t fuel) {
  Reduction r{cell, 0, 0, false};
  while (r.steps < fuel && contract_once(r.cell.layers, ctx, r.steps)) ++r.contractions;
  if (r.steps >= fuel) {
    // Out of budget: a further contraction might still exist.
    std::vector<Layer> probe = r.cell.layers;
    std::size_t ignored = 0;
    if (contract_once(probe, ctx, ignored)) r.exhausted = true;
  }
  std::size_t swaps = 0;
  r.cell = interchange_normal_form(r.cell, &swaps);
  r.steps += swaps;
  if (r.steps > fuel) r.exhausted = true;
  return r;
}

Comparison compare_reduced(const TwoCell& lhs, const TwoCell& rhs, const FormalContext& ctx,
                           std::size_t fuel) {
  Reduction a = reduce(lhs, ctx, fuel);
  const std::size_t left_over = a.steps >= fuel ? 0 : fuel - a.steps;
  Reduction b = reduce(rhs, ctx, left_over);
  Comparison out;
  out.steps = a.steps + b.steps;
  out.exhausted = a.exhausted || b.exhausted;
  out.lhs = std::move(a.cell);
  out.rhs = std::move(b.cell);
  out.equal = !out.exhausted && out.lhs == out.rhs;
  return out;
}

}  // namespace hadj
