#include "hadj/random_context.hpp"

#include <string>

#include "hadj/errors.hpp"

namespace hadj {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(std::mt19937_64& rng) { return pick(rng, 2) == 1; }

std::string X(std::size_t i) { return "X" + std::to_string(i); }

// Object at gap p of a word: between word[p-1] and word[p].
std::string gap_object(const OneCell& w, std::size_t p, const FormalContext& ctx) {
  if (p == w.word.size()) return w.source;
  return ctx.find_morphism(w.word[p])->target;
}

OneCell slice(const OneCell& w, std::size_t from, std::size_t to, const FormalContext& ctx) {
  OneCell out{{w.word.begin() + static_cast<std::ptrdiff_t>(from), w.word.begin() + static_cast<std::ptrdiff_t>(to)},
              gap_object(w, to, ctx), gap_object(w, from, ctx)};
  return out;
}

class CorpusBuilder {
 public:
  CorpusBuilder(std::uint64_t seed) : rng_(seed), ctx_(std::make_shared<FormalContext>()) {}

  RandomCorpus build() {
    const std::size_t m = 2 + pick(rng_, 3);  // links X_{i-1} -> X_i
    for (std::size_t i = 0; i <= m; ++i) ctx_->add_object(X(i));
    for (std::size_t i = 1; i <= m; ++i) declare_link(i);
    RandomCorpus out;
    out.context = ctx_;
    for (const auto& a : ctx_->axioms()) out.axioms.push_back(axiom_record(ctx_, a.name));

    // Composites of left-adjoint axioms run up the chain, of right-adjoint
    // axioms down it.
    for (int rep = 0; rep < 3; ++rep) out.derived.push_back(random_composite(out.axioms, m));
    for (int rep = 0; rep < 3; ++rep) {
      const AdjunctionRecord& base = out.axioms[pick(rng_, out.axioms.size())];
      out.derived.push_back(random_transport(base));
    }
    out.derived.push_back(random_transport(out.derived[pick(rng_, 3)]));
    const AdjunctionRecord moved = random_transport(chain(out.axioms, true, 1, 1));
    out.derived.push_back(compose_adjunctions(moved, chain(out.axioms, true, 2, 2)));
    return out;
  }

 private:
  void declare_link(std::size_t i) {
    const std::string s = std::to_string(i);
    const std::string a = X(i - 1);
    const std::string b = X(i);
    ctx_->add_morphism("f" + s, a, b);
    ctx_->add_morphism("f" + s + "^L", b, a);
    ctx_->add_morphism("f" + s + "^R", b, a);
    const OneCell f{{"f" + s}, a, b};
    const OneCell fl{{"f" + s + "^L"}, b, a};
    const OneCell fr{{"f" + s + "^R"}, b, a};
    // f^L ⊣ f: unit id_b => f f^L, counit f^L f => id_a.
    ctx_->add_cell("u" + s, OneCell{{}, b, b}, concat(f, fl));
    ctx_->add_cell("c" + s, concat(fl, f), OneCell{{}, a, a});
    ctx_->add_axiom(AxiomRule{"L" + s, fl, f, "u" + s, "c" + s});
    // f ⊣ f^R: unit id_a => f^R f, counit f f^R => id_b.
    ctx_->add_cell("v" + s, OneCell{{}, a, a}, concat(fr, f));
    ctx_->add_cell("e" + s, concat(f, fr), OneCell{{}, b, b});
    ctx_->add_axiom(AxiomRule{"R" + s, f, fr, "v" + s, "e" + s});
  }

  // Composite over links lo..hi with a random bracketing.
  AdjunctionRecord chain(const std::vector<AdjunctionRecord>& axioms, bool left_kind, std::size_t lo,
                         std::size_t hi) {
    if (lo == hi) {
      const std::string name = (left_kind ? "L" : "R") + std::to_string(lo);
      for (const auto& a : axioms) {
        if (a.name == name) return a;
      }
      throw DomainError("missing axiom " + name);
    }
    const std::size_t split = lo + pick(rng_, hi - lo);
    AdjunctionRecord low = chain(axioms, left_kind, lo, split);
    AdjunctionRecord high = chain(axioms, left_kind, split + 1, hi);
    // Left-adjoint records have right adjoints f_i running up the chain.
    return left_kind ? compose_adjunctions(low, high) : compose_adjunctions(high, low);
  }

  AdjunctionRecord random_composite(const std::vector<AdjunctionRecord>& axioms, std::size_t m) {
    const std::size_t len = 2 + pick(rng_, m - 1);
    const std::size_t lo = 1 + pick(rng_, m - len + 1);
    return chain(axioms, coin(rng_), lo, lo + len - 1);
  }

  // An invertible 2-cell from `from` to a fresh parallel 1-cell, sometimes
  // through an intermediate fresh 1-cell, sometimes the identity.
  Cell fresh_iso(const OneCell& from) {
    const std::size_t mode = pick(rng_, 4);
    if (mode == 0) return Cell::identity(to_term(from));
    const std::string tag = std::to_string(++fresh_);
    auto fresh_cell = [&](const std::string& name) {
      ctx_->add_morphism(name, from.source, from.target);
      return OneCell{{name}, from.source, from.target};
    };
    if (mode == 1) {
      const OneCell mid = fresh_cell("p" + tag);
      const OneCell end = fresh_cell("q" + tag);
      ctx_->add_cell("i" + tag, from, mid, true);
      ctx_->add_cell("j" + tag, mid, end, true);
      return Cell::vcomp({Cell::atom("j" + tag), Cell::atom("i" + tag)});
    }
    const OneCell end = fresh_cell("q" + tag);
    ctx_->add_cell("i" + tag, from, end, true);
    return Cell::atom("i" + tag);
  }

  AdjunctionRecord random_transport(const AdjunctionRecord& a) {
    const TypedRecord t = type_check(a);
    Cell mu = fresh_iso(t.left);
    Cell nu = fresh_iso(t.right);
    return transport(a, mu, nu);
  }

  std::mt19937_64 rng_;
  std::shared_ptr<FormalContext> ctx_;
  std::size_t fresh_ = 0;
};

}  // namespace

RandomCorpus random_corpus(std::uint64_t seed) { return CorpusBuilder(seed).build(); }

TwoCell random_two_cell(const FormalContext& ctx, const OneCell& source, std::size_t layers,
                        std::mt19937_64& rng) {
  TwoCell cell = identity_two_cell(source);
  for (std::size_t step = 0; step < layers; ++step) {
    const OneCell& w = cell.target;
    std::vector<Layer> options;
    for (const auto& [name, gen] : ctx.cells()) {
      for (bool inv : {false, true}) {
        if (inv && !gen.invertible) continue;
        const OneCell& in = inv ? gen.target : gen.source;
        const OneCell& out = inv ? gen.source : gen.target;
        if (in.word.size() > w.word.size()) continue;
        for (std::size_t p = 0; p + in.word.size() <= w.word.size(); ++p) {
          if (!std::equal(in.word.begin(), in.word.end(), w.word.begin() + static_cast<std::ptrdiff_t>(p))) continue;
          if (in.word.empty() && gap_object(w, p, ctx) != in.source) continue;
          options.push_back(Layer{name, inv, p, in.word, out.word});
        }
      }
    }
    if (options.empty()) break;
    const Layer l = options[pick(rng, options.size())];
    const OneCell prefix = slice(w, 0, l.offset, ctx);
    const OneCell suffix = slice(w, l.offset + l.in_len(), w.word.size(), ctx);
    const CellGen& gen = *ctx.find_cell(l.gen);
    TwoCell atom{l.inverse ? gen.target : gen.source, l.inverse ? gen.source : gen.target,
                 {Layer{l.gen, l.inverse, 0, l.input, l.output}}};
    cell = vertical(whisker(prefix, atom, suffix), cell);
  }
  return cell;
}

namespace {

Cell one_cell_term(const OneCell& w, std::mt19937_64& rng) {
  if (w.word.size() <= 1 || pick(rng, 3) == 0) {
    if (!w.word.empty() && !w.source.empty() && pick(rng, 4) == 0) return Cell::hcomp({to_term(w), Cell::identity(Cell::atom(w.source))});
    return to_term(w);
  }
  const std::size_t cut = 1 + pick(rng, w.word.size() - 1);
  OneCell a{{w.word.begin(), w.word.begin() + static_cast<std::ptrdiff_t>(cut)}, "", w.target};
  OneCell b{{w.word.begin() + static_cast<std::ptrdiff_t>(cut), w.word.end()}, w.source, ""};
  // Interior objects are not needed: both halves are nonempty words.
  return Cell::hcomp({one_cell_term(a, rng), one_cell_term(b, rng)});
}

Cell layer_term(const OneCell& before, const Layer& l, const FormalContext& ctx, std::mt19937_64& rng) {
  Cell g = Cell::atom(l.gen);
  if (l.inverse) g = Cell::inverse(g);
  const OneCell prefix = slice(before, 0, l.offset, ctx);
  const OneCell suffix = slice(before, l.offset + l.in_len(), before.word.size(), ctx);
  switch (pick(rng, 3)) {
    case 0:
      return Cell::whisker(one_cell_term(prefix, rng), g, one_cell_term(suffix, rng));
    case 1: {
      std::vector<Cell> parts;
      if (!prefix.word.empty() || coin(rng)) parts.push_back(one_cell_term(prefix, rng));
      parts.push_back(g);
      if (!suffix.word.empty() || coin(rng)) parts.push_back(one_cell_term(suffix, rng));
      return Cell::hcomp(std::move(parts));
    }
    default:
      return Cell::hcomp({Cell::hcomp({one_cell_term(prefix, rng), g}), one_cell_term(suffix, rng)});
  }
}

Cell group_layers(const std::vector<Cell>& steps, std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  // steps[lo..hi) in application order; vcomp lists the last one first.
  if (hi - lo == 1) {
    if (pick(rng, 5) == 0) return Cell::vcomp({steps[lo]});
    return steps[lo];
  }
  if (coin(rng)) {
    std::vector<Cell> flat(steps.rbegin() + static_cast<std::ptrdiff_t>(steps.size() - hi),
                           steps.rbegin() + static_cast<std::ptrdiff_t>(steps.size() - lo));
    return Cell::vcomp(std::move(flat));
  }
  const std::size_t cut = lo + 1 + pick(rng, hi - lo - 1);
  return Cell::vcomp({group_layers(steps, cut, hi, rng), group_layers(steps, lo, cut, rng)});
}

}  // namespace

Cell random_presentation(const TwoCell& cell, const FormalContext& ctx, std::mt19937_64& rng) {
  if (cell.layers.empty()) return Cell::identity(one_cell_term(cell.source, rng));
  std::vector<Cell> steps;
  OneCell word = cell.source;
  for (const Layer& l : cell.layers) {
    steps.push_back(layer_term(word, l, ctx, rng));
    auto first = word.word.begin() + static_cast<std::ptrdiff_t>(l.offset);
    word.word.erase(first, first + static_cast<std::ptrdiff_t>(l.in_len()));
    word.word.insert(word.word.begin() + static_cast<std::ptrdiff_t>(l.offset), l.output.begin(), l.output.end());
  }
  if (coin(rng)) steps.push_back(Cell::identity(one_cell_term(cell.target, rng)));
  if (coin(rng)) steps.insert(steps.begin(), Cell::identity(one_cell_term(cell.source, rng)));
  return group_layers(steps, 0, steps.size(), rng);
}

TwoCell random_interchange(const TwoCell& cell, std::size_t swaps, std::mt19937_64& rng) {
  TwoCell out = cell;
  if (out.layers.size() < 2) return out;
  for (std::size_t s = 0; s < swaps; ++s) {
    const std::size_t i = pick(rng, out.layers.size() - 1);
    if (auto c = commute(out.layers[i], out.layers[i + 1])) {
      out.layers[i] = c->first;
      out.layers[i + 1] = c->second;
    }
  }
  return out;
}

}  // namespace hadj
