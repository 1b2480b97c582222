#include "hadj/adjunction.hpp"

#include "hadj/errors.hpp"

namespace hadj {

const char* to_string(Witness w) noexcept {
  switch (w) {
    case Witness::Axiom: return "Axiom";
    case Witness::Verified: return "Verified";
    case Witness::Unverified: return "Unverified";
  }
  return "?";
}

const char* to_string(ZigzagOutcome o) noexcept {
  switch (o) {
    case ZigzagOutcome::Verified: return "Verified";
    case ZigzagOutcome::NotReduced: return "NotReduced";
    case ZigzagOutcome::TypeError: return "TypeError";
  }
  return "?";
}

bool operator==(const AdjunctionRecord& a, const AdjunctionRecord& b) {
  const bool same_ctx = a.context == b.context || (a.context && b.context && *a.context == *b.context);
  return same_ctx && a.name == b.name && a.left == b.left && a.right == b.right && a.unit == b.unit &&
         a.counit == b.counit && a.status == b.status;
}

namespace {

const FormalContext& context_of(const AdjunctionRecord& a) {
  if (!a.context) throw DomainError("adjunction '" + a.name + "' has no context");
  return *a.context;
}

}  // namespace

AdjunctionRecord axiom_record(std::shared_ptr<const FormalContext> ctx, const std::string& name) {
  const AxiomRule* rule = ctx->find_axiom(name);
  if (rule == nullptr) throw DomainError("no axiom named '" + name + "'");
  return AdjunctionRecord{name,
                          to_term(rule->left),
                          to_term(rule->right),
                          Cell::atom(rule->unit),
                          Cell::atom(rule->counit),
                          Witness::Axiom,
                          std::move(ctx)};
}

TypedRecord type_check(const AdjunctionRecord& a) {
  const FormalContext& ctx = context_of(a);
  TypedRecord t{interpret_one_cell(a.left, ctx), interpret_one_cell(a.right, ctx),
                interpret_two_cell(a.unit, ctx), interpret_two_cell(a.counit, ctx)};
  const std::string& src = t.left.source;
  const std::string& tgt = t.left.target;
  if (t.right.source != tgt || t.right.target != src) {
    throw DomainError("right adjoint " + t.right.str() + " does not run " + tgt + " -> " + src);
  }
  const OneCell id_a{{}, src, src};
  const OneCell id_b{{}, tgt, tgt};
  const OneCell rl = concat(t.right, t.left);
  const OneCell lr = concat(t.left, t.right);
  if (t.unit.source != id_a || t.unit.target != rl) {
    throw DomainError("unit runs " + t.unit.source.str() + " => " + t.unit.target.str() + ", expected " +
                      id_a.str() + " => " + rl.str());
  }
  if (t.counit.source != lr || t.counit.target != id_b) {
    throw DomainError("counit runs " + t.counit.source.str() + " => " + t.counit.target.str() +
                      ", expected " + lr.str() + " => " + id_b.str());
  }
  return t;
}

ZigzagReport verify_zigzag(const AdjunctionRecord& a, std::size_t fuel) {
  ZigzagReport report;
  TwoCell zig;
  TwoCell zag;
  TypedRecord t;
  try {
    t = type_check(a);
    // (c ◁ l) ∘ (l ▷ u) and (r ▷ c) ∘ (u ◁ r)
    zig = vertical(horizontal(t.counit, identity_two_cell(t.left)),
                   horizontal(identity_two_cell(t.left), t.unit));
    zag = vertical(horizontal(identity_two_cell(t.right), t.counit),
                   horizontal(t.unit, identity_two_cell(t.right)));
  } catch (const DomainError& e) {
    report.outcome = ZigzagOutcome::TypeError;
    report.message = e.what();
    return report;
  }
  const FormalContext& ctx = *a.context;
  Comparison first = compare_reduced(zig, identity_two_cell(t.left), ctx, fuel);
  const std::size_t rest = first.steps >= fuel ? 0 : fuel - first.steps;
  Comparison second = compare_reduced(zag, identity_two_cell(t.right), ctx, rest);
  report.steps = first.steps + second.steps;
  report.zig = first.lhs.str();
  report.zag = second.lhs.str();
  if (first.equal && second.equal) {
    report.outcome = ZigzagOutcome::Verified;
  } else {
    report.outcome = ZigzagOutcome::NotReduced;
    report.message = (first.exhausted || second.exhausted) ? "fuel exhausted" : "no further rewrite applies";
  }
  return report;
}

AdjunctionRecord with_verification(AdjunctionRecord a, std::size_t fuel) {
  if (a.status != Witness::Axiom && verify_zigzag(a, fuel).outcome == ZigzagOutcome::Verified) {
    a.status = Witness::Verified;
  }
  return a;
}

AdjunctionRecord compose_adjunctions(const AdjunctionRecord& af, const AdjunctionRecord& ag) {
  if (af.context != ag.context && !(af.context && ag.context && *af.context == *ag.context)) {
    throw DomainError("cannot compose adjunctions from different contexts");
  }
  const TypedRecord f = type_check(af);
  const TypedRecord g = type_check(ag);
  if (f.right.target != g.right.source) {
    throw DomainError("cannot compose: " + f.right.str() + " ends at " + f.right.target + " but " +
                      g.right.str() + " starts at " + g.right.source);
  }
  AdjunctionRecord out;
  out.name = "compose(" + af.name + "," + ag.name + ")";
  out.context = af.context;
  out.left = Cell::hcomp({af.left, ag.left});
  out.right = Cell::hcomp({ag.right, af.right});
  out.unit = Cell::vcomp({Cell::whisker(ag.right, af.unit, ag.left), ag.unit});
  out.counit = Cell::vcomp({af.counit, Cell::whisker(af.left, ag.counit, af.right)});
  out.status = Witness::Unverified;
  type_check(out);
  return out;
}

AdjunctionRecord transport(const AdjunctionRecord& a, const Cell& mu, const Cell& nu) {
  const TypedRecord t = type_check(a);
  const FormalContext& ctx = *a.context;
  const TwoCell m = interpret_two_cell(mu, ctx);
  const TwoCell n = interpret_two_cell(nu, ctx);
  if (m.source != t.left) {
    throw DomainError("mu runs from " + m.source.str() + ", expected the left adjoint " + t.left.str());
  }
  if (n.source != t.right) {
    throw DomainError("nu runs from " + n.source.str() + ", expected the right adjoint " + t.right.str());
  }
  inverse(m, ctx);  // throws unless every factor is invertible
  inverse(n, ctx);
  AdjunctionRecord out;
  out.name = "transport(" + a.name + ")";
  out.context = a.context;
  out.left = to_term(m.target);
  out.right = to_term(n.target);
  out.unit = Cell::vcomp({Cell::hcomp({nu, mu}), a.unit});
  out.counit = Cell::vcomp({a.counit, Cell::hcomp({Cell::inverse(mu), Cell::inverse(nu)})});
  out.status = Witness::Unverified;
  type_check(out);
  return out;
}

AdjunctionRecord dualize(const AdjunctionRecord& a, Duality d) {
  const FormalContext& ctx = context_of(a);
  AdjunctionRecord out = a;
  out.context = std::make_shared<const FormalContext>(ctx.dual(d));
  out.left = dualize(a.left, d);
  out.right = dualize(a.right, d);
  out.unit = dualize(a.unit, d);
  out.counit = dualize(a.counit, d);
  // op: (r ⊣ l, u, c); co: (r ⊣ l, c, u); coop: (l ⊣ r, c, u)
  if (d == Duality::Op || d == Duality::Co) std::swap(out.left, out.right);
  if (d == Duality::Co || d == Duality::Coop) std::swap(out.unit, out.counit);
  return out;
}

bool same_adjunction(const AdjunctionRecord& a, const AdjunctionRecord& b, std::size_t fuel) {
  const TypedRecord ta = type_check(a);
  const TypedRecord tb = type_check(b);
  if (ta.left != tb.left || ta.right != tb.right) return false;
  return compare_reduced(ta.unit, tb.unit, *a.context, fuel).equal &&
         compare_reduced(ta.counit, tb.counit, *a.context, fuel).equal;
}

ComparisonCell comparison_cell(const AdjunctionRecord& a1, const AdjunctionRecord& a2, std::size_t fuel) {
  const TypedRecord t1 = type_check(a1);
  const TypedRecord t2 = type_check(a2);
  if (t1.left != t2.left || t1.right != t2.right) {
    throw DomainError("comparison needs the same adjoints, got " + t1.left.str() + " -| " + t1.right.str() +
                      " and " + t2.left.str() + " -| " + t2.right.str());
  }
  const FormalContext& ctx = *a1.context;
  ComparisonCell out;
  out.phi = Cell::vcomp({Cell::hcomp({a1.right, a2.counit}), Cell::hcomp({a1.unit, a1.right})});
  const TwoCell phi = interpret_two_cell(out.phi, ctx);
  Reduction r = reduce(phi, ctx, fuel);
  out.normal_form = r.cell.str();
  out.steps = r.steps;

  const TwoCell lhs_unit = vertical(horizontal(phi, identity_two_cell(t1.left)), t2.unit);
  const TwoCell lhs_counit = vertical(t1.counit, horizontal(identity_two_cell(t1.left), phi));
  Comparison e1 = compare_reduced(lhs_unit, t1.unit, ctx, fuel);
  Comparison e2 = compare_reduced(lhs_counit, t2.counit, ctx, fuel);
  out.steps += e1.steps + e2.steps;
  out.unit_equation = e1.equal ? ZigzagOutcome::Verified : ZigzagOutcome::NotReduced;
  out.counit_equation = e2.equal ? ZigzagOutcome::Verified : ZigzagOutcome::NotReduced;
  return out;
}

}  // namespace hadj
