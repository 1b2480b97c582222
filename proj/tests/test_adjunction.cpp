#include <gtest/gtest.h>

#include "hadj/adjunction.hpp"
#include "hadj/errors.hpp"
#include "hadj/random_context.hpp"
#include "sample_context.hpp"

using namespace hadj;

namespace {

class AdjunctionTest : public ::testing::Test {
 protected:
  ContextDocument doc = sample_document();
  const AdjunctionRecord& F = doc.record("F");
  const AdjunctionRecord& G = doc.record("G");

  ZigzagOutcome outcome(const AdjunctionRecord& a) const { return verify_zigzag(a).outcome; }
};

// The trivial adjunction id ⊣ id on an object, unit and counit identities.
AdjunctionRecord identity_adjunction(std::shared_ptr<const FormalContext> ctx, const std::string& object) {
  AdjunctionRecord a;
  a.name = "id_" + object;
  a.context = std::move(ctx);
  a.left = Cell::identity(Cell::atom(object));
  a.right = a.left;
  a.unit = Cell::identity(a.left);
  a.counit = a.unit;
  return a;
}

}  // namespace

TEST_F(AdjunctionTest, AxiomsVerify) {
  EXPECT_EQ(F.status, Witness::Axiom);
  EXPECT_EQ(outcome(F), ZigzagOutcome::Verified);
  EXPECT_EQ(outcome(G), ZigzagOutcome::Verified);
  EXPECT_EQ(axiom_record(doc.context, "F"), F);
  EXPECT_THROW(axiom_record(doc.context, "F2"), DomainError);
}

TEST_F(AdjunctionTest, SwappedUnitAndCounitIsATypeError) {
  const auto bad = load_context_file(data_file("swapped.json"));
  const ZigzagReport r = verify_zigzag(bad.record("Swapped"));
  EXPECT_EQ(r.outcome, ZigzagOutcome::TypeError);
  EXPECT_FALSE(r.message.empty());
  EXPECT_THROW(type_check(bad.record("Swapped")), DomainError);
}

TEST_F(AdjunctionTest, ComposeBuildsTheDisplayedComposites) {
  const AdjunctionRecord c = compose_adjunctions(F, G);
  EXPECT_EQ(c.name, "compose(F,G)");
  EXPECT_EQ(c.left.str(), "(hcomp fL gL)");
  EXPECT_EQ(c.right.str(), "(hcomp g f)");
  EXPECT_EQ(c.unit.str(), "(vcomp (whisker g uf gL) ug)");
  EXPECT_EQ(c.counit.str(), "(vcomp cf (whisker fL cg f))");
  const TypedRecord t = type_check(c);
  EXPECT_EQ(t.unit.source.str(), "(id Z)");
  EXPECT_EQ(t.unit.target.str(), "(hcomp g f fL gL)");
  const ZigzagReport r = verify_zigzag(c);
  EXPECT_EQ(r.outcome, ZigzagOutcome::Verified);
  EXPECT_LE(r.steps, kDefaultFuel);
  EXPECT_EQ(with_verification(c).status, Witness::Verified);
  EXPECT_THROW(compose_adjunctions(G, F), DomainError);
}

TEST_F(AdjunctionTest, ComposeWithIdentityAdjunction) {
  const AdjunctionRecord id = identity_adjunction(doc.context, "Y");
  const AdjunctionRecord c = compose_adjunctions(id, G);
  EXPECT_EQ(outcome(c), ZigzagOutcome::Verified);
  EXPECT_TRUE(same_adjunction(c, G));
  EXPECT_TRUE(same_adjunction(compose_adjunctions(F, identity_adjunction(doc.context, "Y")), F));
}

TEST_F(AdjunctionTest, ComposeIsAssociative) {
  const AdjunctionRecord id = identity_adjunction(doc.context, "Z");
  const auto left = compose_adjunctions(compose_adjunctions(F, G), id);
  const auto right = compose_adjunctions(F, compose_adjunctions(G, id));
  EXPECT_TRUE(same_adjunction(left, right));
}

TEST(ComposeProperties, AssociativeOnRandomChains) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RandomCorpus corpus = random_corpus(seed);
    // axioms come in pairs per link: (f^L ⊣ f), (f ⊣ f^R)
    if (corpus.axioms.size() < 6) continue;
    const auto& a = corpus.axioms[0];
    const auto& b = corpus.axioms[2];
    const auto& c = corpus.axioms[4];
    const auto left = compose_adjunctions(compose_adjunctions(a, b), c);
    const auto right = compose_adjunctions(a, compose_adjunctions(b, c));
    EXPECT_TRUE(same_adjunction(left, right)) << seed;
    EXPECT_EQ(verify_zigzag(left).outcome, ZigzagOutcome::Verified);
  }
}

TEST_F(AdjunctionTest, TransportByIdentitiesIsTheSameAdjunction) {
  const AdjunctionRecord t = transport(F, Cell::parse("(id fL)"), Cell::parse("(id f)"));
  EXPECT_EQ(t.left.str(), "fL");
  EXPECT_TRUE(same_adjunction(t, F));
}

TEST_F(AdjunctionTest, TransportGeneric) {
  const AdjunctionRecord t = transport(F, Cell::parse("mu"), Cell::parse("nu"));
  EXPECT_EQ(t.name, "transport(F)");
  EXPECT_EQ(t.left.str(), "fL2");
  EXPECT_EQ(t.right.str(), "f2");
  EXPECT_EQ(t.unit.str(), "(vcomp (hcomp nu mu) uf)");
  EXPECT_EQ(t.counit.str(), "(vcomp cf (hcomp (inv mu) (inv nu)))");
  EXPECT_EQ(outcome(t), ZigzagOutcome::Verified);
  EXPECT_TRUE(same_adjunction(t, doc.record("F2")));
}

TEST_F(AdjunctionTest, TransportBackByInverses) {
  const AdjunctionRecord there = transport(F, Cell::parse("mu"), Cell::parse("nu"));
  const AdjunctionRecord back = transport(there, Cell::parse("(inv mu)"), Cell::parse("(inv nu)"));
  EXPECT_TRUE(same_adjunction(back, F));
}

TEST_F(AdjunctionTest, TransportErrors) {
  EXPECT_THROW(transport(F, Cell::parse("uf"), Cell::parse("nu")), DomainError);
  EXPECT_THROW(transport(F, Cell::parse("nu"), Cell::parse("mu")), DomainError);
  EXPECT_THROW(transport(F, Cell::parse("(hcomp fL uf)"), Cell::parse("nu")), DomainError);
}

TEST_F(AdjunctionTest, DualizeExamples) {
  const AdjunctionRecord op = dualize(F, Duality::Op);
  EXPECT_EQ(op.left.str(), "f");
  EXPECT_EQ(op.right.str(), "fL");
  EXPECT_EQ(op.unit.str(), "uf");
  EXPECT_EQ(op.counit.str(), "cf");
  const AdjunctionRecord coop = dualize(F, Duality::Coop);
  EXPECT_EQ(coop.left.str(), "fL");
  EXPECT_EQ(coop.unit.str(), "cf");
  EXPECT_EQ(coop.counit.str(), "uf");
  const AdjunctionRecord co = dualize(F, Duality::Co);
  EXPECT_EQ(co.left.str(), "f");
  EXPECT_EQ(co.unit.str(), "cf");
  for (const auto* a : {&op, &co, &coop}) {
    EXPECT_NO_THROW(type_check(*a));
    EXPECT_EQ(verify_zigzag(*a).outcome, ZigzagOutcome::Verified);
  }
}

TEST_F(AdjunctionTest, DualizeRoundTrips) {
  const AdjunctionRecord c = compose_adjunctions(F, G);
  for (const auto* a : {&F, &c}) {
    for (Duality d : {Duality::Op, Duality::Co, Duality::Coop}) {
      EXPECT_EQ(dualize(dualize(*a, d), d), *a);
      EXPECT_NO_THROW(type_check(dualize(*a, d)));
    }
    EXPECT_EQ(dualize(*a, Duality::Coop), dualize(dualize(*a, Duality::Co), Duality::Op));
    EXPECT_EQ(dualize(*a, Duality::Coop), dualize(dualize(*a, Duality::Op), Duality::Co));
  }
}

TEST_F(AdjunctionTest, ComparisonOfAnAdjunctionWithItself) {
  const ComparisonCell c = comparison_cell(F, F);
  EXPECT_EQ(c.phi.str(), "(vcomp (hcomp f cf) (hcomp uf f))");
  EXPECT_EQ(c.normal_form, identity_two_cell(type_check(F).right).str());
  EXPECT_EQ(c.unit_equation, ZigzagOutcome::Verified);
  EXPECT_EQ(c.counit_equation, ZigzagOutcome::Verified);
}

TEST_F(AdjunctionTest, ComparisonWithATransportedUnit) {
  const AdjunctionRecord& a2 = doc.record("Fnu");
  EXPECT_TRUE(same_adjunction(a2, transport(F, Cell::parse("(id fL)"), Cell::parse("w"))));
  const ComparisonCell c = comparison_cell(F, a2);
  EXPECT_EQ(c.normal_form, interpret_two_cell(Cell::parse("(inv w)"), *doc.context).str());
  EXPECT_EQ(c.unit_equation, ZigzagOutcome::Verified);
  EXPECT_EQ(c.counit_equation, ZigzagOutcome::Verified);
}

// Both equations follow from the zig-zags alone, so they verify even when the
// two units are unrelated generators; phi itself stays irreducible.
TEST_F(AdjunctionTest, ComparisonOfIndependentAxioms) {
  const ComparisonCell c = comparison_cell(F, doc.record("Fb"));
  EXPECT_EQ(c.normal_form, interpret_two_cell(c.phi, *doc.context).str());
  EXPECT_EQ(c.unit_equation, ZigzagOutcome::Verified);
  EXPECT_EQ(c.counit_equation, ZigzagOutcome::Verified);
  EXPECT_THROW(comparison_cell(F, G), DomainError);
}

TEST(RandomCorpus, EveryConstructedRecordTypeChecksAndVerifies) {
  std::size_t derived = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const RandomCorpus corpus = random_corpus(seed);
    for (const auto& r : corpus.axioms) EXPECT_EQ(verify_zigzag(r).outcome, ZigzagOutcome::Verified);
    for (const auto& r : corpus.derived) {
      EXPECT_NO_THROW(type_check(r));
      EXPECT_EQ(verify_zigzag(r).outcome, ZigzagOutcome::Verified) << r.name;
      ++derived;
    }
  }
  EXPECT_GE(derived, 25u * 8);
}

TEST(RandomCorpus, Deterministic) {
  const RandomCorpus a = random_corpus(42);
  const RandomCorpus b = random_corpus(42);
  ASSERT_EQ(a.derived.size(), b.derived.size());
  for (std::size_t i = 0; i < a.derived.size(); ++i) EXPECT_EQ(a.derived[i], b.derived[i]);
}
