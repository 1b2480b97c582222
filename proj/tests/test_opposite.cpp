#include <gtest/gtest.h>

#include "hadj/errors.hpp"
#include "hadj/opposite.hpp"

using namespace hadj;

namespace {

DexterityFunction fn(const std::string& s) { return DexterityFunction::parse(s); }

// op exactly at the listed 1-based positions.
std::string ops_at(std::size_t N, std::initializer_list<std::size_t> at) {
  std::string s(N, 'i');
  for (std::size_t p : at) s[p - 1] = 'o';
  return s;
}

}  // namespace

TEST(OppositeFunction, ParseAndJson) {
  const auto o = OppositeFunction::parse("ioo");
  EXPECT_EQ(o.str(), "ioo");
  EXPECT_EQ(o.at(2), Direction::Op);
  EXPECT_EQ(o.to_json().dump(), R"(["id","op","op"])");
  EXPECT_THROW(OppositeFunction::parse("iox"), ParseError);
  EXPECT_THROW(o.at(4), DomainError);
}

TEST(OpForPair, Examples) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t N = n + 2;
    const auto r = constant(Side::R, n);
    EXPECT_EQ(op_for_pair(r, r, 1, N).str(), std::string(N, 'i'));
    EXPECT_EQ(op_for_pair(r, odd_function(n), 1, N).str(), ops_at(N, {n + 1}));
    std::string even_positions(N, 'i');
    for (std::size_t j = 2; j <= n + 1; j += 2) even_positions[j - 1] = 'o';
    EXPECT_EQ(op_for_pair(r, constant(Side::L, n), 1, N).str(), even_positions);
  }
}

TEST(OpForPair, HandComputed) {
  // a = RLL, b = RRR, k = 2: prefix L-counts 0,0,1,2 at j = 0..3.
  EXPECT_EQ(op_for_pair(fn("RLL"), fn("RRR"), 2, 6).str(), "iiioii");
  EXPECT_EQ(op_for(fn("LR"), 3).str(), "ioo");
}

TEST(OpForPair, Errors) {
  EXPECT_THROW(op_for_pair(fn("RR"), fn("RRR"), 1, 5), DomainError);
  EXPECT_THROW(op_for_pair(fn("RR"), fn("RR"), 2, 3), DomainError);
  EXPECT_THROW(op_for_pair(fn("RR"), fn("RR"), 0, 3), DomainError);
}

TEST(OpForPair, SymmetricAndIdOnDiagonal) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_functions(n);
    for (const auto& a : all) {
      EXPECT_EQ(op_for_pair(a, a, 1, n + 1).str(), std::string(n + 1, 'i'));
      for (const auto& b : all) {
        const auto o = op_for_pair(a, b, 2, n + 3);
        EXPECT_EQ(o, op_for_pair(b, a, 2, n + 3));
        EXPECT_EQ(o.at(2), Direction::Id);
        EXPECT_EQ(o.at(1), Direction::Id);
      }
    }
  }
}

TEST(Negate, Examples) {
  EXPECT_EQ(negate_opposite(OppositeFunction::parse("iiii")).str(), "oooo");
  const auto o = OppositeFunction::parse("ioio");
  EXPECT_EQ(negate_opposite(negate_opposite(o)), o);
  const std::size_t n = 3;
  const auto at_end = op_for_pair(constant(Side::R, n), odd_function(n), 1, n + 2);
  EXPECT_EQ(negate_opposite(at_end).str(), "oooio");
}

TEST(XorCompose, GroupLaws) {
  const auto a = OppositeFunction::parse("iooi");
  const auto b = OppositeFunction::parse("oioi");
  EXPECT_EQ(xor_compose(a, b).str(), "ooii");
  EXPECT_EQ(xor_compose(a, a).str(), "iiii");
  EXPECT_EQ(xor_compose(a, b), xor_compose(b, a));
  EXPECT_THROW(xor_compose(a, OppositeFunction::parse("io")), DomainError);
}

TEST(BuildOpposite, Variants) {
  EXPECT_EQ(build_opposite({OppositeVariant::Kind::EvenOp}, 5).str(), "ioioi");
  EXPECT_EQ(build_opposite({OppositeVariant::Kind::OddOp}, 5).str(), "oioio");
  EXPECT_EQ(build_opposite({OppositeVariant::Kind::Constant, Direction::Op}, 3).str(), "ooo");
  EXPECT_THROW(build_opposite({OppositeVariant::Kind::EvenOp}, 0), DomainError);
}

// With N = n + 1 the l^n pair gives op at the even positions, i.e. even op.
TEST(BuildOpposite, EvenOpIdentification) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(op_for_pair(constant(Side::R, n), constant(Side::L, n), 1, n + 1),
              build_opposite({OppositeVariant::Kind::EvenOp}, n + 1));
  }
}
