#include <gtest/gtest.h>

#include <algorithm>

#include "hadj/errors.hpp"
#include "hadj/tree_enum.hpp"

using namespace hadj;

TEST(Recurrence, PublishedTerms) {
  EXPECT_EQ(class_count_recurrence(1), 2);
  EXPECT_EQ(class_count_recurrence(2), 6);
  EXPECT_EQ(class_count_recurrence(3), 44);
  EXPECT_EQ(class_count_recurrence(4), 44 * 44 + 128);
  EXPECT_EQ(class_count_recurrence(5), 4292864);
  EXPECT_THROW(class_count_recurrence(0), DomainError);
}

TEST(Recurrence, ExactAtLargeDepth) {
  const BigCount v = class_count_recurrence(16);
  const BigCount floor = BigCount(1) << ((1u << 15) - 1);
  EXPECT_GE(v, floor);
  EXPECT_EQ(v, class_count_recurrence(15) * class_count_recurrence(15) + floor);
}

TEST(BruteForce, PublishedTerms) {
  const long expected[] = {2, 6, 44, 2064};
  for (std::size_t n = 1; n <= 4; ++n) {
    const ClassTable t = brute_force_classes(n);
    EXPECT_EQ(t.class_count, expected[n - 1]) << n;
    EXPECT_EQ(t.representatives.size(), static_cast<std::size_t>(expected[n - 1]));
    std::uint64_t total = 0;
    for (auto s : t.orbit_sizes) total += s;
    EXPECT_EQ(total, std::uint64_t{1} << ((1u << n) - 1));
  }
}

TEST(BruteForce, SerialAndParallelAgree) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ClassTable par = brute_force_classes(n);
    const ClassTable ser = brute_force_classes_serial(n);
    EXPECT_EQ(par.class_count, ser.class_count);
    EXPECT_EQ(par.representatives, ser.representatives);
    EXPECT_EQ(par.orbit_sizes, ser.orbit_sizes);
    EXPECT_EQ(par.to_json(), ser.to_json());
  }
}

TEST(BruteForce, RepresentativesAreLeastAndSorted) {
  const ClassTable t = brute_force_classes(3);
  for (std::size_t i = 1; i < t.representatives.size(); ++i) {
    EXPECT_LT(t.representatives[i - 1].str(), t.representatives[i].str());
  }
  for (const auto& rep : t.representatives) {
    EXPECT_EQ(are_tree_equivalent(rep, rep).equivalent, true);
  }
}

TEST(BruteForce, OrbitStructureAtDepthTwo) {
  const ClassTable t = brute_force_classes(2);
  std::vector<std::uint64_t> sizes = t.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2}));
  for (std::size_t i = 0; i < t.representatives.size(); ++i) {
    const std::string s = t.representatives[i].str();
    if (s == "L(L,L)" || s == "L(R,R)") {
      EXPECT_EQ(t.orbit_sizes[i], 2u) << s;
    } else {
      EXPECT_EQ(t.orbit_sizes[i], 1u) << s;
    }
  }
}

TEST(BruteForce, CapacityLimits) {
  EXPECT_THROW(brute_force_classes(5), CapacityError);
  EXPECT_THROW(brute_force_classes(3, 2), CapacityError);
  EXPECT_THROW(brute_force_classes(0), DomainError);
}

TEST(Wreath, MatchesRecurrence) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(wreath_involutions(n), class_count_recurrence(n));
    EXPECT_EQ(wreath_involutions(n), wreath_involutions_serial(n));
  }
  EXPECT_THROW(wreath_involutions(5), CapacityError);
}

TEST(TreeKernel, AgreesWithTreeInterchange) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const TreeKernel k(n);
    const auto paths = internal_paths(n);
    ASSERT_EQ(k.internal_count(), paths.size());
    for (std::uint32_t code = 0; code < k.tree_count(); ++code) {
      const auto t = DexterityTree::from_code(n, code);
      for (std::size_t v = 0; v < paths.size(); ++v) {
        std::uint32_t out = 0;
        const bool ok = k.apply(code, v, out);
        EXPECT_EQ(ok, interchange_applicable(t, paths[v]));
        if (ok) EXPECT_EQ(DexterityTree::from_code(n, out), tree_interchange(t, paths[v]));
      }
    }
  }
}

TEST(TreeKernel, PreorderKeyMatchesStringOrder) {
  const TreeKernel k(3);
  for (std::uint32_t a = 0; a < k.tree_count(); a += 7) {
    for (std::uint32_t b = 0; b < k.tree_count(); b += 5) {
      const auto sa = DexterityTree::from_code(3, a).str();
      const auto sb = DexterityTree::from_code(3, b).str();
      EXPECT_EQ(k.preorder_key(a) < k.preorder_key(b), sa < sb);
    }
  }
}

TEST(ClassTable, Json) {
  const auto j = brute_force_classes(1).to_json();
  EXPECT_EQ(j.at("class_count"), "2");
  EXPECT_EQ(j.at("representatives"), nlohmann::json::parse(R"(["L","R"])"));
}
