#include <gtest/gtest.h>

#include <random>

#include "drs/error.hpp"
#include "drs/sman.hpp"
#include "support.hpp"

namespace drs {
namespace {

using test::example_network;

constexpr SourceSet S1 = 1, S2 = 2, S3 = 4;

// Columns of A with at least one source in the subset, counted directly.
int count_columns(const std::vector<std::vector<int>>& a, SourceSet subset) {
  int n = 0;
  for (std::size_t j = 0; j < a[0].size(); ++j) {
    bool hit = false;
    for (std::size_t i = 0; i < a.size(); ++i) hit = hit || ((subset >> i) & 1 && a[i][j]);
    n += hit;
  }
  return n;
}

SmanTopology random_topology(std::mt19937& rng, int sources, int n) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(sources),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    const int mask = 1 + static_cast<int>(rng() % ((1u << sources) - 1));
    for (int i = 0; i < sources; ++i) adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (mask >> i) & 1;
  }
  std::vector<int> rates(static_cast<std::size_t>(sources));
  for (auto& r : rates) r = static_cast<int>(rng() % 4);
  return SmanTopology(1, rates, adj);
}

TEST(Sman, PartitionOfExample) {
  const PartitionSets ps = partition(example_network({3, 1, 1}));
  EXPECT_EQ(ps.block(S1), (std::vector<int>{1}));
  EXPECT_EQ(ps.block(S1 | S2), (std::vector<int>{6, 7}));
  EXPECT_EQ(ps.block(S2 | S3), (std::vector<int>{2, 3}));
  EXPECT_EQ(ps.block(S1 | S3), (std::vector<int>{4, 5}));
  EXPECT_TRUE(ps.block(S2).empty());
  EXPECT_TRUE(ps.block(S1 | S2 | S3).empty());
  EXPECT_EQ(ps.zsets[1], (std::vector<int>{1, 4, 5}));
  EXPECT_EQ(ps.zsets[0], (std::vector<int>{2, 3}));
  EXPECT_EQ(ps.zsets[2], (std::vector<int>{1, 6, 7}));
}

TEST(Sman, SingleSource) {
  const SmanTopology top(1, {2}, {{1, 1, 1, 1}});
  EXPECT_EQ(partition(top).block(S1), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Sman, CutCapacity) {
  const SmanTopology top = example_network({3, 1, 1});
  EXPECT_EQ(cut_capacity(top, S1 | S2 | S3), 7);
  EXPECT_EQ(cut_capacity(top, S1), 5);
  EXPECT_EQ(cut_capacity(top, S2 | S3), 6);
  for (SourceSet s = 1; s < 8; ++s) EXPECT_EQ(cut_capacity(top, s), count_columns(top.adjacency(), s));
  const SmanTopology phantom(0, {1, 0}, {{1, 1}, {0, 0}});
  EXPECT_EQ(cut_capacity(phantom, S2), 0);
}

TEST(Sman, CapacityRegion) {
  const SmanTopology top = example_network({3, 1, 1});
  const CapacityCheck ok = in_capacity_region(top);
  EXPECT_TRUE(ok.ok);
  EXPECT_TRUE(ok.violated.empty());
  std::vector<SourceSet> tight;
  for (SourceSet s = 1; s < 8; ++s) {
    int r = 0;
    for (int i = 0; i < 3; ++i) r += (s >> i) & 1 ? top.rate(i) : 0;
    if (r == count_columns(top.adjacency(), s) - 2) tight.push_back(s);
  }
  EXPECT_EQ(tight, (std::vector<SourceSet>{S1, S1 | S2 | S3}));

  const CapacityCheck bad = in_capacity_region(example_network({4, 1, 1}));
  EXPECT_FALSE(bad.ok);
  ASSERT_FALSE(bad.violated.empty());
  EXPECT_EQ(bad.violated.front(), S1);
  EXPECT_EQ(format_source_set(bad.violated.front()), "{S1}");

  EXPECT_TRUE(in_capacity_region(example_network({0, 0, 0})).ok);
  // Zero rates still need C >= 2z everywhere.
  EXPECT_FALSE(in_capacity_region(SmanTopology(2, {0, 0}, {{1, 1, 1, 0}, {0, 0, 0, 1}})).ok);
}

TEST(Sman, Permute) {
  const SmanTopology top = example_network({3, 1, 1});
  EXPECT_EQ(permute_sources(top, {0, 1, 2}), top);
  const SmanTopology p = permute_sources(top, {1, 2, 0});
  EXPECT_EQ(p.rates(), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(p.adjacency()[0], top.adjacency()[1]);
  EXPECT_EQ(p.adjacency()[2], top.adjacency()[0]);
  EXPECT_EQ(permute_sources(permute_sources(top, {1, 2, 0}), {2, 0, 1}), top);
  EXPECT_THROW(permute_sources(top, {0, 0, 1}), Error);
}

TEST(Sman, Validation) {
  const auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return std::make_pair(e.code(), std::string(e.what()));
    }
    return std::make_pair(ErrorCode::Parse, std::string());
  };
  const auto four = code_of([] { SmanTopology(1, {1, 1, 1, 1}, {{1}, {1}, {1}, {1}}); });
  EXPECT_EQ(four.first, ErrorCode::TooManySources);
  EXPECT_NE(four.second.find("more than three sources unsupported"), std::string::npos);
  EXPECT_EQ(code_of([] { SmanTopology(1, {1, 1}, {{1, 0}, {0, 0}}); }).first,
            ErrorCode::InvalidTopology);
  EXPECT_EQ(code_of([] { SmanTopology(1, {1}, {{1, 2}}); }).first, ErrorCode::InvalidTopology);
  EXPECT_EQ(code_of([] { SmanTopology(1, {1, 1}, {{1, 1}, {1}}); }).first,
            ErrorCode::InvalidTopology);
  EXPECT_EQ(code_of([] { SmanTopology(-1, {1}, {{1}}); }).first, ErrorCode::InvalidTopology);
  EXPECT_EQ(code_of([] { SmanTopology(1, {-1}, {{1}}); }).first, ErrorCode::InvalidTopology);
  EXPECT_EQ(code_of([] { SmanTopology(1, {1}, {{1, 1}, {1, 1}}); }).first,
            ErrorCode::InvalidTopology);
}

TEST(Sman, PadToThree) {
  const SmanTopology top(1, {2}, {{1, 1, 1, 1, 1}});
  const SmanTopology p = pad_to_three(top);
  EXPECT_EQ(p.sources(), 3);
  EXPECT_EQ(p.rates(), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(p.adjacency()[2], std::vector<int>(5, 0));
}

TEST(Sman, RandomInvariants) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int s = 1 + static_cast<int>(rng() % 3);
    const int n = 3 + static_cast<int>(rng() % 10);
    const SmanTopology top = random_topology(rng, s, n);
    const PartitionSets ps = partition(top);
    std::vector<int> seen;
    for (SourceSet m = 1; m < 8; ++m) seen.insert(seen.end(), ps.block(m).begin(), ps.block(m).end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    ASSERT_EQ(seen, all);

    for (SourceSet sub = 1; sub < (1u << s); ++sub) {
      // C(S') = N - |intersection of Z_i over i in S'|
      std::vector<int> inter = all;
      for (int i = 0; i < s; ++i) {
        if (!((sub >> i) & 1)) continue;
        std::vector<int> next;
        std::set_intersection(inter.begin(), inter.end(), ps.zsets[static_cast<std::size_t>(i)].begin(),
                              ps.zsets[static_cast<std::size_t>(i)].end(), std::back_inserter(next));
        inter = next;
      }
      ASSERT_EQ(cut_capacity(top, sub), n - static_cast<int>(inter.size()));
    }

    // Lowering a rate never leaves the region.
    if (in_capacity_region(top).ok) {
      for (int i = 0; i < s; ++i) {
        if (top.rate(i) == 0) continue;
        auto rates = top.rates();
        --rates[static_cast<std::size_t>(i)];
        ASSERT_TRUE(in_capacity_region(SmanTopology(top.z(), rates, top.adjacency())).ok);
      }
    }
  }
}

}  // namespace
}  // namespace drs
