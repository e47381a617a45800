#include <gtest/gtest.h>
#include <omp.h>

#include <random>
#include <set>

#include "drs/error.hpp"
#include "drs/kernels.hpp"
#include "support.hpp"

namespace drs {
namespace {

using test::example_network;
using test::gf8;

// Runs fn once per thread count and checks every result is the same.
template <typename Fn>
void expect_thread_invariant(Fn fn) {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto base = fn();
  for (int threads : {2, 3, 4}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(fn(), base) << threads << " threads";
  }
  omp_set_num_threads(saved);
}

TEST(Kernels, PatternEnumeration) {
  EXPECT_EQ(kernels::count_error_patterns(7, 8, 0), 1u);
  EXPECT_EQ(kernels::count_error_patterns(7, 8, 1), 50u);
  EXPECT_EQ(kernels::count_error_patterns(7, 8, 2), 1u + 49u + 21u * 49u);
  EXPECT_EQ(kernels::count_error_patterns(3, 8, 5), 512u);
  EXPECT_EQ(kernels::count_error_patterns(60, 65536, 30), UINT64_MAX);

  const auto pats = kernels::error_patterns(6, 4, 2);
  EXPECT_EQ(pats.size(), kernels::count_error_patterns(6, 4, 2));
  EXPECT_TRUE(pats.front().empty());
  std::set<std::vector<std::pair<int, std::uint32_t>>> distinct;
  for (const auto& p : pats) {
    std::vector<std::pair<int, std::uint32_t>> key;
    for (const auto& e : p) {
      EXPECT_GE(e.position, 1);
      EXPECT_LE(e.position, 6);
      EXPECT_FALSE(e.value.is_zero());
      key.emplace_back(e.position, e.value.value());
    }
    distinct.insert(key);
  }
  EXPECT_EQ(distinct.size(), pats.size());
}

TEST(Kernels, SimulateMatchesSerial) {
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  const Decoder dec(cons);
  for (int budget : {0, 1, 2, 3}) {
    const auto serial = kernels::simulate_serial(dec, 700, budget, 11);
    expect_thread_invariant([&] { return kernels::simulate(dec, 700, budget, 11); });
    EXPECT_EQ(kernels::simulate(dec, 700, budget, 11), serial);
  }
}

TEST(Kernels, CorrectionCheckMatchesSerial) {
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  const Decoder dec(cons);
  std::mt19937_64 rng(12);
  std::vector<SourceMessages> msgs;
  for (int i = 0; i < 20; ++i) msgs.push_back(random_messages(cons, rng));

  const auto within = kernels::error_patterns(7, 8, 1);
  const auto ok = kernels::check_correction_serial(dec, msgs, within);
  EXPECT_EQ(ok.checked, 20u * 50u);
  EXPECT_EQ(ok.failures, 0u);
  EXPECT_FALSE(ok.first_failure.has_value());
  EXPECT_EQ(kernels::check_correction(dec, msgs, within), ok);

  // Weight-2 patterns exceed z = 1, so failures appear.
  const auto beyond = kernels::error_patterns(7, 8, 2);
  const auto bad = kernels::check_correction_serial(dec, msgs, beyond);
  EXPECT_GT(bad.failures, 0u);
  ASSERT_TRUE(bad.first_failure.has_value());
  EXPECT_EQ(*bad.first_failure, 50u);  // first weight-2 pattern of message 0
  expect_thread_invariant([&] { return kernels::check_correction(dec, msgs, beyond); });
  EXPECT_EQ(kernels::check_correction(dec, msgs, beyond), bad);
}

TEST(Kernels, BatchDecodersAgree) {
  const RsCode code(gf8(), 7, 1);
  const RsCodebook book(code);
  std::mt19937 rng(13);
  std::vector<std::vector<Element>> words;
  for (int i = 0; i < 200; ++i) {
    std::vector<Element> y(7);
    for (auto& e : y) e = Element(rng() % 8);
    words.push_back(y);
  }
  const auto serial = kernels::bruteforce_decode_batch_serial(book, words);
  EXPECT_EQ(kernels::bruteforce_decode_batch(book, words), serial);
  EXPECT_EQ(kernels::bw_decode_batch(code, words), serial);
}

TEST(Kernels, RowSpaceMinimumWeight) {
  const Field f = gf8();
  const Construction cons = build(example_network({3, 1, 1}), f);
  EXPECT_EQ(kernels::rowspace_min_weight_serial(f, cons.G), 3);
  expect_thread_invariant([&] { return kernels::rowspace_min_weight(f, cons.G); });
  EXPECT_EQ(kernels::rowspace_min_weight(f, Matrix()), -1);
  const Construction small = build(example_network({1, 1, 1}), f);
  EXPECT_EQ(kernels::rowspace_min_weight(f, small.G),
            kernels::rowspace_min_weight_serial(f, small.G));
  EXPECT_GE(kernels::rowspace_min_weight(f, small.G), 3);
  try {
    kernels::rowspace_min_weight(f, cons.G, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleTooLarge);
  }
}

}  // namespace
}  // namespace drs
