#include <gtest/gtest.h>

#include <random>

#include "drs/codec.hpp"
#include "drs/error.hpp"
#include "drs/kernels.hpp"
#include "support.hpp"

namespace drs {
namespace {

using test::example_network;
using test::gf8;

SourceMessages unit_message(const Construction& cons, int source, int index) {
  SourceMessages m;
  for (int i = 0; i < cons.topology.sources(); ++i) {
    m.per_source.emplace_back(static_cast<std::size_t>(cons.topology.rate(i)));
  }
  m.per_source[static_cast<std::size_t>(source)][static_cast<std::size_t>(index)] = Element(1);
  return m;
}

std::vector<Construction> sample_constructions() {
  std::vector<Construction> out;
  out.push_back(build(example_network({3, 1, 1}), gf8()));
  out.push_back(build(example_network({1, 1, 1}), gf8()));
  out.push_back(build(example_network({2, 1, 2})));
  out.push_back(build(SmanTopology(1, {2, 3, 1}, {{1, 1, 0, 0, 1, 0, 1, 1},
                                                  {0, 0, 1, 1, 1, 0, 1, 1},
                                                  {0, 1, 0, 0, 1, 1, 1, 1}})));
  out.push_back(build(SmanTopology(2, {2, 1}, {{1, 1, 1, 1, 0, 1, 1, 0},
                                               {0, 0, 1, 1, 1, 1, 1, 1}})));
  return out;
}

TEST(Codec, ExampleUnitMessageGivesFirstRow) {
  const Field f = gf8();
  const Construction cons = build(example_network({3, 1, 1}), f);
  const Matrix g = test::reference_g(f);
  const SourceMessages m = unit_message(cons, 0, 0);
  const auto c = encode_all(cons, m);
  for (int j = 1; j <= 7; ++j) {
    EXPECT_EQ(c[static_cast<std::size_t>(j - 1)], g(0, static_cast<std::size_t>(j - 1)));
    EXPECT_EQ(relay_encode(cons, m, j), g(0, static_cast<std::size_t>(j - 1)));
  }
  SourceMessages zero = m;
  zero.per_source[0][0] = Element(0);
  EXPECT_EQ(encode_all(cons, zero), std::vector<Element>(7));
  EXPECT_EQ(relay_encode(cons, zero, 4), Element(0));
}

TEST(Codec, ConcatenateAndSplit) {
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  std::mt19937_64 rng(1);
  const SourceMessages m = random_messages(cons, rng);
  EXPECT_EQ(split(cons, concatenate(cons, m)), m);
  SourceMessages bad = m;
  bad.per_source[1].push_back(Element(1));
  try {
    concatenate(cons, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Codec, EncodeIsRsEncodeOfMT) {
  std::mt19937_64 rng(2);
  for (const auto& cons : sample_constructions()) {
    for (int i = 0; i < 20; ++i) {
      const SourceMessages m = random_messages(cons, rng);
      const auto mt = vec_mul(cons.code.field(), concatenate(cons, m), cons.T);
      ASSERT_EQ(encode_all(cons, m), rs_encode(cons.code, mt));
    }
  }
}

TEST(Codec, RelaysOnlySeeTheirSources) {
  std::mt19937_64 rng(3);
  for (const auto& cons : sample_constructions()) {
    for (int trial = 0; trial < 30; ++trial) {
      const SourceMessages m = random_messages(cons, rng);
      for (int pos = 1; pos <= cons.code.length(); ++pos) {
        const int relay = cons.plan.column_order[static_cast<std::size_t>(pos - 1)];
        SourceMessages other = m;
        for (int s = 0; s < cons.topology.sources(); ++s) {
          if (cons.topology.adjacent(s, relay)) continue;
          for (auto& e : other.per_source[static_cast<std::size_t>(s)]) {
            e = Element(static_cast<std::uint32_t>(rng() % cons.code.field().size()));
          }
        }
        ASSERT_EQ(relay_encode(cons, m, pos), relay_encode(cons, other, pos));
      }
    }
  }
}

TEST(Codec, Corrupt) {
  const Field f = gf8();
  const std::vector<Element> c{Element(1), Element(2), Element(3), Element(4)};
  EXPECT_EQ(corrupt(c, {}).y, c);
  const std::vector<SymbolError> one{{3, f.alpha()}};
  const ReceivedWord r = corrupt(c, one);
  EXPECT_EQ(hamming_distance(r.y, c), 1);
  EXPECT_NE(r.y[2], c[2]);
  EXPECT_EQ(r.error[2], f.alpha());

  const auto code_of = [&](std::vector<SymbolError> e) {
    try {
      corrupt(c, e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::Parse;
  };
  EXPECT_EQ(code_of({{1, Element(1)}, {1, Element(2)}}), ErrorCode::DuplicatePosition);
  EXPECT_EQ(code_of({{2, Element(0)}}), ErrorCode::ZeroErrorValue);
  EXPECT_EQ(code_of({{5, Element(1)}}), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of({{0, Element(1)}}), ErrorCode::IndexOutOfRange);
  // More errors than z is still a valid channel.
  EXPECT_EQ(corrupt(c, std::vector<SymbolError>{{1, Element(1)}, {2, Element(1)}}).y.size(), 4u);
}

TEST(Codec, RoundTripAllConstructions) {
  std::mt19937_64 rng(4);
  for (const auto& cons : sample_constructions()) {
    const Decoder dec(cons);
    for (int i = 0; i < 1000; ++i) {
      const SourceMessages m = random_messages(cons, rng);
      ASSERT_EQ(dec.decode(encode_all(cons, m)), m);
    }
  }
}

TEST(Codec, ExampleCorrectsEverySingleError) {
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  const Decoder dec(cons);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const SourceMessages m = random_messages(cons, rng);
    const auto c = encode_all(cons, m);
    for (int pos = 1; pos <= 7; ++pos) {
      for (std::uint32_t v = 1; v < 8; ++v) {
        const std::vector<SymbolError> e{{pos, Element(v)}};
        ASSERT_EQ(dec.decode(corrupt(c, e).y), m) << pos << " " << v;
      }
    }
  }
}

TEST(Codec, CorrectsUpToZExhaustivePatterns) {
  std::mt19937_64 rng(6);
  for (const auto& cons : sample_constructions()) {
    if (cons.code.length() > 8) continue;
    const Decoder dec(cons);
    const auto patterns =
        kernels::error_patterns(cons.code.length(), cons.code.field().size(), cons.code.z());
    for (int i = 0; i < 10; ++i) {
      const SourceMessages m = random_messages(cons, rng);
      const auto c = encode_all(cons, m);
      for (const auto& p : patterns) ASSERT_EQ(dec.decode(corrupt(c, p).y), m);
    }
  }
}

TEST(Codec, FarWordFailsToDecode) {
  // The example has R = k, so its code is the whole [7,5,3] RS code; find
  // words at distance 2 from every codeword by exhaustion.
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  const RsCodebook book(cons.code);
  std::mt19937 rng(7);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 5; ++trial) {
    std::vector<Element> y(7);
    for (auto& e : y) e = Element(rng() % 8);
    int best = 8;
    for (std::uint64_t i = 0; i < book.size(); ++i) best = std::min(best, hamming_distance(book.codeword(i), y));
    if (best != 2) continue;
    ++found;
    EXPECT_FALSE(decode(cons, y).has_value());
  }
  EXPECT_GT(found, 0);
}

TEST(Codec, RejectsRsCodewordsOutsideTheSubcode) {
  const Construction cons = build(example_network({1, 1, 1}), gf8());
  const Field& f = cons.code.field();
  int rejected = 0;
  for (int i = 0; i < cons.code.dimension(); ++i) {
    std::vector<Element> e(static_cast<std::size_t>(cons.code.dimension()));
    e[static_cast<std::size_t>(i)] = f.one();
    std::vector<std::vector<Element>> rows;
    for (std::size_t r = 0; r < cons.T.rows(); ++r) rows.emplace_back(cons.T.row(r).begin(), cons.T.row(r).end());
    rows.push_back(e);
    if (rank(f, Matrix::from_rows(rows)) == cons.T.rows()) continue;
    EXPECT_FALSE(decode(cons, rs_encode(cons.code, e)).has_value());
    ++rejected;
  }
  EXPECT_GT(rejected, 0);
}

TEST(Codec, Simulate) {
  const Construction cons = build(example_network({3, 1, 1}), gf8());
  const SimulationStats clean = simulate(cons, 500, 0, 1);
  EXPECT_EQ(clean.successes, 500u);
  const SimulationStats at_z = simulate(cons, 2000, 1, 2);
  EXPECT_EQ(at_z.successes, 2000u);
  EXPECT_EQ(at_z.seed, 2u);
  const SimulationStats over = simulate(cons, 1000, 2, 3);
  EXPECT_EQ(over.successes + over.failures + over.miscorrections, 1000u);
  EXPECT_EQ(simulate(cons, 1000, 2, 3), over);
  EXPECT_EQ(simulate(cons, 300, 7, 4).trials, 300u);
}

}  // namespace
}  // namespace drs
