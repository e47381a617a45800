#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace drs {

/// Bitmask over sources: bit i set means source S_{i+1} is in the set.
using SourceSet = std::uint8_t;

inline constexpr int kMaxSources = 3;

std::string format_source_set(SourceSet set);

/// A simple multiple access network: s <= 3 sources feeding N relays, each
/// relay with a unit link to the destination, z of them adversarial.
///
/// Sources are 0-based in the API; relays are 1-based (relay j is evaluated
/// at alpha^j in canonical position).
class SmanTopology {
 public:
  /// Validates shape and values. Throws TooManySources for s > 3 and
  /// InvalidTopology for any other violation (a relay with no source, non-0/1
  /// entries, negative rates, ragged rows).
  SmanTopology(int z, std::vector<int> rates, std::vector<std::vector<int>> adjacency);

  int z() const { return z_; }
  int sources() const { return static_cast<int>(rates_.size()); }
  int relays() const { return n_; }
  const std::vector<int>& rates() const { return rates_; }
  int rate(int source) const { return rates_[static_cast<std::size_t>(source)]; }
  int total_rate() const;
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  bool adjacent(int source, int relay) const {
    return adj_[static_cast<std::size_t>(source)][static_cast<std::size_t>(relay - 1)] != 0;
  }
  /// Set of sources feeding the given relay.
  SourceSet relay_sources(int relay) const;

  friend bool operator==(const SmanTopology&, const SmanTopology&) = default;

 private:
  int z_;
  int n_;
  std::vector<int> rates_;
  std::vector<std::vector<int>> adj_;
};

/// The relays split by exactly which sources feed them.
struct PartitionSets {
  std::array<std::vector<int>, 8> blocks;  // indexed by SourceSet; blocks[0] empty
  std::vector<std::vector<int>> zsets;     // Z_i: relays not fed by source i

  const std::vector<int>& block(SourceSet set) const { return blocks[set]; }
  int n(SourceSet set) const { return static_cast<int>(blocks[set].size()); }
};

PartitionSets partition(const SmanTopology& top);

/// Number of relays fed by at least one source of the (nonempty) set.
int cut_capacity(const SmanTopology& top, SourceSet subset);

struct CapacityCheck {
  bool ok = true;
  std::vector<SourceSet> violated;
};

/// Cut-set bounds r(S') <= C(S') - 2z over all nonempty subsets.
CapacityCheck in_capacity_region(const SmanTopology& top);

/// New source i is old source perm[i]; rates and adjacency rows move together.
SmanTopology permute_sources(const SmanTopology& top, const std::vector<int>& perm);

/// Appends zero-rate sources with no relays until there are three.
SmanTopology pad_to_three(const SmanTopology& top);

}  // namespace drs
