#include "drs/sman.hpp"

#include <algorithm>
#include <numeric>

#include "drs/error.hpp"

namespace drs {

std::string format_source_set(SourceSet set) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    if (!(set & (1u << i))) continue;
    if (!first) out += ",";
    out += "S" + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

SmanTopology::SmanTopology(int z, std::vector<int> rates,
                           std::vector<std::vector<int>> adjacency)
    : z_(z), n_(0), rates_(std::move(rates)), adj_(std::move(adjacency)) {
  if (rates_.size() > static_cast<std::size_t>(kMaxSources)) {
    throw Error(ErrorCode::TooManySources,
                "more than three sources unsupported: the distributed Reed-Solomon "
                "construction is only known to reach capacity for up to three sources");
  }
  if (rates_.empty()) throw Error(ErrorCode::InvalidTopology, "topology has no sources");
  if (adj_.size() != rates_.size()) {
    throw Error(ErrorCode::InvalidTopology, "adjacency has " + std::to_string(adj_.size()) +
                                                " rows but there are " +
                                                std::to_string(rates_.size()) + " rates");
  }
  if (z_ < 0) throw Error(ErrorCode::InvalidTopology, "z must be non-negative");
  for (int r : rates_) {
    if (r < 0) throw Error(ErrorCode::InvalidTopology, "rates must be non-negative");
  }
  n_ = static_cast<int>(adj_.front().size());
  if (n_ < 1) throw Error(ErrorCode::InvalidTopology, "topology has no relays");
  for (const auto& row : adj_) {
    if (row.size() != static_cast<std::size_t>(n_)) {
      throw Error(ErrorCode::InvalidTopology, "adjacency rows differ in length");
    }
    for (int v : row) {
      if (v != 0 && v != 1) throw Error(ErrorCode::InvalidTopology, "adjacency entries must be 0 or 1");
    }
  }
  for (int j = 1; j <= n_; ++j) {
    if (relay_sources(j) == 0) {
      throw Error(ErrorCode::InvalidTopology,
                  "relay " + std::to_string(j) + " is not fed by any source");
    }
  }
}

int SmanTopology::total_rate() const {
  return std::accumulate(rates_.begin(), rates_.end(), 0);
}

SourceSet SmanTopology::relay_sources(int relay) const {
  SourceSet set = 0;
  for (int i = 0; i < sources(); ++i) {
    if (adjacent(i, relay)) set |= static_cast<SourceSet>(1u << i);
  }
  return set;
}

PartitionSets partition(const SmanTopology& top) {
  PartitionSets ps;
  ps.zsets.resize(static_cast<std::size_t>(top.sources()));
  for (int j = 1; j <= top.relays(); ++j) {
    const SourceSet set = top.relay_sources(j);
    ps.blocks[set].push_back(j);
    for (int i = 0; i < top.sources(); ++i) {
      if (!(set & (1u << i))) ps.zsets[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return ps;
}

int cut_capacity(const SmanTopology& top, SourceSet subset) {
  int c = 0;
  for (int j = 1; j <= top.relays(); ++j) c += (top.relay_sources(j) & subset) != 0;
  return c;
}

CapacityCheck in_capacity_region(const SmanTopology& top) {
  CapacityCheck check;
  const int full = (1 << top.sources()) - 1;
  for (int set = 1; set <= full; ++set) {
    int rate = 0;
    for (int i = 0; i < top.sources(); ++i) {
      if (set & (1 << i)) rate += top.rate(i);
    }
    if (rate > cut_capacity(top, static_cast<SourceSet>(set)) - 2 * top.z()) {
      check.ok = false;
      check.violated.push_back(static_cast<SourceSet>(set));
    }
  }
  return check;
}

SmanTopology permute_sources(const SmanTopology& top, const std::vector<int>& perm) {
  std::vector<int> sorted(perm);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(top.sources()));
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw Error(ErrorCode::InvalidTopology, "not a permutation of the sources");
  }
  std::vector<int> rates;
  std::vector<std::vector<int>> adj;
  for (int p : perm) {
    rates.push_back(top.rate(p));
    adj.push_back(top.adjacency()[static_cast<std::size_t>(p)]);
  }
  return SmanTopology(top.z(), std::move(rates), std::move(adj));
}

SmanTopology pad_to_three(const SmanTopology& top) {
  std::vector<int> rates(top.rates());
  std::vector<std::vector<int>> adj(top.adjacency());
  while (rates.size() < static_cast<std::size_t>(kMaxSources)) {
    rates.push_back(0);
    adj.emplace_back(static_cast<std::size_t>(top.relays()), 0);
  }
  return SmanTopology(top.z(), std::move(rates), std::move(adj));
}

}  // namespace drs
