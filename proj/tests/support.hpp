#pragma once

// Oracles and golden data shared by the test binaries. Field products are
// computed bit by bit, and the reference matrices are spelled in power
// notation so they can be compared entry by entry.

#include <cstdint>
#include <string>
#include <utility>
#include <string_view>
#include <vector>

#include "drs/construct.hpp"
#include "drs/gf.hpp"
#include "drs/matrix.hpp"
#include "drs/sman.hpp"

namespace drs::test {

// Shift-and-add product reduced modulo poly.
inline std::uint32_t oracle_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int m) {
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << m)) a ^= poly;
  }
  return acc;
}

// alpha^e by repeated multiply-by-x reduction.
inline std::uint32_t oracle_alpha_pow(long long e, std::uint32_t poly, int m) {
  const long long order = (1LL << m) - 1;
  e %= order;
  if (e < 0) e += order;
  std::uint32_t v = 1;
  for (long long i = 0; i < e; ++i) {
    v <<= 1;
    if (v & (1u << m)) v ^= poly;
  }
  return v;
}

// "0", "1", "a", "a^e" in the given field, via the oracle.
inline Element pw(const Field& f, std::string_view s) {
  if (s == "0") return Element(0);
  if (s == "1") return Element(1);
  long long e = 1;
  if (s.size() > 2 && s.substr(0, 2) == "a^") e = std::stoll(std::string(s.substr(2)));
  return Element(oracle_alpha_pow(e, f.primitive_poly(), f.m()));
}

inline Matrix pw_matrix(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    std::vector<Element> row;
    for (const auto& s : r) row.push_back(pw(f, s));
    out.push_back(row);
  }
  return Matrix::from_rows(out);
}

inline std::vector<Element> pw_vector(const Field& f, const std::vector<std::string>& v) {
  std::vector<Element> out;
  for (const auto& s : v) out.push_back(pw(f, s));
  return out;
}

// Gauss-Jordan rank, written independently of the library's elimination.
inline std::size_t oracle_rank(const Field& f, Matrix a) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const Element factor = f.div(a(r, c), a(rank, c));
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) += f.mul(factor, a(rank, j));
    }
    ++rank;
  }
  return rank;
}

// GF(8) with x^3 + x + 1.
inline Field gf8() { return Field(3, 0xB); }

// Three sources, seven relays: N_1 = {1}, N_23 = {2,3}, N_13 = {4,5}, N_12 = {6,7}.
inline std::vector<std::vector<int>> example_adjacency() {
  return {{1, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 1, 1, 1, 1, 0, 0}};
}

inline SmanTopology example_network(std::vector<int> rates, int z = 1) {
  return SmanTopology(z, std::move(rates), example_adjacency());
}

// Reference code for the seven-relay network below with r = (3, 1, 1),
// z = 1: V holds the c(x) p(a^j x) rows, T = [s-row; V] and G = T G_RS.
inline Matrix reference_v(const Field& f) {
  return pw_matrix(f, {{"a", "a^4", "1", "a^2", "1"},
                       {"a", "a^2", "a^4", "a^3", "a^3"},
                       {"a", "0", "1", "a^3", "a^6"},
                       {"a", "a^6", "a^5", "a", "a^5"}});
}

inline Matrix reference_t(const Field& f) {
  return pw_matrix(f, {{"a^5", "a", "a^6", "0", "0"},
                       {"a", "a^4", "1", "a^2", "1"},
                       {"a", "a^2", "a^4", "a^3", "a^3"},
                       {"a", "0", "1", "a^3", "a^6"},
                       {"a", "a^6", "a^5", "a", "a^5"}});
}

inline Matrix reference_g(const Field& f) {
  return pw_matrix(f, {{"1", "a^5", "a^4", "1", "a^4", "0", "0"},
                       {"0", "1", "a^5", "a^5", "a^3", "0", "0"},
                       {"0", "a^2", "a^3", "a^6", "0", "0", "0"},
                       {"0", "1", "a^4", "0", "0", "0", "a^6"},
                       {"0", "0", "0", "0", "a^2", "a^3", "a^6"}});
}

// Topology whose partition blocks have the given sizes, keyed by source
// mask (bit i = source i + 1). Relays are laid out mask by mask.
inline SmanTopology from_blocks(const std::vector<std::pair<int, int>>& blocks,
                                std::vector<int> rates, int z) {
  std::vector<std::vector<int>> adj(rates.size());
  for (const auto& [mask, count] : blocks) {
    for (int c = 0; c < count; ++c) {
      for (std::size_t s = 0; s < rates.size(); ++s) adj[s].push_back((mask >> s) & 1);
    }
  }
  return SmanTopology(z, std::move(rates), std::move(adj));
}

}  // namespace drs::test
