#pragma once

// Data-parallel loops used by simulation and exhaustive verification. Each
// kernel has an OpenMP version and a plain serial version; the serial ones
// are the reference the tests and benchmarks compare against. Both produce
// identical results for any thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drs/codec.hpp"
#include "drs/matrix.hpp"
#include "drs/rs.hpp"

namespace drs::kernels {

SimulationStats simulate_serial(const Decoder& decoder, std::uint64_t trials, int error_budget,
                                std::uint64_t seed);
SimulationStats simulate(const Decoder& decoder, std::uint64_t trials, int error_budget,
                         std::uint64_t seed);

/// Number of error patterns of weight <= max_weight on n symbols over GF(q),
/// saturating at UINT64_MAX.
std::uint64_t count_error_patterns(int n, std::uint32_t q, int max_weight);
/// Every such pattern, weight 0 first, then by position set and values.
std::vector<std::vector<SymbolError>> error_patterns(int n, std::uint32_t q, int max_weight);

struct CorrectionResult {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// Lowest flat index (message * patterns + pattern) that failed.
  std::optional<std::uint64_t> first_failure;
  friend bool operator==(const CorrectionResult&, const CorrectionResult&) = default;
};

/// decode(encode(m) + e) == m for every message and pattern pair.
CorrectionResult check_correction_serial(const Decoder& decoder,
                                         std::span<const SourceMessages> messages,
                                         std::span<const std::vector<SymbolError>> patterns);
CorrectionResult check_correction(const Decoder& decoder,
                                  std::span<const SourceMessages> messages,
                                  std::span<const std::vector<SymbolError>> patterns);

using DecodeResults = std::vector<std::optional<std::vector<Element>>>;
DecodeResults bruteforce_decode_batch_serial(const RsCodebook& book,
                                             std::span<const std::vector<Element>> words);
DecodeResults bruteforce_decode_batch(const RsCodebook& book,
                                      std::span<const std::vector<Element>> words);
DecodeResults bw_decode_batch(const RsCode& code, std::span<const std::vector<Element>> words);

/// Minimum weight over the nonzero vectors of the row space of g, found by
/// enumerating all q^R combinations (-1 for an empty matrix). Throws
/// OracleTooLarge when q^R exceeds limit.
int rowspace_min_weight_serial(const Field& field, const Matrix& g,
                               std::uint64_t limit = RsCodebook::kMaxWords);
int rowspace_min_weight(const Field& field, const Matrix& g,
                        std::uint64_t limit = RsCodebook::kMaxWords);

}  // namespace drs::kernels
