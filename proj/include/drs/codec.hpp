#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drs/construct.hpp"
#include "drs/gf.hpp"

namespace drs {

/// One message vector per original source; source i has rate r_i symbols.
struct SourceMessages {
  std::vector<std::vector<Element>> per_source;
  friend bool operator==(const SourceMessages&, const SourceMessages&) = default;
};

/// Row-ordered message vector m with c = m G. Throws LengthMismatch if a
/// source's message length differs from its rate.
std::vector<Element> concatenate(const Construction& cons, const SourceMessages& msgs);
/// Inverse of concatenate.
SourceMessages split(const Construction& cons, std::span<const Element> row_symbols);

/// Symbol sent by the relay at canonical position (1-based): m . g^(position).
Element relay_encode(const Construction& cons, const SourceMessages& msgs, int position);
/// All relay symbols, i.e. m G, in canonical order.
std::vector<Element> encode_all(const Construction& cons, const SourceMessages& msgs);

struct SymbolError {
  int position = 0;  // canonical, 1-based
  Element value;
};

struct ReceivedWord {
  std::vector<Element> y;
  std::vector<Element> error;  // y - c
};

/// y = c + e. Throws DuplicatePosition, ZeroErrorValue or IndexOutOfRange.
ReceivedWord corrupt(std::span<const Element> codeword, std::span<const SymbolError> errors);

/// Destination decoder: Berlekamp-Welch to an RS message m_RS, then
/// m = m_RS~ T~^-1 over the pivot columns of T. Precomputes T~^-1 once.
class Decoder {
 public:
  explicit Decoder(const Construction& cons);

  /// nullopt when y is not within distance z of the code, or when the RS
  /// codeword found is not in the row space of T.
  std::optional<SourceMessages> decode(std::span<const Element> y) const;
  std::optional<std::vector<Element>> decode_rows(std::span<const Element> y) const;

  const Construction& construction() const { return *cons_; }

 private:
  const Construction* cons_;
  std::vector<std::size_t> pivots_;
  Matrix t_tilde_inv_;
};

std::optional<SourceMessages> decode(const Construction& cons, std::span<const Element> y);

/// Uniformly random messages for every source.
template <typename Rng>
SourceMessages random_messages(const Construction& cons, Rng& rng);

struct SimulationStats {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;        // decoder reported failure
  std::uint64_t miscorrections = 0;  // decoder returned the wrong messages
  std::uint64_t seed = 0;
  friend bool operator==(const SimulationStats&, const SimulationStats&) = default;
};

enum class TrialOutcome { Success, Failure, Miscorrection };

/// One randomized trial: random messages, an error pattern of exactly
/// error_budget symbols at random positions with random nonzero values,
/// encode, corrupt, decode. Depends only on (seed, trial).
TrialOutcome run_trial(const Decoder& decoder, std::uint64_t trial, int error_budget,
                       std::uint64_t seed);

/// Runs trials in parallel; results are independent of thread count.
SimulationStats simulate(const Construction& cons, std::uint64_t trials, int error_budget,
                         std::uint64_t seed);

}  // namespace drs
