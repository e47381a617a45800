#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drs/gf.hpp"
#include "drs/matrix.hpp"

namespace drs {

/// [N, k, d] Reed-Solomon code with k = N - 2z and d = 2z + 1, evaluating
/// message polynomials at alpha^1, ..., alpha^N.
class RsCode {
 public:
  /// Throws InvalidCode unless k >= 1 and q - 1 >= N.
  RsCode(Field field, int length, int z);

  const Field& field() const { return field_; }
  int length() const { return n_; }
  int z() const { return z_; }
  int dimension() const { return n_ - 2 * z_; }
  int distance() const { return 2 * z_ + 1; }
  const std::vector<Element>& eval_points() const { return points_; }

 private:
  Field field_;
  int n_;
  int z_;
  std::vector<Element> points_;
};

/// k x N matrix with entry (i, j) = alpha^(i * j), i = 0..k-1, j = 1..N.
Matrix generator_matrix(const RsCode& code);

/// msg * G_RS, i.e. the evaluations of sum_i msg[i] x^i. Throws LengthMismatch.
std::vector<Element> rs_encode(const RsCode& code, std::span<const Element> msg);

/// Berlekamp-Welch unique decoding up to z errors. Returns the message
/// polynomial's coefficients, or nullopt when y is not within distance z of
/// any codeword.
std::optional<std::vector<Element>> rs_decode_bw(const RsCode& code,
                                                 std::span<const Element> y);

int hamming_distance(std::span<const Element> a, std::span<const Element> b);
int hamming_weight(std::span<const Element> a);

/// Every codeword of a small code, indexed by message (base-q digits, digit i
/// is msg[i]). Throws OracleTooLarge when q^k exceeds max_words.
class RsCodebook {
 public:
  static constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 20;

  explicit RsCodebook(const RsCode& code, std::uint64_t max_words = kMaxWords);

  const RsCode& code() const { return code_; }
  std::uint64_t size() const { return count_; }
  std::span<const Element> codeword(std::uint64_t index) const {
    const auto n = static_cast<std::size_t>(code_.length());
    return {words_.data() + index * n, n};
  }
  std::vector<Element> message(std::uint64_t index) const;

 private:
  RsCode code_;
  std::uint64_t count_;
  std::vector<Element> words_;
};

/// Exhaustive nearest-codeword oracle: the unique message whose codeword lies
/// within distance z of y, or nullopt if there is none (or more than one).
std::optional<std::vector<Element>> rs_decode_bruteforce(const RsCodebook& book,
                                                         std::span<const Element> y);
std::optional<std::vector<Element>> rs_decode_bruteforce(const RsCode& code,
                                                         std::span<const Element> y);

}  // namespace drs
