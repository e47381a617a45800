#include "drs/kernels.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "drs/error.hpp"

namespace drs::kernels {

namespace {

void tally(SimulationStats& s, TrialOutcome o) {
  switch (o) {
    case TrialOutcome::Success: ++s.successes; break;
    case TrialOutcome::Failure: ++s.failures; break;
    case TrialOutcome::Miscorrection: ++s.miscorrections; break;
  }
}

bool corrects(const Decoder& decoder, const SourceMessages& msgs,
              std::span<const SymbolError> pattern) {
  const auto c = encode_all(decoder.construction(), msgs);
  const auto decoded = decoder.decode(corrupt(c, pattern).y);
  return decoded && *decoded == msgs;
}

std::uint64_t combination_count(const Field& field, std::size_t rows, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    total *= field.size();
    if (total > limit) {
      throw Error(ErrorCode::OracleTooLarge,
                  "row space has more than " + std::to_string(limit) + " vectors");
    }
  }
  return total;
}

int combination_weight(const Field& field, const Matrix& g, std::uint64_t index,
                       std::vector<Element>& word) {
  std::fill(word.begin(), word.end(), Element(0));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const Element c(static_cast<std::uint32_t>(index % field.size()));
    index /= field.size();
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < g.cols(); ++j) word[j] += field.mul(c, g(r, j));
  }
  return hamming_weight(word);
}

}  // namespace

SimulationStats simulate_serial(const Decoder& decoder, std::uint64_t trials, int error_budget,
                                std::uint64_t seed) {
  SimulationStats s;
  s.trials = trials;
  s.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) tally(s, run_trial(decoder, t, error_budget, seed));
  return s;
}

SimulationStats simulate(const Decoder& decoder, std::uint64_t trials, int error_budget,
                         std::uint64_t seed) {
  std::uint64_t ok = 0, fail = 0, wrong = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : ok, fail, wrong)
  for (std::int64_t t = 0; t < n; ++t) {
    switch (run_trial(decoder, static_cast<std::uint64_t>(t), error_budget, seed)) {
      case TrialOutcome::Success: ++ok; break;
      case TrialOutcome::Failure: ++fail; break;
      case TrialOutcome::Miscorrection: ++wrong; break;
    }
  }
  return SimulationStats{trials, ok, fail, wrong, seed};
}

std::uint64_t count_error_patterns(int n, std::uint32_t q, int max_weight) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, w)
  std::uint64_t values = 1;  // (q - 1)^w
  for (int w = 0; w <= max_weight && w <= n; ++w) {
    if (w > 0) {
      binom = binom * static_cast<std::uint64_t>(n - w + 1) / static_cast<std::uint64_t>(w);
      if (values > kMax / (q - 1)) return kMax;
      values *= (q - 1);
    }
    if (binom != 0 && values > kMax / binom) return kMax;
    const std::uint64_t term = binom * values;
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

std::vector<std::vector<SymbolError>> error_patterns(int n, std::uint32_t q, int max_weight) {
  std::vector<std::vector<SymbolError>> out;
  for (int w = 0; w <= max_weight && w <= n; ++w) {
    // Positions as an increasing w-subset, values as a base-(q-1) counter.
    std::vector<int> pos(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      std::vector<std::uint32_t> val(static_cast<std::size_t>(w), 1);
      while (true) {
        std::vector<SymbolError> pattern;
        for (int i = 0; i < w; ++i) {
          pattern.push_back({pos[static_cast<std::size_t>(i)], Element(val[static_cast<std::size_t>(i)])});
        }
        out.push_back(std::move(pattern));
        int i = w - 1;
        while (i >= 0 && val[static_cast<std::size_t>(i)] == q - 1) val[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++val[static_cast<std::size_t>(i)];
      }
      int i = w - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - (w - 1 - i)) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < w; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

CorrectionResult check_correction_serial(const Decoder& decoder,
                                         std::span<const SourceMessages> messages,
                                         std::span<const std::vector<SymbolError>> patterns) {
  CorrectionResult res;
  for (std::size_t m = 0; m < messages.size(); ++m) {
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      ++res.checked;
      if (!corrects(decoder, messages[m], patterns[p])) {
        ++res.failures;
        if (!res.first_failure) res.first_failure = m * patterns.size() + p;
      }
    }
  }
  return res;
}

CorrectionResult check_correction(const Decoder& decoder,
                                  std::span<const SourceMessages> messages,
                                  std::span<const std::vector<SymbolError>> patterns) {
  const auto total = static_cast<std::int64_t>(messages.size() * patterns.size());
  const std::size_t np = patterns.size();
  std::uint64_t failures = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures) reduction(min : first)
  for (std::int64_t i = 0; i < total; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    if (!corrects(decoder, messages[idx / np], patterns[idx % np])) {
      ++failures;
      first = std::min(first, idx);
    }
  }
  CorrectionResult res;
  res.checked = static_cast<std::uint64_t>(total);
  res.failures = failures;
  if (failures > 0) res.first_failure = first;
  return res;
}

DecodeResults bruteforce_decode_batch_serial(const RsCodebook& book,
                                             std::span<const std::vector<Element>> words) {
  DecodeResults out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(rs_decode_bruteforce(book, w));
  return out;
}

DecodeResults bruteforce_decode_batch(const RsCodebook& book,
                                      std::span<const std::vector<Element>> words) {
  DecodeResults out(words.size());
  const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = rs_decode_bruteforce(book, words[static_cast<std::size_t>(i)]);
  }
  return out;
}

DecodeResults bw_decode_batch(const RsCode& code, std::span<const std::vector<Element>> words) {
  DecodeResults out(words.size());
  const auto n = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = rs_decode_bw(code, words[static_cast<std::size_t>(i)]);
  }
  return out;
}

int rowspace_min_weight_serial(const Field& field, const Matrix& g, std::uint64_t limit) {
  if (g.rows() == 0) return -1;
  const std::uint64_t total = combination_count(field, g.rows(), limit);
  std::vector<Element> word(g.cols());
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    best = std::min(best, combination_weight(field, g, idx, word));
  }
  return best;
}

int rowspace_min_weight(const Field& field, const Matrix& g, std::uint64_t limit) {
  if (g.rows() == 0) return -1;
  const auto total = static_cast<std::int64_t>(combination_count(field, g.rows(), limit));
  int best = std::numeric_limits<int>::max();
#pragma omp parallel reduction(min : best)
  {
    std::vector<Element> word(g.cols());
#pragma omp for schedule(static)
    for (std::int64_t idx = 1; idx < total; ++idx) {
      best = std::min(best, combination_weight(field, g, static_cast<std::uint64_t>(idx), word));
    }
  }
  return best;
}

}  // namespace drs::kernels
