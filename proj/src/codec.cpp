#include "drs/codec.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "drs/error.hpp"
#include "drs/kernels.hpp"
#include "drs/rs.hpp"

namespace drs {

std::vector<Element> concatenate(const Construction& cons, const SourceMessages& msgs) {
  const int s = cons.topology.sources();
  if (msgs.per_source.size() != static_cast<std::size_t>(s)) {
    throw Error(ErrorCode::LengthMismatch, "expected messages for " + std::to_string(s) +
                                               " sources, got " +
                                               std::to_string(msgs.per_source.size()));
  }
  for (int i = 0; i < s; ++i) {
    if (msgs.per_source[static_cast<std::size_t>(i)].size() !=
        static_cast<std::size_t>(cons.topology.rate(i))) {
      throw Error(ErrorCode::LengthMismatch,
                  "message of S" + std::to_string(i + 1) + " has " +
                      std::to_string(msgs.per_source[static_cast<std::size_t>(i)].size()) +
                      " symbols, rate is " + std::to_string(cons.topology.rate(i)));
    }
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(s), 0);
  std::vector<Element> out;
  out.reserve(cons.row_owner.size());
  for (int owner : cons.row_owner) {
    const auto o = static_cast<std::size_t>(owner);
    out.push_back(msgs.per_source[o][next[o]++]);
  }
  return out;
}

SourceMessages split(const Construction& cons, std::span<const Element> row_symbols) {
  if (row_symbols.size() != cons.row_owner.size()) {
    throw Error(ErrorCode::LengthMismatch, "row vector length differs from R");
  }
  SourceMessages msgs;
  msgs.per_source.resize(static_cast<std::size_t>(cons.topology.sources()));
  for (std::size_t r = 0; r < row_symbols.size(); ++r) {
    msgs.per_source[static_cast<std::size_t>(cons.row_owner[r])].push_back(row_symbols[r]);
  }
  return msgs;
}

Element relay_encode(const Construction& cons, const SourceMessages& msgs, int position) {
  if (position < 1 || position > cons.code.length()) {
    throw Error(ErrorCode::IndexOutOfRange, "relay position " + std::to_string(position) +
                                                " out of range");
  }
  const auto m = concatenate(cons, msgs);
  const Field& f = cons.code.field();
  Element acc(0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    acc += f.mul(m[r], cons.G(r, static_cast<std::size_t>(position - 1)));
  }
  return acc;
}

std::vector<Element> encode_all(const Construction& cons, const SourceMessages& msgs) {
  const auto m = concatenate(cons, msgs);
  if (m.empty()) return std::vector<Element>(static_cast<std::size_t>(cons.code.length()));
  return vec_mul(cons.code.field(), m, cons.G);
}

ReceivedWord corrupt(std::span<const Element> codeword, std::span<const SymbolError> errors) {
  ReceivedWord rw{std::vector<Element>(codeword.begin(), codeword.end()),
                  std::vector<Element>(codeword.size())};
  for (const auto& e : errors) {
    if (e.position < 1 || static_cast<std::size_t>(e.position) > codeword.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "error position " + std::to_string(e.position) + " out of range");
    }
    if (e.value.is_zero()) {
      throw Error(ErrorCode::ZeroErrorValue,
                  "error at position " + std::to_string(e.position) + " has value 0");
    }
    const auto i = static_cast<std::size_t>(e.position - 1);
    if (!rw.error[i].is_zero()) {
      throw Error(ErrorCode::DuplicatePosition,
                  "position " + std::to_string(e.position) + " corrupted twice");
    }
    rw.error[i] = e.value;
    rw.y[i] += e.value;
  }
  return rw;
}

Decoder::Decoder(const Construction& cons) : cons_(&cons) {
  if (cons.T.rows() == 0) return;
  const Field& f = cons.code.field();
  pivots_ = row_echelon_pivots(f, cons.T).pivots;
  if (pivots_.size() != cons.T.rows()) {
    throw Error(ErrorCode::RankDeficient, "T does not have full row rank");
  }
  t_tilde_inv_ = invert(f, select_columns(cons.T, pivots_));
}

std::optional<std::vector<Element>> Decoder::decode_rows(std::span<const Element> y) const {
  const Construction& cons = *cons_;
  const auto m_rs = rs_decode_bw(cons.code, y);
  if (!m_rs) return std::nullopt;
  if (cons.T.rows() == 0) {
    const bool zero = std::all_of(m_rs->begin(), m_rs->end(), [](Element e) { return e.is_zero(); });
    return zero ? std::optional<std::vector<Element>>(std::vector<Element>{}) : std::nullopt;
  }
  const Field& f = cons.code.field();
  std::vector<Element> sub;
  sub.reserve(pivots_.size());
  for (std::size_t p : pivots_) sub.push_back((*m_rs)[p]);
  auto m = vec_mul(f, sub, t_tilde_inv_);
  // m_RS outside the row space of T means the nearest RS codeword is not a
  // codeword of the distributed code.
  if (vec_mul(f, m, cons.T) != *m_rs) return std::nullopt;
  return m;
}

std::optional<SourceMessages> Decoder::decode(std::span<const Element> y) const {
  auto rows = decode_rows(y);
  if (!rows) return std::nullopt;
  return split(*cons_, *rows);
}

std::optional<SourceMessages> decode(const Construction& cons, std::span<const Element> y) {
  return Decoder(cons).decode(y);
}

template <typename Rng>
SourceMessages random_messages(const Construction& cons, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> sym(0, cons.code.field().size() - 1);
  SourceMessages msgs;
  for (int i = 0; i < cons.topology.sources(); ++i) {
    std::vector<Element> m(static_cast<std::size_t>(cons.topology.rate(i)));
    for (auto& e : m) e = Element(sym(rng));
    msgs.per_source.push_back(std::move(m));
  }
  return msgs;
}

template SourceMessages random_messages<std::mt19937_64>(const Construction&, std::mt19937_64&);

TrialOutcome run_trial(const Decoder& decoder, std::uint64_t trial, int error_budget,
                       std::uint64_t seed) {
  const Construction& cons = decoder.construction();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);

  const SourceMessages msgs = random_messages(cons, rng);
  const auto c = encode_all(cons, msgs);

  const int n = cons.code.length();
  std::vector<int> positions(static_cast<std::size_t>(n));
  std::iota(positions.begin(), positions.end(), 1);
  // Partial Fisher-Yates picks error_budget distinct positions.
  const int budget = std::min(error_budget, n);
  std::vector<SymbolError> errors;
  std::uniform_int_distribution<std::uint32_t> nonzero(1, cons.code.field().size() - 1);
  for (int i = 0; i < budget; ++i) {
    std::uniform_int_distribution<int> pick(i, n - 1);
    std::swap(positions[static_cast<std::size_t>(i)],
              positions[static_cast<std::size_t>(pick(rng))]);
    errors.push_back({positions[static_cast<std::size_t>(i)], Element(nonzero(rng))});
  }
  const ReceivedWord rw = corrupt(c, errors);
  const auto decoded = decoder.decode(rw.y);
  if (!decoded) return TrialOutcome::Failure;
  return *decoded == msgs ? TrialOutcome::Success : TrialOutcome::Miscorrection;
}

SimulationStats simulate(const Construction& cons, std::uint64_t trials, int error_budget,
                         std::uint64_t seed) {
  return kernels::simulate(Decoder(cons), trials, error_budget, seed);
}

}  // namespace drs
