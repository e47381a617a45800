#include "drs/rs.hpp"

#include <string>

#include "drs/error.hpp"
#include "drs/poly.hpp"

namespace drs {

RsCode::RsCode(Field field, int length, int z)
    : field_(std::move(field)), n_(length), z_(z) {
  if (z < 0 || length < 1) {
    throw Error(ErrorCode::InvalidCode, "code needs N >= 1 and z >= 0");
  }
  if (dimension() < 1) {
    throw Error(ErrorCode::InvalidCode, "N = " + std::to_string(length) + " with z = " +
                                            std::to_string(z) + " leaves k < 1");
  }
  if (field_.group_order() < static_cast<std::uint32_t>(length)) {
    throw Error(ErrorCode::InvalidCode,
                "GF(" + std::to_string(field_.size()) + ") has too few nonzero elements for N = " +
                    std::to_string(length));
  }
  points_.reserve(static_cast<std::size_t>(length));
  for (int j = 1; j <= length; ++j) points_.push_back(field_.alpha_pow(j));
}

Matrix generator_matrix(const RsCode& code) {
  const auto k = static_cast<std::size_t>(code.dimension());
  const auto n = static_cast<std::size_t>(code.length());
  Matrix g(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = code.field().alpha_pow(static_cast<long long>(i * (j + 1)));
  return g;
}

std::vector<Element> rs_encode(const RsCode& code, std::span<const Element> msg) {
  if (msg.size() != static_cast<std::size_t>(code.dimension())) {
    throw Error(ErrorCode::LengthMismatch,
                "message length " + std::to_string(msg.size()) + ", expected " +
                    std::to_string(code.dimension()));
  }
  const Polynomial m(std::vector<Element>(msg.begin(), msg.end()));
  std::vector<Element> out;
  out.reserve(code.eval_points().size());
  for (Element x : code.eval_points()) out.push_back(eval(code.field(), m, x));
  return out;
}

namespace {

// Solve Q(a_j) = y_j E(a_j) with E monic of degree e and deg Q <= e + k - 1.
// Unknown layout: e_0..e_{e-1}, then q_0..q_{e+k-1}; the monic term y_j a_j^e
// goes to the right-hand side.
std::optional<std::vector<Element>> bw_attempt(const RsCode& code,
                                               std::span<const Element> y, int e) {
  const Field& f = code.field();
  const int n = code.length();
  const int k = code.dimension();
  const int q_terms = e + k;
  const int unknowns = e + q_terms;

  Matrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(unknowns));
  std::vector<Element> rhs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Element x = code.eval_points()[static_cast<std::size_t>(j)];
    const Element yj = y[static_cast<std::size_t>(j)];
    Element power(1);
    for (int l = 0; l < q_terms; ++l) {
      if (l < e) a(j, l) = f.mul(yj, power);
      a(j, e + l) = power;
      if (l == e) rhs[static_cast<std::size_t>(j)] = f.mul(yj, power);
      power = f.mul(power, x);
    }
  }

  const auto sol = solve(f, a, rhs);
  if (!sol) return std::nullopt;

  std::vector<Element> e_coeffs(sol->begin(), sol->begin() + e);
  e_coeffs.push_back(Element(1));
  const Polynomial locator(std::move(e_coeffs));
  const Polynomial numerator(std::vector<Element>(sol->begin() + e, sol->end()));

  auto [quot, rem] = divmod(f, numerator, locator);
  if (!rem.is_zero() || quot.degree() >= k) return std::nullopt;
  return coeff_vector(quot, k);
}

}  // namespace

std::optional<std::vector<Element>> rs_decode_bw(const RsCode& code,
                                                 std::span<const Element> y) {
  if (y.size() != static_cast<std::size_t>(code.length())) {
    throw Error(ErrorCode::LengthMismatch,
                "received word length " + std::to_string(y.size()) + ", expected " +
                    std::to_string(code.length()));
  }
  for (int e = code.z(); e >= 0; --e) {
    if (auto m = bw_attempt(code, y, e)) return m;
  }
  return std::nullopt;
}

int hamming_distance(std::span<const Element> a, std::span<const Element> b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) d += a[i] != b[i];
  return d + static_cast<int>(a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
}

int hamming_weight(std::span<const Element> a) {
  int w = 0;
  for (Element v : a) w += !v.is_zero();
  return w;
}

RsCodebook::RsCodebook(const RsCode& code, std::uint64_t max_words) : code_(code) {
  const std::uint64_t q = code.field().size();
  count_ = 1;
  for (int i = 0; i < code.dimension(); ++i) {
    count_ *= q;
    if (count_ > max_words) {
      throw Error(ErrorCode::OracleTooLarge,
                  "q^k exceeds the brute-force limit of " + std::to_string(max_words));
    }
  }
  const auto n = static_cast<std::size_t>(code.length());
  words_.resize(count_ * n);
  for (std::uint64_t idx = 0; idx < count_; ++idx) {
    const auto word = rs_encode(code_, message(idx));
    std::copy(word.begin(), word.end(), words_.begin() + static_cast<std::ptrdiff_t>(idx * n));
  }
}

std::vector<Element> RsCodebook::message(std::uint64_t index) const {
  const std::uint64_t q = code_.field().size();
  std::vector<Element> msg(static_cast<std::size_t>(code_.dimension()));
  for (auto& digit : msg) {
    digit = Element(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return msg;
}

std::optional<std::vector<Element>> rs_decode_bruteforce(const RsCodebook& book,
                                                         std::span<const Element> y) {
  if (y.size() != static_cast<std::size_t>(book.code().length())) {
    throw Error(ErrorCode::LengthMismatch, "received word length mismatch");
  }
  const int radius = book.code().z();
  std::optional<std::uint64_t> found;
  for (std::uint64_t idx = 0; idx < book.size(); ++idx) {
    if (hamming_distance(book.codeword(idx), y) <= radius) {
      if (found) return std::nullopt;
      found = idx;
    }
  }
  if (!found) return std::nullopt;
  return book.message(*found);
}

std::optional<std::vector<Element>> rs_decode_bruteforce(const RsCode& code,
                                                         std::span<const Element> y) {
  return rs_decode_bruteforce(RsCodebook(code), y);
}

}  // namespace drs
