#include "drs/gf.hpp"

#include <array>
#include <bit>
#include <string>

#include "drs/error.hpp"

namespace drs {

namespace {

// Index m holds a primitive polynomial of degree m (bit i = coeff of x^i).
constexpr std::array<std::uint32_t, 17> kDefaultPolys = {
    0,       0x3,    0x7,    0xB,    0x13,   0x25,   0x43,   0x89,   0x11D,
    0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
};

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroLog: return "ZeroLog";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::VanishesAtPivot: return "VanishesAtPivot";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::InvalidTopology: return "InvalidTopology";
    case ErrorCode::TooManySources: return "TooManySources";
    case ErrorCode::NotInCapacityRegion: return "NotInCapacityRegion";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::CaseClassificationFailure: return "CaseClassificationFailure";
    case ErrorCode::DegreeBoundViolation: return "DegreeBoundViolation";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::MaskViolation: return "MaskViolation";
    case ErrorCode::DuplicatePosition: return "DuplicatePosition";
    case ErrorCode::ZeroErrorValue: return "ZeroErrorValue";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::uint32_t Field::default_primitive_poly(int m) {
  if (m < 1 || m > 16) {
    throw Error(ErrorCode::InvalidField,
                "extension degree must be in [1, 16], got " + std::to_string(m));
  }
  return kDefaultPolys[static_cast<std::size_t>(m)];
}

Field Field::for_length(int n) {
  int m = 1;
  while (m < 16 && (1u << m) < static_cast<std::uint32_t>(n) + 1) ++m;
  return Field(m);
}

Field::Field(int m) : Field(m, default_primitive_poly(m)) {}

Field::Field(int m, std::uint32_t primitive_poly) : m_(m), poly_(primitive_poly) {
  if (m < 1 || m > 16) {
    throw Error(ErrorCode::InvalidField,
                "extension degree must be in [1, 16], got " + std::to_string(m));
  }
  if (std::bit_width(primitive_poly) != static_cast<unsigned>(m) + 1) {
    throw Error(ErrorCode::InvalidField,
                "primitive polynomial " + std::to_string(primitive_poly) +
                    " does not have degree " + std::to_string(m));
  }
  q_ = 1u << m;
  const std::uint32_t n = q_ - 1;

  auto tables = std::make_shared<Tables>();
  tables->exp.resize(2 * static_cast<std::size_t>(n));
  tables->log.assign(q_, -1);

  // Walk the powers of x; the polynomial is primitive iff x has order q - 1.
  std::uint32_t v = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (tables->log[v] != -1) {
      throw Error(ErrorCode::InvalidField,
                  "polynomial " + std::to_string(primitive_poly) +
                      " is not primitive over GF(2)");
    }
    tables->exp[i] = static_cast<std::uint16_t>(v);
    tables->log[v] = static_cast<std::int32_t>(i);
    v <<= 1;
    if (v & q_) v ^= primitive_poly;
  }
  if (v != 1) {
    throw Error(ErrorCode::InvalidField,
                "polynomial " + std::to_string(primitive_poly) +
                    " is not primitive over GF(2)");
  }
  for (std::uint32_t i = n; i < 2 * n; ++i) tables->exp[i] = tables->exp[i - n];
  tables_ = std::move(tables);
}

Element Field::element(std::uint32_t value) const {
  if (value >= q_) {
    throw Error(ErrorCode::InvalidField, "value " + std::to_string(value) +
                                             " is not an element of GF(" +
                                             std::to_string(q_) + ")");
  }
  return Element(value);
}

Element Field::alpha() const { return Element(tables_->exp[1 % (q_ - 1)]); }

Element Field::alpha_pow(long long e) const {
  const long long n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  return Element(tables_->exp[static_cast<std::size_t>(r)]);
}

Element Field::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return Element(0);
  const auto& t = *tables_;
  return Element(t.exp[static_cast<std::size_t>(t.log[a.value()] + t.log[b.value()])]);
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  const auto& t = *tables_;
  const std::int32_t n = static_cast<std::int32_t>(q_ - 1);
  return Element(t.exp[static_cast<std::size_t>((n - t.log[a.value()]) % n)]);
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, long long e) const {
  if (a.is_zero()) {
    if (e < 0) throw Error(ErrorCode::ZeroInverse, "negative power of zero");
    return e == 0 ? one() : zero();
  }
  return alpha_pow(static_cast<long long>(tables_->log[a.value()]) * (e % static_cast<long long>(q_ - 1)));
}

int Field::discrete_log(Element a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroLog, "discrete log of zero");
  return tables_->log[a.value()];
}

}  // namespace drs
