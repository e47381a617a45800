#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace drs {

/// An element of GF(2^m) in polynomial basis: bit i is the coefficient of x^i.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t value)
      : value_(static_cast<std::uint16_t>(value)) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  // Characteristic 2: addition and subtraction are both XOR.
  friend constexpr Element operator+(Element a, Element b) {
    return Element(a.value_ ^ b.value_);
  }
  friend constexpr Element operator-(Element a, Element b) { return a + b; }
  constexpr Element& operator+=(Element b) {
    value_ ^= b.value_;
    return *this;
  }
  constexpr Element& operator-=(Element b) { return *this += b; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint16_t value_ = 0;
};

/// GF(2^m), 1 <= m <= 16, with primitive element alpha = x mod primitive_poly.
///
/// Multiplication goes through log/antilog tables built once at construction
/// and shared between copies, so a Field is cheap to pass by value.
class Field {
 public:
  /// Uses the built-in primitive polynomial for m.
  explicit Field(int m);
  /// Throws InvalidField unless primitive_poly has degree m and is primitive.
  Field(int m, std::uint32_t primitive_poly);

  static std::uint32_t default_primitive_poly(int m);
  /// Smallest field with q - 1 >= n, i.e. enough nonzero points for length n.
  static Field for_length(int n);

  int m() const { return m_; }
  std::uint32_t primitive_poly() const { return poly_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t group_order() const { return q_ - 1; }

  /// Throws InvalidField if value >= q.
  Element element(std::uint32_t value) const;
  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element alpha() const;
  /// alpha^e; e may be negative or exceed q - 2.
  Element alpha_pow(long long e) const;

  Element add(Element a, Element b) const { return a + b; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, long long e) const;
  /// Exponent e in [0, q-1) with alpha^e == a; throws ZeroLog for 0.
  int discrete_log(Element a) const;

  bool contains(Element a) const { return a.value() < q_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.m_ == b.m_ && a.poly_ == b.poly_;
  }

 private:
  struct Tables {
    std::vector<std::uint16_t> exp;  // length 2(q-1), exp[i] = alpha^i
    std::vector<std::int32_t> log;   // length q, log[0] = -1
  };

  int m_;
  std::uint32_t poly_;
  std::uint32_t q_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace drs
