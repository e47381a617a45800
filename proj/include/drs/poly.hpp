#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "drs/gf.hpp"

namespace drs {

/// Univariate polynomial over a Field, coefficients stored low-to-high.
///
/// Always canonical: no trailing zero coefficient, so the zero polynomial is
/// the empty vector and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);

  static Polynomial constant(Element c) { return Polynomial({c}); }
  /// x - root (= x + root in characteristic 2).
  static Polynomial linear(Element root);

  const std::vector<Element>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Element coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Element(0);
  }
  Element leading() const { return coeffs_.empty() ? Element(0) : coeffs_.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Element> coeffs_;
};

Element eval(const Field& f, const Polynomial& p, Element x);
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul_poly(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial scale(const Field& f, const Polynomial& p, Element c);

struct DivResult {
  Polynomial quotient;
  Polynomial remainder;
};
/// Long division; throws ZeroInverse for a zero divisor.
DivResult divmod(const Field& f, const Polynomial& num, const Polynomial& den);

/// prod_{i in indices} (x - alpha^i). Exponents wrap modulo q - 1, so an index
/// i >= q - 1 names the same root as i mod (q - 1).
Polynomial vanishing_poly(const Field& f, std::span<const int> indices);

/// p(beta x): coefficient l is multiplied by beta^l. Throws ZeroScale if beta = 0.
Polynomial scale_arg(const Field& f, const Polynomial& p, Element beta);

/// p / p(alpha^index). Throws VanishesAtPivot when p(alpha^index) = 0.
Polynomial normalize_at(const Field& f, const Polynomial& p, int index);

/// Coefficients padded with zeros to length k; throws DegreeTooHigh if deg p >= k.
std::vector<Element> coeff_vector(const Polynomial& p, int k);

int count_nonzero_coeffs(const Polynomial& p);

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// The xs must be distinct.
Polynomial interpolate(const Field& f, std::span<const Element> xs,
                       std::span<const Element> ys);

}  // namespace drs
