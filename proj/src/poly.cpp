#include "drs/poly.hpp"

#include <algorithm>
#include <string>

#include "drs/error.hpp"

namespace drs {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::linear(Element root) { return Polynomial({root, Element(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element eval(const Field& f, const Polynomial& p, Element x) {
  Element acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.mul(acc, x) + *it;
  return acc;
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(out));
}

Polynomial mul_poly(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Element> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += f.mul(x[i], y[j]);
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const Field& f, const Polynomial& p, Element c) {
  std::vector<Element> out(p.coeffs());
  for (auto& v : out) v = f.mul(v, c);
  return Polynomial(std::move(out));
}

DivResult divmod(const Field& f, const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroInverse, "polynomial division by zero");
  std::vector<Element> rem(num.coeffs());
  const int dd = den.degree();
  const int nd = num.degree();
  if (nd < dd) return {Polynomial(), num};

  std::vector<Element> quot(static_cast<std::size_t>(nd - dd + 1));
  const Element lead_inv = f.inv(den.leading());
  for (int i = nd; i >= dd; --i) {
    const Element c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= f.mul(c, den.coeffs()[static_cast<std::size_t>(j)]);
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial vanishing_poly(const Field& f, std::span<const int> indices) {
  // Build the product in place: multiply by (x + a) one factor at a time.
  std::vector<Element> acc{Element(1)};
  acc.reserve(indices.size() + 1);
  for (int i : indices) {
    const Element root = f.alpha_pow(i);
    acc.push_back(Element(0));
    for (std::size_t d = acc.size() - 1; d > 0; --d) {
      acc[d] = acc[d - 1] + f.mul(acc[d], root);
    }
    acc[0] = f.mul(acc[0], root);
  }
  return Polynomial(std::move(acc));
}

Polynomial scale_arg(const Field& f, const Polynomial& p, Element beta) {
  if (beta.is_zero()) throw Error(ErrorCode::ZeroScale, "argument scaling by zero");
  std::vector<Element> out(p.coeffs());
  Element power(1);
  for (auto& c : out) {
    c = f.mul(c, power);
    power = f.mul(power, beta);
  }
  return Polynomial(std::move(out));
}

Polynomial normalize_at(const Field& f, const Polynomial& p, int index) {
  const Element v = eval(f, p, f.alpha_pow(index));
  if (v.is_zero()) {
    throw Error(ErrorCode::VanishesAtPivot,
                "polynomial vanishes at alpha^" + std::to_string(index));
  }
  return scale(f, p, f.inv(v));
}

std::vector<Element> coeff_vector(const Polynomial& p, int k) {
  if (p.degree() >= k) {
    throw Error(ErrorCode::DegreeTooHigh, "degree " + std::to_string(p.degree()) +
                                              " does not fit in " + std::to_string(k) +
                                              " coefficients");
  }
  std::vector<Element> out(static_cast<std::size_t>(k));
  std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin());
  return out;
}

int count_nonzero_coeffs(const Polynomial& p) {
  return static_cast<int>(std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                        [](Element c) { return !c.is_zero(); }));
}

Polynomial interpolate(const Field& f, std::span<const Element> xs,
                       std::span<const Element> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::LengthMismatch, "interpolation needs as many values as points");
  }
  // Lagrange: sum_i y_i * prod_{j != i} (x - x_j) / (x_i - x_j).
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    Polynomial basis = Polynomial::constant(Element(1));
    Element denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = mul_poly(f, basis, Polynomial::linear(xs[j]));
      denom = f.mul(denom, xs[i] - xs[j]);
    }
    result = add(result, scale(f, basis, f.div(ys[i], denom)));
  }
  return result;
}

}  // namespace drs
