#include "mellin/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mellin {

UPoly::UPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator+(const UPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& other) const { return *this + other.scaled(-1); }

UPoly UPoly::operator*(const UPoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * other.coeffs_[b];
  return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  for (auto& q : out) q *= c;
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(coeffs_);
  const int dd = divisor.degree();
  if (degree() < dd) return {UPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int k = degree(); k >= dd; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / divisor.leading();
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= factor * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

bool UPoly::proportional_to(const UPoly& other, Rational* factor) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  if (degree() != other.degree()) return false;
  const Rational c = other.leading() / leading();
  if (scaled(c) != other) return false;
  if (factor) *factor = c;
  return true;
}

std::string UPoly::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mellin::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << mellin::to_string(magnitude) << '*';
    out << variable;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

std::pair<UPoly, UPoly> gcd_with_cofactor(const UPoly& a, const UPoly& b) {
  // extended Euclid tracking only the cofactor of a
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {r0, s0};
  const Rational inv = 1 / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv)};
}

UPoly cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
  UPoly result = UPoly::monomial(1, m) - UPoly::constant(1);
  for (int k = 1; k < m; ++k) {
    if (m % k != 0) continue;
    auto [q, r] = result.divmod(cyclotomic_polynomial(k));
    if (!r.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    result = q;
  }
  return result;
}

}  // namespace mellin
