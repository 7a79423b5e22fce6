#pragma once

#include "mellin/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mellin {

/// Dense univariate polynomial with rational coefficients, low degree first.
/// The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  UPoly operator+(const UPoly& other) const;
  UPoly operator-(const UPoly& other) const;
  UPoly operator*(const UPoly& other) const;
  UPoly scaled(const Rational& c) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }

  /// Some c with other == c * this, when one exists.
  bool proportional_to(const UPoly& other, Rational* factor = nullptr) const;

  /// "4*x^3 - 27".
  std::string to_string(const std::string& variable = "x") const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Returns (g, s) with g = gcd(a, b) monic and s*a = g (mod b).
std::pair<UPoly, UPoly> gcd_with_cofactor(const UPoly& a, const UPoly& b);

/// m-th cyclotomic polynomial, computed by dividing x^m - 1 by all
/// Phi_k with k | m, k < m.
UPoly cyclotomic_polynomial(int m);

}  // namespace mellin
