#pragma once

#include "mellin/rational.hpp"
#include "mellin/upoly.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace mellin {

/// Element sum_k q_k eps^k of the group ring Q[Z/m], where eps^m = 1 and no
/// cyclotomic reduction is applied. Maps into C through eps -> exp(2 pi i/m).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(int m) : m_(m), coords_(static_cast<std::size_t>(m), 0) {}
  Cyclotomic(int m, const Rational& scalar) : Cyclotomic(m) { coords_[0] = scalar; }
  Cyclotomic(int m, std::vector<Rational> coords);

  /// eps^k, any integer k.
  static Cyclotomic root_power(int m, long k);

  int modulus() const { return m_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic operator+(const Cyclotomic& other) const { return Cyclotomic(*this) += other; }
  Cyclotomic operator-(const Cyclotomic& other) const { return Cyclotomic(*this) -= other; }
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic operator*(const Rational& q) const;

  /// Multiplication by eps^k: a cyclic shift of the coordinates.
  Cyclotomic rotated(long k) const;

  /// Zero in Q[Z/m].
  bool is_zero() const;
  /// Zero after eps -> exp(2 pi i/m), decided exactly by reduction modulo Phi_m.
  bool is_zero_embedded() const;

  std::complex<double> to_complex() const;

  /// "[q_0, q_1, ..., q_{m-1}]".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

 private:
  void check(const Cyclotomic& other) const;
  int m_ = 0;
  std::vector<Rational> coords_;
};

/// Element of the number field Q(zeta_m) = Q[t]/Phi_m(t). Used as the exact
/// route for ranks of cyclotomic coefficient matrices.
class CyclotomicField {
 public:
  CyclotomicField() = default;
  CyclotomicField(std::shared_ptr<const UPoly> modulus, UPoly value);

  /// Reduction of a group-ring element: eps -> zeta_m.
  static CyclotomicField from_group_ring(std::shared_ptr<const UPoly> modulus, const Cyclotomic& element);

  bool is_zero() const { return value_.is_zero(); }
  CyclotomicField operator+(const CyclotomicField& other) const;
  CyclotomicField operator-(const CyclotomicField& other) const;
  CyclotomicField operator*(const CyclotomicField& other) const;
  CyclotomicField inverse() const;
  const UPoly& value() const { return value_; }

 private:
  std::shared_ptr<const UPoly> modulus_;
  UPoly value_;
};

}  // namespace mellin
