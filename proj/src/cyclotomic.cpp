#include "mellin/cyclotomic.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mellin {

Cyclotomic::Cyclotomic(int m, std::vector<Rational> coords) : m_(m), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != m) throw std::invalid_argument("cyclotomic coordinate count must equal m");
}

Cyclotomic Cyclotomic::root_power(int m, long k) {
  Cyclotomic out(m);
  out.coords_[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return out;
}

void Cyclotomic::check(const Cyclotomic& other) const {
  if (other.m_ != m_) throw std::invalid_argument("cyclotomic modulus mismatch");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check(other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check(other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& q : out.coords_) q = -q;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  check(other);
  Cyclotomic out(m_);
  const std::size_t m = coords_.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (coords_[a] == 0) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (other.coords_[b] == 0) continue;
      out.coords_[(a + b) % m] += coords_[a] * other.coords_[b];
    }
  }
  return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic out(*this);
  for (auto& c : out.coords_) c *= q;
  return out;
}

Cyclotomic Cyclotomic::rotated(long k) const {
  Cyclotomic out(m_);
  const long m = m_;
  const long shift = ((k % m) + m) % m;
  for (long a = 0; a < m; ++a) out.coords_[static_cast<std::size_t>((a + shift) % m)] = coords_[static_cast<std::size_t>(a)];
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : coords_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_zero_embedded() const {
  if (is_zero()) return true;
  return (UPoly(coords_) % cyclotomic_polynomial(m_)).is_zero();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> total = 0;
  for (int k = 0; k < m_; ++k) {
    const double q = coords_[static_cast<std::size_t>(k)].get_d();
    if (q == 0) continue;
    total += q * std::polar(1.0, 2.0 * std::numbers::pi * k / m_);
  }
  return total;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out << ", ";
    out << mellin::to_string(coords_[k]);
  }
  out << ']';
  return out.str();
}

CyclotomicField::CyclotomicField(std::shared_ptr<const UPoly> modulus, UPoly value)
    : modulus_(std::move(modulus)), value_(std::move(value)) {
  if (value_.degree() >= modulus_->degree()) value_ = value_ % *modulus_;
}

CyclotomicField CyclotomicField::from_group_ring(std::shared_ptr<const UPoly> modulus, const Cyclotomic& element) {
  return CyclotomicField(std::move(modulus), UPoly(element.coords()));
}

CyclotomicField CyclotomicField::operator+(const CyclotomicField& other) const {
  return CyclotomicField(modulus_, value_ + other.value_);
}

CyclotomicField CyclotomicField::operator-(const CyclotomicField& other) const {
  return CyclotomicField(modulus_, value_ - other.value_);
}

CyclotomicField CyclotomicField::operator*(const CyclotomicField& other) const {
  return CyclotomicField(modulus_, value_ * other.value_);
}

CyclotomicField CyclotomicField::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  auto [g, s] = gcd_with_cofactor(value_, *modulus_);
  // Phi_m is irreducible, so any nonzero reduced element is coprime to it
  if (g.degree() != 0) throw std::logic_error("non-invertible element in Q(zeta)");
  return CyclotomicField(modulus_, s);
}

}  // namespace mellin
