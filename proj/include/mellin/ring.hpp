#pragma once

#include "mellin/cyclotomic.hpp"
#include "mellin/rational.hpp"

#include <complex>
#include <string>

namespace mellin {

using Complex = std::complex<double>;

enum class RingKind { exact_rational, cyclotomic_group_ring, complex_float };

std::string ring_name(RingKind kind);

/// Uniform access to the three coefficient rings. The int argument is the
/// group-ring modulus m; it is ignored by the other two rings.
template <typename C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr RingKind kind = RingKind::exact_rational;
  static Rational from_rational(const Rational& q, int) { return q; }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Complex to_complex(const Rational& c, int) { return c.get_d(); }
};

template <>
struct RingTraits<Cyclotomic> {
  static constexpr RingKind kind = RingKind::cyclotomic_group_ring;
  static Cyclotomic from_rational(const Rational& q, int m) { return Cyclotomic(m, q); }
  static bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
  static Complex to_complex(const Cyclotomic& c, int) { return c.to_complex(); }
};

template <>
struct RingTraits<Complex> {
  static constexpr RingKind kind = RingKind::complex_float;
  static Complex from_rational(const Rational& q, int) { return q.get_d(); }
  static bool is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
  static Complex to_complex(const Complex& c, int) { return c; }
};

/// Relative magnitude below which complex coefficients are dropped.
inline constexpr double kComplexPruneRelative = 1e-12;

}  // namespace mellin
