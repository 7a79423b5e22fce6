#pragma once

#include "mellin/combinatorics.hpp"
#include "mellin/truncated_series.hpp"
#include "mellin/upoly.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mellin {

/// Element of the Weyl algebra in n variables in canonical form
/// sum c_{a,b} x^a D^b, every x to the left of every D. Equality of
/// operators is equality of the term maps.
class DiffOperator {
 public:
  using Key = std::pair<MultiIndex, MultiIndex>;  // (x-exponent a, D-exponent b)
  using TermMap = std::map<Key, Rational>;

  DiffOperator() = default;
  explicit DiffOperator(int n_vars) : n_vars_(n_vars) {}

  static DiffOperator scalar(int n_vars, const Rational& c);
  static DiffOperator term(const MultiIndex& a, const MultiIndex& b, const Rational& c);
  static DiffOperator x(int n_vars, std::size_t j, int power = 1);
  static DiffOperator d(int n_vars, std::size_t j, int power = 1);
  /// Euler operator x_j D_j.
  static DiffOperator theta(int n_vars, std::size_t j);
  /// Univariate operator sum_k coefficients[k](x) D^k.
  static DiffOperator univariate(const std::vector<UPoly>& coefficients);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const MultiIndex& a, const MultiIndex& b) const;

  void add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c);

  DiffOperator operator+(const DiffOperator& other) const;
  DiffOperator operator-(const DiffOperator& other) const;
  DiffOperator operator-() const;
  DiffOperator scaled(const Rational& c) const;
  /// Composition this o other, normal-ordered through D_j x_j = x_j D_j + 1.
  DiffOperator compose(const DiffOperator& other) const;
  DiffOperator operator*(const DiffOperator& other) const { return compose(other); }

  /// Largest |b| over the terms.
  int order() const;

  /// Q with x_j^e o Q == *this, when every term carries x_j^e on the left.
  std::optional<DiffOperator> left_divide_by_x(std::size_t j, int e) const;
  /// Largest e such that x_j^e divides every term on the left.
  int x_valuation(std::size_t j) const;

  /// Polynomial multiplying the highest D-power of a univariate operator.
  UPoly leading_coefficient() const;
  /// Coefficient of D^k of a univariate operator.
  UPoly coefficient_of_derivative(int k) const;

  /// Groups terms by D-monomial, highest first: "(4*x^3 - 27) D^3 + ...".
  std::string to_text(char variable = 'x') const;
  /// [{"a": [...], "b": [...], "coeff": "p/q"}, ...] in canonical order.
  nlohmann::json to_json() const;

  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  void check(const DiffOperator& other) const;
  int n_vars_ = 1;
  TermMap terms_;
};

/// Some nonzero rational c with a == c * b.
bool equals_up_to_rational_scale(const DiffOperator& a, const DiffOperator& b, Rational* factor = nullptr);

/// Commutative polynomial in theta_1..theta_n with rational coefficients,
/// keyed by theta-exponent.
class ThetaPolynomial {
 public:
  explicit ThetaPolynomial(int n_vars) : n_vars_(n_vars) {}
  static ThetaPolynomial constant(int n_vars, const Rational& c);
  /// sum_j weights[j] theta_j + shift.
  static ThetaPolynomial linear(const std::vector<Rational>& weights, const Rational& shift);

  ThetaPolynomial operator*(const ThetaPolynomial& other) const;
  ThetaPolynomial operator+(const ThetaPolynomial& other) const;
  ThetaPolynomial scaled(const Rational& c) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  int n_vars() const { return n_vars_; }

  /// Canonical Weyl form, theta powers expanded by repeated composition.
  DiffOperator expand() const;

 private:
  int n_vars_;
  std::map<MultiIndex, Rational> terms_;
};

/// prod_{k<count} (linear + step*k).
ThetaPolynomial theta_product(const std::vector<Rational>& weights, const Rational& shift, const Rational& step,
                              int count);

/// P_j(theta) = prod_{k<m_j}(<M,theta> + m k + 1) prod_{k<m'_j}(<M',theta> + m k - 1).
ThetaPolynomial mellin_symbol(const ExponentProfile& profile, std::size_t j);

/// M_j = P_j(theta) - (-1)^{m_j} m^m D_j^m, j = 1..n.
std::vector<DiffOperator> mellin_system(const ExponentProfile& profile);

/// G_j = x_j^m P_j(theta) - (-1)^{m_j} m^m x_j^m D_j^m.
std::vector<DiffOperator> gj_operators(const ExponentProfile& profile);

struct HornSystem {
  std::vector<DiffOperator> in_w;  // H_j
  std::vector<DiffOperator> in_x;  // H'_j
};

HornSystem horn_system(const ExponentProfile& profile);

/// Left quotient of (-1)^{m+1} m^m H'_j by x_j^m.
DiffOperator horn_mellin_quotient(const ExponentProfile& profile, std::size_t j);

struct LatticeMatrices {
  std::vector<std::vector<int>> A;             // 2 x (n+2)
  std::vector<std::vector<Rational>> A_prime;  // 2 x (n+2), second row divided by d
  std::vector<std::vector<int>> B;             // (n+2) x n
  std::vector<Rational> c;                     // (-1/m, 0, ..., 0, 1/m)
  std::vector<Rational> beta;                  // (0, -1)
  std::vector<Rational> beta_prime;            // (0, -1/d)
};

LatticeMatrices lattice_matrices(const ExponentProfile& profile);
/// Every column of B, read as exponents on (a_0, ..., a_{n+1}), lies in ker A.
bool lattice_compatible(const LatticeMatrices& lattice);

/// Mellin operator of y^m + x y^{m_1} - 1 = 0.
DiffOperator mellin_operator_1d(int m, int m1);

/// b^b (a-b)^{a-b} x^a - (-1)^b a^a with a = m/d, b = m_1/d.
UPoly discriminant_poly(int m, int m1);

/// multiplier o target == left o right (multiplier defaults to 1).
bool factorization_check(const DiffOperator& left, const DiffOperator& right, const DiffOperator& target,
                         const std::optional<DiffOperator>& multiplier = std::nullopt);

struct ThetaRightFactorization {
  DiffOperator left;          // x^m prod((m-1)theta + mk + 1) + (-m)^m theta prod_{k=2}^{m-1}(theta - k)
  DiffOperator right;         // theta - 1
  int exponent = -1;          // e with x^e o M(m, m-1) == left o right
  DiffOperator reduced_left;  // left with its common left factor x^v removed
  int reduced_exponent = -1;  // e - v
};

/// Searches e in 0..m for the identity; throws std::runtime_error if none holds.
ThetaRightFactorization theta_right_factorization(int m);

struct DerivativeLeftFactorization {
  DiffOperator left;   // D
  DiffOperator right;  // x prod((m-1)theta + mk - 1) + m^m D^{m-1}
};

/// Throws std::runtime_error if D o right differs from M(m, 1).
DerivativeLeftFactorization derivative_left_factorization(int m);

/// Applies op to a series. The result is reliable up to
/// order(series) - order(op).
template <typename C>
TruncatedSeries<C> apply(const DiffOperator& op, const TruncatedSeries<C>& series) {
  if (op.n_vars() != series.n_vars()) throw std::invalid_argument("operator and series variable counts differ");
  const int reliable = series.order() - op.order();
  TruncatedSeries<C> out(series.n_vars(), std::max(reliable, 0), series.modulus());
  if (reliable < 0) return out;
  using Traits = RingTraits<C>;
  for (const auto& [key, c] : op.terms()) {
    const auto& [a, b] = key;
    const C scale = Traits::from_rational(c, series.modulus());
    for (const auto& [s, value] : series.terms()) {
      Rational falling = 1;
      bool vanishes = false;
      for (std::size_t j = 0; j < s.size() && !vanishes; ++j) {
        if (s[j] < b[j]) vanishes = true;
        for (int k = 0; k < b[j] && !vanishes; ++k) falling *= s[j] - k;
      }
      if (vanishes) continue;
      const MultiIndex target = s - b + a;
      if (target.degree() > reliable) continue;
      out.add_to(target, value * scale * Traits::from_rational(falling, series.modulus()));
    }
  }
  out.finish();
  return out;
}

}  // namespace mellin
