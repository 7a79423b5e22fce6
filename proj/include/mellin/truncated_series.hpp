#pragma once

#include "mellin/multi_index.hpp"
#include "mellin/ring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace mellin {

/// Sparse multivariate power series known up to a total-degree bound.
///
/// Invariants: every stored index has degree <= order(); no stored
/// coefficient is zero in the ring (complex coefficients below
/// kComplexPruneRelative * max(1, largest magnitude) count as zero).
/// Binary operations truncate to the smaller of the two orders, so results
/// never claim terms beyond what both operands determine.
template <typename C>
class TruncatedSeries {
 public:
  using Traits = RingTraits<C>;
  using TermMap = std::map<MultiIndex, C, GradedLess>;

  TruncatedSeries() = default;
  TruncatedSeries(int n_vars, int order, int modulus = 0) : n_vars_(n_vars), order_(order), modulus_(modulus) {
    if (n_vars < 1) throw std::invalid_argument("series needs at least one variable");
    if (order < 0) throw std::invalid_argument("truncation order must be non-negative");
  }

  static TruncatedSeries constant(int n_vars, int order, const C& value, int modulus = 0) {
    TruncatedSeries s(n_vars, order, modulus);
    s.set(MultiIndex(static_cast<std::size_t>(n_vars)), value);
    return s;
  }

  static TruncatedSeries monomial(const MultiIndex& exponent, int order, const C& value, int modulus = 0) {
    TruncatedSeries s(static_cast<int>(exponent.size()), order, modulus);
    s.set(exponent, value);
    return s;
  }

  static TruncatedSeries variable(int n_vars, std::size_t j, int order, int modulus = 0) {
    return monomial(MultiIndex::unit(static_cast<std::size_t>(n_vars), j), order, Traits::from_rational(1, modulus),
                    modulus);
  }

  int n_vars() const { return n_vars_; }
  int order() const { return order_; }
  int modulus() const { return modulus_; }
  RingKind ring() const { return Traits::kind; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C zero_coefficient() const { return Traits::from_rational(0, modulus_); }

  C coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? zero_coefficient() : it->second;
  }

  /// Stores value at index; silently ignored beyond the truncation order.
  void set(const MultiIndex& index, const C& value) {
    check_index(index);
    if (index.degree() > order_) return;
    if (Traits::is_zero(value))
      terms_.erase(index);
    else
      terms_[index] = value;
  }

  void add_to(const MultiIndex& index, const C& value) {
    check_index(index);
    if (index.degree() > order_) return;
    auto it = terms_.find(index);
    if (it == terms_.end()) {
      if (!Traits::is_zero(value)) terms_.emplace(index, value);
      return;
    }
    it->second = it->second + value;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  TruncatedSeries truncated(int order) const {
    TruncatedSeries out(n_vars_, std::min(order, order_), modulus_);
    for (const auto& [index, c] : terms_)
      if (index.degree() <= out.order_) out.terms_.emplace(index, c);
    return out;
  }

  /// Same terms with a larger truncation bound; the caller asserts that the
  /// missing terms are about to be determined (Newton lifting).
  TruncatedSeries extended(int order) const {
    TruncatedSeries out(*this);
    out.order_ = std::max(order, order_);
    return out;
  }

  TruncatedSeries operator+(const TruncatedSeries& other) const {
    check_compatible(other);
    TruncatedSeries out = truncated(std::min(order_, other.order_));
    for (const auto& [index, c] : other.terms_) out.add_to(index, c);
    out.finish();
    return out;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries out(*this);
    for (auto& [index, c] : out.terms_) c = zero_coefficient() - c;
    return out;
  }

  TruncatedSeries operator-(const TruncatedSeries& other) const { return *this + (-other); }

  TruncatedSeries operator*(const TruncatedSeries& other) const {
    check_compatible(other);
    TruncatedSeries out(n_vars_, std::min(order_, other.order_), modulus_);
    for (const auto& [ia, ca] : terms_) {
      if (ia.degree() > out.order_) break;
      for (const auto& [ib, cb] : other.terms_) {
        if (ia.degree() + ib.degree() > out.order_) break;
        out.add_to(ia + ib, ca * cb);
      }
    }
    out.finish();
    return out;
  }

  TruncatedSeries scaled(const C& factor) const {
    TruncatedSeries out(n_vars_, order_, modulus_);
    for (const auto& [index, c] : terms_) out.set(index, c * factor);
    out.finish();
    return out;
  }

  TruncatedSeries scaled_by_rational(const Rational& factor) const {
    return scaled(Traits::from_rational(factor, modulus_));
  }

  TruncatedSeries pow(unsigned exponent) const {
    TruncatedSeries result = constant(n_vars_, order_, Traits::from_rational(1, modulus_), modulus_);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
  }

  /// d/dx_j; the reliable order drops by one.
  TruncatedSeries derivative(std::size_t j) const {
    if (j >= static_cast<std::size_t>(n_vars_)) throw std::out_of_range("derivative variable out of range");
    TruncatedSeries out(n_vars_, std::max(order_ - 1, 0), modulus_);
    for (const auto& [index, c] : terms_) {
      if (index[j] == 0) continue;
      MultiIndex lowered(index);
      lowered[j] -= 1;
      out.set(lowered, c * Traits::from_rational(index[j], modulus_));
    }
    if (order_ == 0) out.terms_.clear();
    return out;
  }

  /// Multiplicative inverse; needs a field coefficient ring and a nonzero
  /// constant term.
  TruncatedSeries reciprocal() const requires(!std::is_same_v<C, Cyclotomic>) {
    const MultiIndex origin(static_cast<std::size_t>(n_vars_));
    const C c0 = coefficient(origin);
    if (Traits::is_zero(c0)) throw std::domain_error("reciprocal of a series with zero constant term");
    const C inv0 = Traits::from_rational(1, 0) / c0;
    // b_t = -inv0 * sum_{0 < s <= t} a_s b_{t-s}, graded by total degree
    TruncatedSeries out = constant(n_vars_, order_, inv0, modulus_);
    std::vector<MultiIndex> indices = monomials_up_to(order_);
    for (const auto& t : indices) {
      if (t.degree() == 0) continue;
      C acc = zero_coefficient();
      for (const auto& [s, a] : terms_) {
        if (s.degree() == 0) continue;
        if (s.degree() > t.degree()) break;
        const MultiIndex rest = t - s;
        if (!rest.all_nonnegative()) continue;
        auto it = out.terms_.find(rest);
        if (it != out.terms_.end()) acc = acc + a * it->second;
      }
      out.set(t, zero_coefficient() - inv0 * acc);
    }
    out.finish();
    return out;
  }

  /// log f for f with nonzero constant term c0. The non-constant part is
  /// obtained from the Euler identity E(log f) = E(f)/f with
  /// E = sum_j x_j d/dx_j. The constant is log c0 on the principal branch for
  /// complex coefficients; over the rationals c0 must be 1.
  TruncatedSeries log() const requires(!std::is_same_v<C, Cyclotomic>) {
    const MultiIndex origin(static_cast<std::size_t>(n_vars_));
    const C c0 = coefficient(origin);
    if (Traits::is_zero(c0)) throw std::domain_error("logarithm of a series with zero constant term");
    TruncatedSeries euler(n_vars_, order_, modulus_);
    for (const auto& [index, c] : terms_)
      if (index.degree() > 0) euler.set(index, c * Traits::from_rational(index.degree(), modulus_));
    const TruncatedSeries quotient = euler * reciprocal();
    TruncatedSeries out(n_vars_, order_, modulus_);
    for (const auto& [index, c] : quotient.terms_)
      if (index.degree() > 0) out.set(index, c * Traits::from_rational(Rational(Rational(1) / index.degree()), modulus_));
    if constexpr (std::is_same_v<C, Rational>) {
      if (c0 != 1) throw std::domain_error("rational logarithm needs constant term 1");
    } else {
      out.set(origin, std::log(c0));
    }
    out.finish();
    return out;
  }

  /// Sum of the stored terms at a point; terms beyond order() are unknown
  /// and therefore absent.
  C evaluate(const std::vector<C>& point) const {
    if (point.size() != static_cast<std::size_t>(n_vars_)) throw std::invalid_argument("point dimension mismatch");
    C total = zero_coefficient();
    for (const auto& [index, c] : terms_) {
      C term = c;
      for (std::size_t j = 0; j < point.size(); ++j)
        for (int k = 0; k < index[j]; ++k) term = term * point[j];
      total = total + term;
    }
    return total;
  }

  /// Coefficientwise ring change.
  template <typename D>
  TruncatedSeries<D> map_coefficients(const std::function<D(const C&)>& f, int modulus = 0) const {
    TruncatedSeries<D> out(n_vars_, order_, modulus);
    for (const auto& [index, c] : terms_) out.set(index, f(c));
    out.finish();
    return out;
  }

  TruncatedSeries<Complex> to_complex() const {
    const int m = modulus_;
    return map_coefficients<Complex>([m](const C& c) { return Traits::to_complex(c, m); });
  }

  double max_abs() const {
    double best = 0;
    for (const auto& [index, c] : terms_) best = std::max(best, std::abs(Traits::to_complex(c, modulus_)));
    return best;
  }

  /// All exponents of n_vars variables with degree <= order, graded order.
  std::vector<MultiIndex> monomials_up_to(int order) const {
    std::vector<MultiIndex> out;
    MultiIndex current(static_cast<std::size_t>(n_vars_));
    enumerate(out, current, 0, order);
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
  }

  /// Drops coefficients that became exactly zero.
  void finish() {
    std::erase_if(terms_, [](const auto& term) { return Traits::is_zero(term.second); });
  }

  /// Copy without complex coefficients below kComplexPruneRelative times the
  /// largest magnitude (floor 1); exact rings are returned unchanged.
  TruncatedSeries pruned() const {
    TruncatedSeries out = *this;
    if constexpr (std::is_same_v<C, Complex>) {
      const double threshold = kComplexPruneRelative * std::max(1.0, max_abs());
      std::erase_if(out.terms_, [&](const auto& term) { return std::abs(term.second) < threshold; });
    }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_vars_ == b.n_vars_ && a.order_ == b.order_ && a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
  }

 private:
  template <typename D>
  friend class TruncatedSeries;

  void check_index(const MultiIndex& index) const {
    if (index.size() != static_cast<std::size_t>(n_vars_)) throw std::invalid_argument("multi-index has wrong length");
    if (!index.all_nonnegative()) throw std::invalid_argument("negative exponent in series");
  }

  void check_compatible(const TruncatedSeries& other) const {
    if (other.n_vars_ != n_vars_) throw std::invalid_argument("series variable count mismatch");
    if (other.modulus_ != modulus_) throw std::invalid_argument("series ring modulus mismatch");
  }

  void enumerate(std::vector<MultiIndex>& out, MultiIndex& current, std::size_t j, int budget) const {
    if (j == current.size()) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      current[j] = e;
      enumerate(out, current, j + 1, budget - e);
    }
    current[j] = 0;
  }

  int n_vars_ = 1;
  int order_ = 0;
  int modulus_ = 0;
  TermMap terms_;
};

using RationalSeries = TruncatedSeries<Rational>;
using CyclotomicSeries = TruncatedSeries<Cyclotomic>;
using ComplexSeries = TruncatedSeries<Complex>;

}  // namespace mellin
