#pragma once

#include "mellin/combinatorics.hpp"
#include "mellin/truncated_series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mellin {

/// Coefficient of x^nu in the principal solution (the root equal to 1 at 0).
Rational principal_coefficient(const ExponentProfile& profile, const MultiIndex& nu);

/// Principal solution expanded to total degree `order`.
RationalSeries principal_series(const ExponentProfile& profile, int order);

/// P_j evaluated at an exponent s:
///   prod_{k<m_j} (<M,s> + m k + 1) * prod_{k<m'_j} (<M',s> + m k - 1).
Rational mellin_symbol_value(const ExponentProfile& profile, std::size_t j, const MultiIndex& s);

/// Solution supported on I + m N_0^n with coefficient 1 at x^I, built from
/// the coefficient recurrence in each coordinate direction.
RationalSeries convenient_basis_series(const ExponentProfile& profile, const MultiIndex& initial, int order);

/// All m^n convenient-basis series in index_box order.
std::vector<RationalSeries> convenient_basis(const ExponentProfile& profile, int order);

CyclotomicSeries to_cyclotomic(const RationalSeries& series, int m);

/// Coefficient at s multiplied by eps^{<I,s> mod m}, i.e. x_k -> eps^{i_k} x_k.
CyclotomicSeries rotate(const CyclotomicSeries& series, const MultiIndex& twist);
CyclotomicSeries rotate(const RationalSeries& series, const MultiIndex& twist, int m);

/// eta * y_pr(eta^{m_1} x_1, ..., eta^{m_n} x_n) with eta = eps^j.
CyclotomicSeries scaled_root_series(const ExponentProfile& profile, int j, int order);

/// y^m + sum_k x_k y^{m_k} - 1 with y substituted. Zero for the m root branches.
CyclotomicSeries original_equation_residual(const ExponentProfile& profile, const CyclotomicSeries& y);

/// Terms whose exponent is congruent to I componentwise modulo m.
template <typename C>
TruncatedSeries<C> subseries(const TruncatedSeries<C>& series, const MultiIndex& initial, int m) {
  for (std::size_t k = 0; k < initial.size(); ++k)
    if (initial[k] < 0 || initial[k] >= m) throw std::invalid_argument("subseries index must lie in the box B");
  TruncatedSeries<C> out(series.n_vars(), series.order(), series.modulus());
  for (const auto& [index, c] : series.terms())
    if (index.mod(m) == initial) out.set(index, c);
  return out;
}

/// True iff the coefficient at every I in B is nonzero (the complex value for
/// group-ring coefficients). Requires order >= n (m - 1).
template <typename C>
bool is_generating(const TruncatedSeries<C>& series, const ExponentProfile& profile) {
  if (series.order() < static_cast<int>(profile.n()) * (profile.m - 1))
    throw std::invalid_argument("series order too small to decide the generating property");
  for (const auto& index : index_box(profile)) {
    const C c = series.coefficient(index);
    if constexpr (std::is_same_v<C, Cyclotomic>) {
      if (c.is_zero_embedded()) return false;
    } else {
      if (RingTraits<C>::is_zero(c)) return false;
    }
  }
  return true;
}

/// Relative pivot threshold for numeric ranks.
inline constexpr double kRankTolerance = 1e-10;

/// Exact rank over Q.
int independence_rank(const std::vector<RationalSeries>& family);
/// Rank of the complex embedding. Computed numerically and, independently, by
/// exact elimination over Q(zeta_m); a disagreement throws std::logic_error.
int independence_rank(const std::vector<CyclotomicSeries>& family);
int independence_rank(const std::vector<ComplexSeries>& family, double tolerance = kRankTolerance);

/// Canonical renderings: graded-lex sorted terms, "p/q" fractions,
/// group-ring coefficients as coordinate vectors, complex as [re, im].
std::string to_text(const RationalSeries& series);
std::string to_text(const CyclotomicSeries& series);
std::string to_text(const ComplexSeries& series);
nlohmann::json to_json(const RationalSeries& series);
nlohmann::json to_json(const CyclotomicSeries& series);
nlohmann::json to_json(const ComplexSeries& series);

}  // namespace mellin
