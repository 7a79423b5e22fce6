#include "mellin/series.hpp"

#include "mellin/linalg.hpp"

#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

namespace mellin {

Rational principal_coefficient(const ExponentProfile& profile, const MultiIndex& nu) {
  const int size = nu.degree();
  const long weighted = nu.dot(profile.m_list);
  Rational value = Rational(sign_pow(size)) / rational_pow(profile.m, static_cast<unsigned>(size));
  for (long mu = 1; mu <= size - 1; ++mu) value *= weighted - profile.m * mu + 1;
  for (std::size_t j = 0; j < nu.size(); ++j) value /= Rational(factorial(static_cast<unsigned>(nu[j])));
  return value;
}

RationalSeries principal_series(const ExponentProfile& profile, int order) {
  const int n = static_cast<int>(profile.n());
  RationalSeries out(n, order);
  for (const auto& nu : out.monomials_up_to(order)) out.set(nu, principal_coefficient(profile, nu));
  return out;
}

Rational mellin_symbol_value(const ExponentProfile& profile, std::size_t j, const MultiIndex& s) {
  const long m = profile.m;
  const long weighted = s.dot(profile.m_list);
  const long complement = s.dot(profile.mprime_list);
  Rational value = 1;
  for (long k = 0; k < profile.m_list[j]; ++k) value *= weighted + m * k + 1;
  for (long k = 0; k < profile.mprime_list[j]; ++k) value *= complement + m * k - 1;
  return value;
}

RationalSeries convenient_basis_series(const ExponentProfile& profile, const MultiIndex& initial, int order) {
  const int m = profile.m;
  const std::size_t n = profile.n();
  if (initial.size() != n) throw std::invalid_argument("initial index has wrong length");
  for (std::size_t k = 0; k < n; ++k)
    if (initial[k] < 0 || initial[k] >= m) throw std::invalid_argument("initial index must lie in the box B");
  if (order < initial.degree()) throw std::invalid_argument("order must be at least |I|");

  const Rational step_sign_scale = rational_pow(m, static_cast<unsigned>(m));
  RationalSeries out(static_cast<int>(n), order);
  out.set(initial, 1);
  // Exponents of the lattice I + m N_0^n in graded order, so every
  // predecessor t - m e_j is visited before t.
  for (const auto& t : out.monomials_up_to(order)) {
    if (t.mod(m) != initial || t == initial) continue;
    std::size_t j = 0;
    while (t[j] < m) ++j;
    const MultiIndex s = t - MultiIndex::unit(n, j, m);
    const Rational previous = out.coefficient(s);
    if (previous == 0) continue;
    // phi(s) P_j(s) = (-1)^{m_j} m^m phi(s + m e_j) prod_{k<m} (t_j - k)
    Rational falling = 1;
    for (int k = 0; k < m; ++k) falling *= t[j] - k;
    Rational denominator = step_sign_scale * falling * sign_pow(profile.m_list[j]);
    out.set(t, previous * mellin_symbol_value(profile, j, s) / denominator);
  }
  return out;
}

std::vector<RationalSeries> convenient_basis(const ExponentProfile& profile, int order) {
  std::vector<RationalSeries> basis;
  for (const auto& index : index_box(profile)) basis.push_back(convenient_basis_series(profile, index, order));
  return basis;
}

CyclotomicSeries to_cyclotomic(const RationalSeries& series, int m) {
  return series.map_coefficients<Cyclotomic>([m](const Rational& q) { return Cyclotomic(m, q); }, m);
}

CyclotomicSeries rotate(const CyclotomicSeries& series, const MultiIndex& twist) {
  if (twist.size() != static_cast<std::size_t>(series.n_vars())) throw std::invalid_argument("twist has wrong length");
  CyclotomicSeries out(series.n_vars(), series.order(), series.modulus());
  for (const auto& [index, c] : series.terms()) out.set(index, c.rotated(twist.dot(index)));
  return out;
}

CyclotomicSeries rotate(const RationalSeries& series, const MultiIndex& twist, int m) {
  return rotate(to_cyclotomic(series, m), twist);
}

CyclotomicSeries scaled_root_series(const ExponentProfile& profile, int j, int order) {
  if (j < 0 || j >= profile.m) throw std::invalid_argument("root label must lie in 0..m-1");
  MultiIndex twist(profile.n());
  for (std::size_t k = 0; k < profile.n(); ++k) twist[k] = (j * profile.m_list[k]) % profile.m;
  return rotate(principal_series(profile, order), twist, profile.m).scaled(Cyclotomic::root_power(profile.m, j));
}

CyclotomicSeries original_equation_residual(const ExponentProfile& profile, const CyclotomicSeries& y) {
  const int n = y.n_vars();
  const int m = y.modulus();
  CyclotomicSeries total = y.pow(static_cast<unsigned>(profile.m));
  for (std::size_t k = 0; k < profile.n(); ++k)
    total = total + CyclotomicSeries::variable(n, k, y.order(), m) * y.pow(static_cast<unsigned>(profile.m_list[k]));
  return total - CyclotomicSeries::constant(n, y.order(), Cyclotomic(m, 1), m);
}

namespace {

template <typename C>
std::vector<MultiIndex> common_support(const std::vector<TruncatedSeries<C>>& family) {
  std::set<MultiIndex, GradedLess> support;
  for (const auto& s : family) {
    if (s.n_vars() != family.front().n_vars() || s.order() != family.front().order() ||
        s.modulus() != family.front().modulus())
      throw std::invalid_argument("independence_rank needs series with equal variables, order and ring");
    for (const auto& [index, c] : s.terms()) support.insert(index);
  }
  return {support.begin(), support.end()};
}

}  // namespace

int independence_rank(const std::vector<RationalSeries>& family) {
  if (family.empty()) return 0;
  const auto support = common_support(family);
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : family) {
    std::vector<Rational> row;
    for (const auto& index : support) row.push_back(s.coefficient(index));
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

int independence_rank(const std::vector<CyclotomicSeries>& family) {
  if (family.empty()) return 0;
  const auto support = common_support(family);
  const int m = family.front().modulus();
  auto modulus = std::make_shared<const UPoly>(cyclotomic_polynomial(m));
  std::vector<std::vector<Complex>> numeric_rows;
  std::vector<std::vector<CyclotomicField>> exact_rows;
  for (const auto& s : family) {
    std::vector<Complex> numeric_row;
    std::vector<CyclotomicField> exact_row;
    for (const auto& index : support) {
      const Cyclotomic c = s.coefficient(index);
      numeric_row.push_back(c.to_complex());
      exact_row.push_back(CyclotomicField::from_group_ring(modulus, c));
    }
    numeric_rows.push_back(std::move(numeric_row));
    exact_rows.push_back(std::move(exact_row));
  }
  const int numeric = numeric_rank(numeric_rows, kRankTolerance);
  const int exact = exact_rank(std::move(exact_rows));
  if (numeric != exact)
    throw std::logic_error("numeric rank " + std::to_string(numeric) + " disagrees with exact rank " +
                           std::to_string(exact));
  return exact;
}

int independence_rank(const std::vector<ComplexSeries>& family, double tolerance) {
  if (family.empty()) return 0;
  const auto support = common_support(family);
  std::vector<std::vector<Complex>> rows;
  for (const auto& s : family) {
    std::vector<Complex> row;
    for (const auto& index : support) row.push_back(s.coefficient(index));
    rows.push_back(std::move(row));
  }
  return numeric_rank(rows, tolerance);
}

namespace {

std::string monomial_text(const MultiIndex& index) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < index.size(); ++j) {
    if (index[j] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x';
    if (index.size() > 1) out << j + 1;
    if (index[j] > 1) out << '^' << index[j];
  }
  return out.str();
}

std::string complex_text(const Complex& c) {
  std::ostringstream out;
  out << std::setprecision(12) << '(' << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i)";
  return out.str();
}

template <typename C, typename Render>
std::string render(const TruncatedSeries<C>& series, Render coefficient_text) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, c] : series.terms()) {
    if (!first) out << " + ";
    first = false;
    out << coefficient_text(c);
    if (index.degree() > 0) out << '*' << monomial_text(index);
  }
  if (first) out << '0';
  out << " + O(" << series.order() + 1 << ')';
  return out.str();
}

template <typename C, typename Encode>
nlohmann::json encode(const TruncatedSeries<C>& series, const std::string& ring, Encode coefficient_json) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [index, c] : series.terms())
    terms.push_back({{"exponent", index.entries()}, {"coeff", coefficient_json(c)}});
  nlohmann::json out = {{"n_vars", series.n_vars()}, {"order", series.order()}, {"ring", ring}, {"terms", terms}};
  if (series.modulus() != 0) out["m"] = series.modulus();
  return out;
}

}  // namespace

std::string to_text(const RationalSeries& series) {
  return render(series, [](const Rational& q) { return q.get_den() == 1 ? to_string(q) : "(" + to_string(q) + ")"; });
}

std::string to_text(const CyclotomicSeries& series) {
  return render(series, [](const Cyclotomic& c) { return c.to_string(); });
}

std::string to_text(const ComplexSeries& series) { return render(series.pruned(), complex_text); }

nlohmann::json to_json(const RationalSeries& series) {
  return encode(series, ring_name(RingKind::exact_rational), [](const Rational& q) { return to_string(q); });
}

nlohmann::json to_json(const CyclotomicSeries& series) {
  return encode(series, ring_name(RingKind::cyclotomic_group_ring), [](const Cyclotomic& c) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& q : c.coords()) coords.push_back(to_string(q));
    return coords;
  });
}

nlohmann::json to_json(const ComplexSeries& series) {
  return encode(series.pruned(), ring_name(RingKind::complex_float),
                [](const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); });
}

std::string ring_name(RingKind kind) {
  switch (kind) {
    case RingKind::exact_rational:
      return "rational";
    case RingKind::cyclotomic_group_ring:
      return "cyclotomic";
    case RingKind::complex_float:
      return "complex";
  }
  return "unknown";
}

}  // namespace mellin
