#include "mellin/combinatorics.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace mellin {

long ipow(long base, unsigned exponent) {
  long result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

std::string ExponentProfile::to_string() const {
  std::ostringstream out;
  out << '(' << m << ",[";
  for (std::size_t j = 0; j < m_list.size(); ++j) {
    if (j) out << ',';
    out << m_list[j];
  }
  out << "])";
  return out.str();
}

ExponentProfile make_profile(int m, const std::vector<int>& m_list) {
  if (m_list.empty()) throw ProfileError("at least one exponent m_1 is required");
  if (m < 2) throw ProfileError("m must be at least 2");
  if (m_list.front() >= m) throw ProfileError("m_1 must be smaller than m");
  for (std::size_t j = 1; j < m_list.size(); ++j)
    if (m_list[j] >= m_list[j - 1]) throw ProfileError("exponents must be strictly decreasing");
  if (m_list.back() <= 0) throw ProfileError("exponents must be positive");

  ExponentProfile p;
  p.m = m;
  p.m_list = m_list;
  p.d = m;
  for (int mj : m_list) {
    p.mprime_list.push_back(m - mj);
    p.d = std::gcd(p.d, mj);
  }
  return p;
}

std::vector<MultiIndex> index_box(const ExponentProfile& profile) {
  const std::size_t n = profile.n();
  std::vector<MultiIndex> box;
  box.reserve(static_cast<std::size_t>(ipow(profile.m, n)));
  MultiIndex current(n);
  while (true) {
    box.push_back(current);
    // odometer increment, last coordinate fastest
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++current[j] < profile.m) break;
      current[j] = 0;
      if (j == 0) return box;
    }
  }
}

bool principal_coefficient_vanishes(const ExponentProfile& profile, const MultiIndex& nu) {
  const long weighted = nu.dot(profile.m_list);
  for (long mu = 1; mu <= nu.degree() - 1; ++mu)
    if (weighted - profile.m * mu + 1 == 0) return true;
  return false;
}

bool missing_by_congruence(const ExponentProfile& profile, const MultiIndex& nu) {
  const long m = profile.m;
  const long r = ((nu.dot(profile.m_list) % m) + m) % m;
  if (r != m - 1) return false;
  if (profile.top_exponent_adjacent() && nu == MultiIndex::unit(profile.n(), 0)) return false;
  return true;
}

std::vector<MultiIndex> algebraic_index_set(const ExponentProfile& profile) {
  std::vector<MultiIndex> out;
  for (const auto& nu : index_box(profile))
    if (!principal_coefficient_vanishes(profile, nu)) out.push_back(nu);
  return out;
}

std::vector<MultiIndex> missing_index_set(const ExponentProfile& profile) {
  std::vector<MultiIndex> out;
  for (const auto& nu : index_box(profile))
    if (principal_coefficient_vanishes(profile, nu)) out.push_back(nu);
  return out;
}

DimensionReport dims(const ExponentProfile& profile) {
  const unsigned n = static_cast<unsigned>(profile.n());
  DimensionReport report;
  report.rank = ipow(profile.m, n);
  report.card_Bprime = static_cast<long>(algebraic_index_set(profile).size());
  if (profile.d > 1) {
    // every solution is algebraic
    report.dim_Y = report.rank;
    report.dim_R = 0;
  } else {
    const long lower = ipow(profile.m, n - 1);
    const bool adjacent = profile.top_exponent_adjacent();
    report.dim_Y = report.rank - lower + (adjacent ? 1 : 0);
    report.dim_R = lower - (adjacent ? 1 : 0);
  }
  report.dim_S = report.dim_R;
  if (report.card_Bprime != report.dim_Y)
    throw std::logic_error("card(B') disagrees with the dimension formula for " + profile.to_string());
  return report;
}

std::vector<MultiIndex> coset_representatives(const ExponentProfile& profile) {
  const std::size_t n = profile.n();
  const int m = profile.m;
  std::vector<MultiIndex> generator_multiples;
  for (int j = 0; j < m; ++j) {
    MultiIndex h(n);
    for (std::size_t k = 0; k < n; ++k) h[k] = (j * profile.m_list[k]) % m;
    generator_multiples.push_back(h);
  }

  std::set<MultiIndex> covered;
  std::vector<MultiIndex> reps;
  for (const auto& index : index_box(profile)) {
    if (covered.contains(index)) continue;
    reps.push_back(index);
    for (const auto& h : generator_multiples) covered.insert((index + h).mod(m));
  }
  return reps;
}

std::vector<std::vector<Rational>> relation_basis(const ExponentProfile& profile) {
  if (profile.d > 1) throw ProfileError("relation space is only defined for d = 1");
  const std::size_t count = static_cast<std::size_t>(ipow(profile.m, profile.n() - 1));
  std::vector<std::vector<Rational>> basis;
  if (profile.top_exponent_adjacent()) {
    for (std::size_t k = 1; k < count; ++k) {
      std::vector<Rational> v(count, 0);
      v[0] = 1;
      v[k] = -1;
      basis.push_back(std::move(v));
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<Rational> v(count, 0);
      v[k] = 1;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

long modular_count(const ExponentProfile& profile, int residue) {
  const long m = profile.m;
  const long r = ((residue % m) + m) % m;
  long count = 0;
  for (const auto& nu : index_box(profile))
    if (((nu.dot(profile.m_list) % m) + m) % m == r) ++count;
  return count;
}

bool beukers_heckman_reducible(int m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  const long denominator = static_cast<long>(m) * (m - 1);
  for (long i = 0; i <= m - 2; ++i)
    for (long j = 0; j <= m - 2; ++j) {
      // (m i - 1)/(m(m-1)) + j/m over the common denominator m(m-1)
      const long numerator = m * i - 1 + j * (m - 1);
      if (numerator % denominator == 0) return true;
    }
  return false;
}

}  // namespace mellin
