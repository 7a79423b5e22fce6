#include <doctest.h>

#include "mellin/combinatorics.hpp"

#include <numeric>
#include <set>

using namespace mellin;

namespace {

// Every strictly decreasing exponent list below m with at most max_n entries.
std::vector<ExponentProfile> all_profiles(int max_m, int max_n) {
  std::vector<ExponentProfile> out;
  for (int m = 2; m <= max_m; ++m)
    for (int mask = 1; mask < (1 << (m - 1)); ++mask) {
      std::vector<int> list;
      for (int e = m - 1; e >= 1; --e)
        if (mask & (1 << (e - 1))) list.push_back(e);
      if (static_cast<int>(list.size()) <= max_n) out.push_back(make_profile(m, list));
    }
  return out;
}

std::vector<std::vector<int>> box(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(v);
    int k = n - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m - 1) v[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return out;
    ++v[static_cast<std::size_t>(k)];
  }
}

// Numerator of the principal coefficient, product over mu of (<M,nu> - m mu + 1).
bool oracle_vanishes(const ExponentProfile& p, const std::vector<int>& nu) {
  long size = 0, weighted = 0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    size += nu[j];
    weighted += static_cast<long>(nu[j]) * p.m_list[j];
  }
  Integer product = 1;
  for (long mu = 1; mu <= size - 1; ++mu) product *= weighted - p.m * mu + 1;
  return product == 0;
}

}  // namespace

TEST_CASE("profile construction") {
  const auto p = make_profile(3, {2, 1});
  CHECK(p.n() == 2);
  CHECK(p.d == 1);
  CHECK(p.mprime_list == std::vector<int>{1, 2});
  CHECK(p.to_string() == "(3,[2,1])");
  const auto q = make_profile(6, {4, 2});
  CHECK(q.d == 2);
  CHECK(q.mprime_list == std::vector<int>{2, 4});
  CHECK_THROWS_AS(make_profile(3, {3, 1}), ProfileError);
  CHECK_THROWS_AS(make_profile(3, {1, 2}), ProfileError);
  CHECK_THROWS_AS(make_profile(1, {}), ProfileError);
  CHECK_THROWS_AS(make_profile(4, {2, 0}), ProfileError);
}

TEST_CASE("index box") {
  CHECK(index_box(make_profile(2, {1})) == std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}});
  const auto b = index_box(make_profile(3, {2, 1}));
  CHECK(b.size() == 9);
  CHECK(b.front() == MultiIndex{0, 0});
  CHECK(b.back() == MultiIndex{2, 2});
  CHECK(index_box(make_profile(6, {4, 2})).size() == 36);
}

TEST_CASE("missing exponents of the principal series") {
  const auto p = make_profile(3, {2, 1});
  const auto missing = missing_index_set(p);
  CHECK(std::set<MultiIndex>(missing.begin(), missing.end()) == std::set<MultiIndex>{MultiIndex{2, 1}, MultiIndex{0, 2}});
  CHECK(algebraic_index_set(make_profile(2, {1})).size() == 2);
  CHECK(algebraic_index_set(make_profile(3, {1})) == std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}});
}

TEST_CASE("dimension reports") {
  const auto r = dims(make_profile(3, {2, 1}));
  CHECK(r.rank == 9);
  CHECK(r.dim_Y == 7);
  CHECK(r.dim_R == 2);
  CHECK(r.dim_S == 2);
  const auto s = dims(make_profile(3, {1}));
  CHECK(s.rank == 3);
  CHECK(s.dim_Y == 2);
  CHECK(s.dim_R == 1);
  CHECK(s.dim_S == 1);
  const auto t = dims(make_profile(6, {4, 2}));
  CHECK(t.rank == 36);
  CHECK(t.dim_Y == 36);
  CHECK(t.dim_R == 0);
}

TEST_CASE("brute-force count of B' matches the dimension formula for d = 1") {
  int checked = 0;
  for (const auto& p : all_profiles(6, 3)) {
    if (p.d != 1) continue;
    const int n = static_cast<int>(p.n());
    long nonvanishing = 0;
    for (const auto& nu : box(p.m, n)) nonvanishing += !oracle_vanishes(p, nu);
    const long formula = ipow(p.m, n) - ipow(p.m, n - 1) + (p.top_exponent_adjacent() ? 1 : 0);
    CAPTURE(p.to_string());
    CHECK(nonvanishing == formula);
    CHECK(static_cast<long>(algebraic_index_set(p).size()) == formula);
    CHECK(dims(p).dim_Y == formula);
    for (const auto& nu : index_box(p))
      CHECK(missing_by_congruence(p, nu) == principal_coefficient_vanishes(p, nu));
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("modular counts are uniform for d = 1") {
  CHECK(modular_count(make_profile(3, {2, 1}), 2) == 3);
  CHECK(modular_count(make_profile(3, {1}), 0) == 1);
  CHECK(modular_count(make_profile(2, {1}), 1) == 1);
  for (const auto& p : all_profiles(7, 3)) {
    if (p.d != 1) continue;
    const int n = static_cast<int>(p.n());
    for (int r = 0; r < p.m; ++r) {
      long brute = 0;
      for (const auto& nu : box(p.m, n)) {
        long w = 0;
        for (std::size_t j = 0; j < nu.size(); ++j) w += static_cast<long>(nu[j]) * p.m_list[j];
        brute += (w % p.m) == r;
      }
      CAPTURE(p.to_string());
      CHECK(modular_count(p, r) == brute);
      CHECK(brute == ipow(p.m, n - 1));
    }
  }
}

TEST_CASE("coset representatives partition the twists") {
  for (const auto& p : all_profiles(6, 3)) {
    const auto reps = coset_representatives(p);
    const int n = static_cast<int>(p.n());
    CAPTURE(p.to_string());
    CHECK(static_cast<long>(reps.size()) == p.d * ipow(p.m, n - 1));
    CHECK(reps.front().is_zero());
    std::set<MultiIndex> covered;
    for (const auto& rep : reps)
      for (int j = 0; j < p.m; ++j) {
        MultiIndex shifted = rep;
        for (std::size_t k = 0; k < p.n(); ++k) shifted[k] = (shifted[k] + j * p.m_list[k]) % p.m;
        covered.insert(shifted);
      }
    CHECK(static_cast<long>(covered.size()) == ipow(p.m, n));
  }
  const auto reps = coset_representatives(make_profile(3, {2, 1}));
  CHECK(reps == std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{0, 1}, MultiIndex{0, 2}});
  CHECK(coset_representatives(make_profile(6, {2})).size() == 2);
  CHECK(coset_representatives(make_profile(2, {1})).size() == 1);
}

TEST_CASE("relation bases") {
  const auto r = relation_basis(make_profile(3, {2, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == std::vector<Rational>{1, -1, 0});
  CHECK(r[1] == std::vector<Rational>{1, 0, -1});
  CHECK(relation_basis(make_profile(3, {1})) == std::vector<std::vector<Rational>>{{1}});
  CHECK(relation_basis(make_profile(2, {1})).empty());
  CHECK_THROWS_AS(relation_basis(make_profile(4, {2})), ProfileError);
}

TEST_CASE("the reducibility condition never holds") {
  for (int m = 2; m <= 50; ++m) {
    bool found = false;
    for (int i = 0; i <= m - 2; ++i)
      for (int j = 0; j <= m - 2; ++j) {
        const Rational value = Rational(m * i - 1) / (m * (m - 1)) + Rational(j) / m;
        if (value.get_den() == 1) found = true;
      }
    CAPTURE(m);
    CHECK_FALSE(found);
    CHECK_FALSE(beukers_heckman_reducible(m));
  }
}
