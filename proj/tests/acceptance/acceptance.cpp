#include "mellin/catalog.hpp"
#include "mellin/combinatorics.hpp"
#include "mellin/report.hpp"
#include "mellin/roots.hpp"
#include "mellin/series.hpp"
#include "mellin/weyl.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mellin;

namespace {

// Pinned tolerances.
constexpr double kJetMatch = 1e-10;
constexpr double kLogResidual = 1e-8;
constexpr double kInvariantResidual = 1e-8;
constexpr double kNoiseResidualFloor = 0.1;
constexpr double kWrongRelationFloor = 1e-3;

const std::vector<std::pair<int, std::vector<int>>> kSuite = {
    {2, {1}}, {3, {1}}, {3, {2}}, {4, {2}}, {6, {2}}, {4, {2}}, {6, {3}}, {3, {2, 1}}, {6, {4, 2}}};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool condition, const std::string& failure) {
    if (!condition) {
      if (!ok) detail << "; ";
      ok = false;
      detail << failure;
    }
  }
};

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

// Numerator of the principal coefficient: prod_{mu=1}^{|nu|-1} (<M,nu> - m mu + 1).
bool coefficient_numerator_vanishes(const ExponentProfile& p, const MultiIndex& nu) {
  long size = 0, weighted = 0;
  for (std::size_t j = 0; j < p.n(); ++j) {
    size += nu[j];
    weighted += static_cast<long>(nu[j]) * p.m_list[j];
  }
  for (long mu = 1; mu <= size - 1; ++mu)
    if (weighted - p.m * mu + 1 == 0) return true;
  return false;
}

Outcome convenient_basis_criterion() {
  Outcome out;
  for (const auto& [m, list] : kSuite) {
    const auto p = make_profile(m, list);
    const auto ops = mellin_system(p);
    const auto basis = convenient_basis(p, 12);
    std::set<MultiIndex> initials;
    bool annihilated = true;
    for (const auto& f : basis) {
      initials.insert(f.terms().begin()->first);
      for (const auto& op : ops) annihilated = annihilated && apply(op, f).is_zero();
    }
    const auto expected = static_cast<std::size_t>(ipow(m, static_cast<unsigned>(p.n())));
    out.require(annihilated, p.to_string() + " not annihilated");
    out.require(basis.size() == expected && initials.size() == expected,
                p.to_string() + " has " + std::to_string(initials.size()) + " initial monomials");
  }
  if (out.ok) out.detail << "order 12, exact annihilation, m^n distinct initial monomials for 9 profiles";
  return out;
}

Outcome dimension_criterion() {
  Outcome out;
  const auto a = dims(make_profile(3, {2, 1}));
  out.require(a.rank == 9 && a.dim_Y == 7 && a.dim_R == 2 && a.dim_S == 2, "dims (3,[2,1])");
  const auto missing = missing_index_set(make_profile(3, {2, 1}));
  out.require(std::set<MultiIndex>(missing.begin(), missing.end()) == std::set<MultiIndex>{{2, 1}, {0, 2}},
              "missing set of (3,[2,1])");
  const auto b = dims(make_profile(3, {1}));
  out.require(b.rank == 3 && b.dim_Y == 2 && b.dim_R == 1 && b.dim_S == 1, "dims (3,[1])");
  int checked = 0;
  for (const auto& p : all_profiles(6, 3)) {
    if (p.d != 1) continue;
    long brute = 0;
    for (const auto& nu : index_box(p)) brute += !coefficient_numerator_vanishes(p, nu);
    const unsigned n = static_cast<unsigned>(p.n());
    const long formula = ipow(p.m, n) - ipow(p.m, n - 1) + (p.top_exponent_adjacent() ? 1 : 0);
    out.require(brute == formula && dims(p).card_Bprime == formula, "card B' of " + p.to_string());
    ++checked;
  }
  if (out.ok)
    out.detail << "(9,7,2,2) missing {(2,1),(0,2)}; (3,2,1,1); brute-force card B' = formula on " << checked
               << " profiles";
  return out;
}

Outcome modular_criterion() {
  Outcome out;
  int checked = 0;
  for (const auto& p : all_profiles(7, 3)) {
    if (p.d != 1) continue;
    for (int r = 0; r < p.m; ++r)
      out.require(modular_count(p, r) == ipow(p.m, static_cast<unsigned>(p.n()) - 1),
                  p.to_string() + " residue " + std::to_string(r));
    ++checked;
  }
  if (out.ok) out.detail << "m^{n-1} for every residue on " << checked << " profiles";
  return out;
}

Outcome ode_criterion() {
  Outcome out;
  for (const auto& [m, m1] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 1}, {4, 2}, {6, 2}}) {
    const auto reference = reference_ode(m, m1);
    out.require(reference && equals_up_to_rational_scale(mellin_operator_1d(m, m1), *reference),
                "M(" + std::to_string(m) + "," + std::to_string(m1) + ")");
  }
  if (out.ok) out.detail << "5 reference operators match up to a rational scale";
  return out;
}

Outcome discriminant_criterion() {
  Outcome out;
  int checked = 0;
  for (int m = 2; m <= 7; ++m)
    for (int m1 = 1; m1 < m; ++m1) {
      if (std::gcd(m, m1) != 1) continue;
      out.require(mellin_operator_1d(m, m1).leading_coefficient().proportional_to(discriminant_poly(m, m1)),
                  "(" + std::to_string(m) + "," + std::to_string(m1) + ")");
      ++checked;
    }
  if (out.ok) out.detail << "leading coefficient proportional to the discriminant for " << checked << " pairs";
  return out;
}

Outcome factorization_criterion() {
  Outcome out;
  for (const auto& f : reference_factorizations())
    out.require(factorization_check(f.left, f.right, f.target, f.multiplier), f.description);
  for (int m = 2; m <= 6; ++m) {
    const auto f = derivative_left_factorization(m);
    out.require(f.left == DiffOperator::d(1, 0) && f.left * f.right == mellin_operator_1d(m, 1),
                "D left factor, m=" + std::to_string(m));
  }
  std::vector<int> exponents;
  for (int m = 2; m <= 5; ++m) {
    const auto f = theta_right_factorization(m);
    const bool right_ok = f.right == DiffOperator::theta(1, 0) - DiffOperator::scalar(1, 1);
    out.require(right_ok && f.reduced_exponent == m - 1, "theta-1 right factor, m=" + std::to_string(m));
    exponents.push_back(f.reduced_exponent);
  }
  if (out.ok) {
    out.detail << "4 reference factorizations; D left factor m=2..6; theta-1 right factor m=2..5 with x-exponents";
    for (const int e : exponents) out.detail << ' ' << e;
    out.detail << " (m-1)";
  }
  return out;
}

Outcome horn_criterion() {
  Outcome out;
  int literal = 0, total = 0;
  for (const auto& [m, list] : kSuite) {
    const auto p = make_profile(m, list);
    const auto check = horn_check(p);
    out.require(check.ok(), p.to_string());
    for (std::size_t j = 0; j < check.literal.size(); ++j) {
      out.require(check.literal[j] == (p.mprime_list[j] % 2 == 0), p.to_string() + " unsigned form");
      literal += check.literal[j];
    }
    total += static_cast<int>(check.literal.size());
  }
  if (out.ok)
    out.detail << "(-1)^{m+1} m^m H'_j = (-1)^{m'_j} x_j^m o M_j for every suite profile; the unsigned form "
               << "(sign-free right side) holds for " << literal << " of " << total
               << " operators, exactly those with m'_j even, so it is checked with the sign";
  return out;
}

Outcome rotation_criterion() {
  Outcome out;
  for (const auto& [m, list, expected] :
       std::vector<std::tuple<int, std::vector<int>, int>>{{6, {4, 2}, 36}, {4, {2}, 4}, {3, {2, 1}, 7}}) {
    const auto p = make_profile(m, list);
    const auto principal = principal_series(p, 12);
    std::vector<CyclotomicSeries> rotations;
    for (const auto& twist : index_box(p)) rotations.push_back(rotate(principal, twist, m));
    const int rank = independence_rank(rotations);
    out.require(rank == expected, p.to_string() + " rank " + std::to_string(rank));
    if (out.ok) out.detail << p.to_string() << ' ' << rank << ' ';
  }
  return out;
}

Outcome scaled_root_criterion() {
  Outcome out;
  double worst = 0;
  for (const auto& [m, list] : kSuite) {
    const auto report = scaled_root_identity_check(make_profile(m, list), 8);
    worst = std::max(worst, report.max_deviation);
    out.require(report.max_deviation < kJetMatch, make_profile(m, list).to_string());
  }
  if (out.ok) out.detail << "order 8, max deviation " << worst << " < " << kJetMatch;
  return out;
}

Outcome log_criterion() {
  Outcome out;
  double worst = 0;
  const std::vector<std::pair<ExponentProfile, std::vector<std::vector<Rational>>>> cases = {
      {make_profile(3, {1}), {{1}}}, {make_profile(3, {2, 1}), {{1, -1, 0}, {1, 0, -1}}}};
  for (const auto& [p, vectors] : cases) {
    for (const auto& c : vectors) {
      const double residual = mellin_residual(p, log_solution(p, c, 12).chi);
      worst = std::max(worst, residual);
      out.require(residual < kLogResidual, p.to_string() + " residual " + std::to_string(residual));
    }
    const long expected = ipow(p.m, static_cast<unsigned>(p.n()));
    const int rank = independence_rank(solution_space_family(p, 12));
    out.require(rank == expected, p.to_string() + " rank(Y+chi) " + std::to_string(rank));
  }
  if (out.ok) out.detail << "order 12, max chi residual " << worst << ", rank(Y u chi) = m^n for (3,[1]) and (3,[2,1])";
  return out;
}

Outcome invariant_criterion() {
  Outcome out;
  for (const auto& [m, m1] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}}) {
    const auto report = invariant_subspace_witness(m, m1, 12);
    double worst = 0;
    bool blocks_ok = static_cast<int>(report.blocks.size()) == report.d;
    for (const auto& block : report.blocks) {
      worst = std::max(worst, block.max_residual);
      blocks_ok = blocks_ok && block.rank_selected == m / report.d;
    }
    out.require(blocks_ok && report.joint_rank == m && worst < kInvariantResidual,
                "(" + std::to_string(m) + "," + std::to_string(m1) + ")");
    if (out.ok) out.detail << '(' << m << ",[" << m1 << "]) " << report.d << " blocks, joint rank " << report.joint_rank << "; ";
  }
  for (const int k : {2, 3}) {
    std::vector<ComplexSeries> roots;
    for (const auto& jet : lift_jets(make_profile(2 * k, {k}), MultiIndex{0}, 12)) roots.push_back(jet.coefficients);
    const int rank = independence_rank(roots);
    out.require(rank == 2, "(" + std::to_string(2 * k) + ",[" + std::to_string(k) + "]) root rank " + std::to_string(rank));
    if (out.ok) out.detail << '(' << 2 * k << ",[" << k << "]) root rank " << rank << ' ';
  }
  return out;
}

Outcome reducibility_criterion() {
  Outcome out;
  for (int m = 2; m <= 50; ++m) out.require(!beukers_heckman_reducible(m), "m=" + std::to_string(m));
  if (out.ok) out.detail << "no integer parameter difference for 2 <= m <= 50";
  return out;
}

Outcome negative_control_criterion() {
  Outcome out;
  const auto p = make_profile(3, {2, 1});
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> uniform(-1, 1);
  ComplexSeries noise(2, 12);
  for (const auto& s : noise.monomials_up_to(12)) noise.set(s, Complex(uniform(rng), uniform(rng)));
  const double noise_residual = mellin_residual(p, noise);
  out.require(noise_residual > kNoiseResidualFloor, "random series residual " + std::to_string(noise_residual));
  const double wrong = relation_check(p, {1, 0, 0}, 12);
  out.require(wrong > kWrongRelationFloor, "e_1 relation residual " + std::to_string(wrong));
  if (out.ok) out.detail << "random series residual " << noise_residual << ", e_1 relation residual " << wrong;
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"convenient basis", convenient_basis_criterion},
      {"dimensions", dimension_criterion},
      {"modular counts", modular_criterion},
      {"reference ODEs", ode_criterion},
      {"discriminant", discriminant_criterion},
      {"factorizations", factorization_criterion},
      {"Horn identity", horn_criterion},
      {"rotation ranks", rotation_criterion},
      {"scaled-root jets", scaled_root_criterion},
      {"logarithmic solutions", log_criterion},
      {"invariant subspaces", invariant_criterion},
      {"irreducibility condition", reducibility_criterion},
      {"negative controls", negative_control_criterion},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      outcome = criteria[k].second();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    failures += !outcome.ok;
    std::printf("%s %2zu %s: %s\n", outcome.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                outcome.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
