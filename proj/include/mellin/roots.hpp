#pragma once

#include "mellin/combinatorics.hpp"
#include "mellin/series.hpp"

#include <cstdint>
#include <vector>

namespace mellin {

/// y^m + sum_j eps^{i_j} x_j y^{m_j} - 1 = 0 at a base point.
struct EquationInstance {
  ExponentProfile profile;
  MultiIndex twist;
  std::vector<Complex> base_point;
};

inline constexpr double kSubstitutionTolerance = 1e-10;
inline constexpr double kAnnihilationTolerance = 1e-8;
inline constexpr double kRootResidualTolerance = 1e-12;
inline constexpr double kRootSeparation = 1e-8;
/// A root with |p'(y)| below this, relative to 1 + m |y|^{m-1}, is treated as multiple.
inline constexpr double kRootSlopeTolerance = 1e-6;
inline constexpr int kAberthMaxIterations = 200;
inline constexpr double kAberthStep = 1e-14;
/// Agreement between Aberth roots and jets evaluated at the base point.
inline constexpr double kJetEvaluationTolerance = 1e-8;

/// exp(2 pi i k / m).
Complex unit_root(int m, long k);

/// Coefficients eps^{i_j} of x_j in equation (I).
std::vector<Complex> twist_scalars(const ExponentProfile& profile, const MultiIndex& twist);

/// All m roots by Aberth iteration started at 1.1 * (jittered roots of
/// unity); the jitter comes from `seed`. Throws std::runtime_error when the
/// iteration does not converge or two roots coincide (closer than
/// kRootSeparation, or a root with vanishing derivative).
std::vector<Complex> roots_at_point(const EquationInstance& instance, std::uint64_t seed = 0);

/// Taylor expansion at the origin of one root branch; branch b has constant
/// term zeta^b, zeta = exp(2 pi i/m).
struct PointJet {
  int branch_id = 0;
  ComplexSeries coefficients;
  int order = 0;
};

/// y^m + sum_j eps^{i_j} x_j y^{m_j} - 1 with a series substituted for y.
ComplexSeries equation_residual(const ExponentProfile& profile, const MultiIndex& twist, const ComplexSeries& y);

/// Newton lifting with precision doubling for each of the m branches at the
/// origin. Throws std::runtime_error if a substitution residual exceeds
/// kSubstitutionTolerance.
std::vector<PointJet> lift_jets(const ExponentProfile& profile, const MultiIndex& twist, int order);

struct ScaledRootReport {
  bool ok = false;
  std::vector<double> deviations;  // per branch j
  double max_deviation = 0;
};

/// Compares branch j of the original equation with
/// eps^j * rotate(y_pr, (j m_1, ..., j m_n) mod m), coefficientwise.
ScaledRootReport scaled_root_identity_check(const ExponentProfile& profile, int order);

/// Root jets of every equation indexed by the coset representatives,
/// in representative order, branches 0..m-1 within each.
std::vector<std::vector<PointJet>> coset_jets(const ExponentProfile& profile, int order);

/// max |coefficient| of sum_k c_k (sum of the jets of equation k).
double relation_check(const ExponentProfile& profile, const std::vector<Rational>& c, int order);

/// One log(zeta^b) = 2 pi i b/m contribution, recorded exactly.
struct LogOffset {
  std::size_t equation = 0;  // index into the coset representatives
  int branch = 0;
  Rational turns;  // b/m; the logarithm adds 2 pi i * turns
};

struct LogSolution {
  std::vector<Rational> c;
  ComplexSeries chi;
  std::vector<LogOffset> constant_offsets;
};

/// chi_c = sum_k c_k sum_b y_b log y_b, with log y_b = log(y_b / zeta^b) + 2 pi i b/m.
/// Requires d = 1 and c in R (relation residual below kSubstitutionTolerance).
LogSolution log_solution(const ExponentProfile& profile, const std::vector<Rational>& c, int order);

/// max over j of max |coefficient of M_j applied to series|, divided by the
/// largest input coefficient. Needs order >= m + 2.
double mellin_residual(const ExponentProfile& profile, const ComplexSeries& series);

struct InvariantBlock {
  int twist = 0;                  // k in y^m + eps^k x y^{m_1} - 1
  std::vector<int> branches;      // selected branch ids, j = 0..m/d-1
  int rank_selected = 0;
  int rank_all_branches = 0;
  double max_residual = 0;
};

struct InvariantSubspaceReport {
  int m = 0;
  int m1 = 0;
  int d = 0;
  std::vector<InvariantBlock> blocks;
  int joint_rank = 0;
  bool ok = false;
};

/// For each k < d, the roots of y^m + eps^k x y^{m_1} - 1 span a
/// Mellin-invariant block of dimension m/d; all blocks together span m.
InvariantSubspaceReport invariant_subspace_witness(int m, int m1, int order);

/// Jets of every coset equation followed by chi_c for each relation basis
/// vector; the rank of this family realizes Y + S.
std::vector<ComplexSeries> solution_space_family(const ExponentProfile& profile, int order, int* y_rank = nullptr);

}  // namespace mellin
