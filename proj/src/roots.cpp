#include "mellin/roots.hpp"

#include "mellin/weyl.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mellin {

Complex unit_root(int m, long k) {
  const long r = ((k % m) + m) % m;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / m);
}

std::vector<Complex> twist_scalars(const ExponentProfile& profile, const MultiIndex& twist) {
  if (twist.size() != profile.n()) throw std::invalid_argument("twist has wrong length");
  std::vector<Complex> out;
  for (std::size_t j = 0; j < profile.n(); ++j) out.push_back(unit_root(profile.m, twist[j]));
  return out;
}

namespace {

// Dense coefficients (low degree first) of the equation at a point.
std::vector<Complex> dense_polynomial(const EquationInstance& instance) {
  const auto& profile = instance.profile;
  std::vector<Complex> coeffs(static_cast<std::size_t>(profile.m) + 1, 0.0);
  coeffs[static_cast<std::size_t>(profile.m)] = 1.0;
  coeffs[0] = -1.0;
  const auto scalars = twist_scalars(profile, instance.twist);
  for (std::size_t j = 0; j < profile.n(); ++j)
    coeffs[static_cast<std::size_t>(profile.m_list[j])] += scalars[j] * instance.base_point[j];
  return coeffs;
}

std::pair<Complex, Complex> horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex value = 0.0, slope = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
  return {value, slope};
}

}  // namespace

std::vector<Complex> roots_at_point(const EquationInstance& instance, std::uint64_t seed) {
  const int m = instance.profile.m;
  if (instance.base_point.size() != instance.profile.n()) throw std::invalid_argument("base point has wrong length");
  const auto coeffs = dense_polynomial(instance);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  std::vector<Complex> z;
  for (int k = 0; k < m; ++k)
    z.push_back(1.1 * std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5 + jitter(rng)) / m));

  bool converged = false;
  for (int iteration = 0; iteration < kAberthMaxIterations && !converged; ++iteration) {
    double largest_step = 0;
    for (int k = 0; k < m; ++k) {
      const auto [value, slope] = horner(coeffs, z[static_cast<std::size_t>(k)]);
      if (value == Complex(0.0)) continue;
      const Complex ratio = value / slope;
      Complex repulsion = 0.0;
      for (int j = 0; j < m; ++j)
        if (j != k) repulsion += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[static_cast<std::size_t>(k)] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[static_cast<std::size_t>(k)])));
    }
    converged = largest_step < kAberthStep;
  }

  for (const auto& root : z) {
    const double residual = std::abs(horner(coeffs, root).first);
    if (!converged && residual >= kRootResidualTolerance * (1 + std::pow(std::abs(root), m)))
      throw std::runtime_error("root finder did not converge");
    if (residual >= kRootResidualTolerance * (1 + std::pow(std::abs(root), m)))
      throw std::runtime_error("root residual above tolerance");
  }
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (std::abs(z[a] - z[b]) < kRootSeparation)
        throw std::runtime_error("roots coincide: base point lies on the discriminant");
  for (const auto& root : z)
    if (std::abs(horner(coeffs, root).second) < kRootSlopeTolerance * (1 + m * std::pow(std::abs(root), m - 1)))
      throw std::runtime_error("multiple root: base point lies on the discriminant");
  std::sort(z.begin(), z.end(), [](Complex l, Complex r) {
    return std::arg(l) != std::arg(r) ? std::arg(l) < std::arg(r) : std::abs(l) < std::abs(r);
  });
  return z;
}

ComplexSeries equation_residual(const ExponentProfile& profile, const MultiIndex& twist, const ComplexSeries& y) {
  const int n = y.n_vars();
  const auto scalars = twist_scalars(profile, twist);
  ComplexSeries total = y.pow(static_cast<unsigned>(profile.m));
  for (std::size_t j = 0; j < profile.n(); ++j)
    total = total +
            ComplexSeries::variable(n, j, y.order()).scaled(scalars[j]) * y.pow(static_cast<unsigned>(profile.m_list[j]));
  return total - ComplexSeries::constant(n, y.order(), 1.0);
}

namespace {

ComplexSeries equation_derivative(const ExponentProfile& profile, const MultiIndex& twist, const ComplexSeries& y) {
  const int n = y.n_vars();
  const auto scalars = twist_scalars(profile, twist);
  ComplexSeries total = y.pow(static_cast<unsigned>(profile.m - 1)).scaled(Complex(profile.m));
  for (std::size_t j = 0; j < profile.n(); ++j)
    total = total + ComplexSeries::variable(n, j, y.order()).scaled(scalars[j] * Complex(profile.m_list[j])) *
                        y.pow(static_cast<unsigned>(profile.m_list[j] - 1));
  return total;
}

double max_abs_coefficient(const ComplexSeries& s) { return s.max_abs(); }

}  // namespace

std::vector<PointJet> lift_jets(const ExponentProfile& profile, const MultiIndex& twist, int order) {
  if (order < 1) throw std::invalid_argument("jet order must be at least 1");
  const int n = static_cast<int>(profile.n());
  std::vector<PointJet> jets;
  for (int b = 0; b < profile.m; ++b) {
    const Complex zeta_b = unit_root(profile.m, b);
    ComplexSeries y = ComplexSeries::constant(n, 0, zeta_b);
    int precision = 0;
    while (precision < order) {
      precision = std::min(2 * precision + 1, order);
      const ComplexSeries current = y.extended(precision);
      const ComplexSeries slope = equation_derivative(profile, twist, current);
      // the slope at the origin is m zeta^{b(m-1)}, never zero
      if (std::abs(slope.coefficient(MultiIndex(profile.n()))) < 0.5)
        throw std::logic_error("singular Newton step at the origin");
      y = current - equation_residual(profile, twist, current) * slope.reciprocal();
    }
    const double residual = max_abs_coefficient(equation_residual(profile, twist, y));
    if (residual >= kSubstitutionTolerance)
      throw std::runtime_error("jet substitution residual " + std::to_string(residual) + " above tolerance");
    jets.push_back({b, y, order});
  }
  return jets;
}

ScaledRootReport scaled_root_identity_check(const ExponentProfile& profile, int order) {
  ScaledRootReport report;
  const auto jets = lift_jets(profile, MultiIndex(profile.n()), order);
  for (int j = 0; j < profile.m; ++j) {
    const ComplexSeries expected = scaled_root_series(profile, j, order).to_complex();
    const double deviation = (jets[static_cast<std::size_t>(j)].coefficients - expected).max_abs();
    report.deviations.push_back(deviation);
    report.max_deviation = std::max(report.max_deviation, deviation);
  }
  report.ok = report.max_deviation < kSubstitutionTolerance;
  return report;
}

std::vector<std::vector<PointJet>> coset_jets(const ExponentProfile& profile, int order) {
  std::vector<std::vector<PointJet>> out;
  for (const auto& rep : coset_representatives(profile)) out.push_back(lift_jets(profile, rep, order));
  return out;
}

namespace {

ComplexSeries root_sum_combination(const ExponentProfile& profile, const std::vector<Rational>& c,
                                   const std::vector<std::vector<PointJet>>& jets, int order) {
  ComplexSeries total(static_cast<int>(profile.n()), order);
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (c[k] == 0) continue;
    for (const auto& jet : jets[k]) total = total + jet.coefficients.scaled(Complex(c[k].get_d()));
  }
  return total;
}

}  // namespace

double relation_check(const ExponentProfile& profile, const std::vector<Rational>& c, int order) {
  const auto reps = coset_representatives(profile);
  if (c.size() != reps.size())
    throw std::invalid_argument("relation vector length must equal the number of coset representatives");
  return root_sum_combination(profile, c, coset_jets(profile, order), order).max_abs();
}

LogSolution log_solution(const ExponentProfile& profile, const std::vector<Rational>& c, int order) {
  if (profile.d > 1) throw ProfileError("logarithmic solutions need d = 1");
  const auto jets = coset_jets(profile, order);
  if (c.size() != jets.size())
    throw std::invalid_argument("relation vector length must equal the number of coset representatives");
  const double relation = root_sum_combination(profile, c, jets, order).max_abs();
  if (relation >= kSubstitutionTolerance)
    throw std::invalid_argument("vector is not in the relation space (residual " + std::to_string(relation) + ")");

  LogSolution out;
  out.c = c;
  out.chi = ComplexSeries(static_cast<int>(profile.n()), order);
  for (std::size_t k = 0; k < jets.size(); ++k) {
    if (c[k] == 0) continue;
    const Complex weight = c[k].get_d();
    for (const auto& jet : jets[k]) {
      const Complex zeta_b = unit_root(profile.m, jet.branch_id);
      ComplexSeries log_y = jet.coefficients.scaled(1.0 / zeta_b).log();
      const Rational turns = Rational(jet.branch_id) / profile.m;
      if (turns != 0) {
        out.constant_offsets.push_back({k, jet.branch_id, turns});
        log_y = log_y + ComplexSeries::constant(log_y.n_vars(), log_y.order(),
                                                Complex(0.0, 2.0 * std::numbers::pi * turns.get_d()));
      }
      out.chi = out.chi + (jet.coefficients * log_y).scaled(weight);
    }
  }
  return out;
}

double mellin_residual(const ExponentProfile& profile, const ComplexSeries& series) {
  if (series.order() < profile.m + 2) throw std::invalid_argument("series order must be at least m + 2");
  const double scale = std::max(series.max_abs(), std::numeric_limits<double>::min());
  double worst = 0;
  for (const auto& op : mellin_system(profile)) worst = std::max(worst, apply(op, series).max_abs());
  return worst / scale;
}

InvariantSubspaceReport invariant_subspace_witness(int m, int m1, int order) {
  const ExponentProfile profile = make_profile(m, {m1});
  InvariantSubspaceReport report;
  report.m = m;
  report.m1 = m1;
  report.d = profile.d;
  const int block_size = m / profile.d;
  std::vector<ComplexSeries> everything;
  bool ok = true;
  for (int k = 0; k < profile.d; ++k) {
    InvariantBlock block;
    block.twist = k;
    const auto jets = lift_jets(profile, MultiIndex{k}, order);
    std::vector<ComplexSeries> all, selected;
    for (const auto& jet : jets) {
      all.push_back(jet.coefficients);
      block.max_residual = std::max(block.max_residual, mellin_residual(profile, jet.coefficients));
      if (jet.branch_id < block_size) {
        selected.push_back(jet.coefficients);
        block.branches.push_back(jet.branch_id);
      }
    }
    block.rank_all_branches = independence_rank(all);
    block.rank_selected = independence_rank(selected);
    ok = ok && block.rank_all_branches == block_size && block.rank_selected == block_size &&
         block.max_residual < kAnnihilationTolerance;
    everything.insert(everything.end(), selected.begin(), selected.end());
    report.blocks.push_back(std::move(block));
  }
  report.joint_rank = independence_rank(everything);
  report.ok = ok && report.joint_rank == m;
  return report;
}

std::vector<ComplexSeries> solution_space_family(const ExponentProfile& profile, int order, int* y_rank) {
  std::vector<ComplexSeries> family;
  for (const auto& equation : coset_jets(profile, order))
    for (const auto& jet : equation) family.push_back(jet.coefficients);
  if (y_rank) *y_rank = independence_rank(family);
  if (profile.d == 1)
    for (const auto& c : relation_basis(profile)) family.push_back(log_solution(profile, c, order).chi);
  return family;
}

}  // namespace mellin
