#include "mellin/report.hpp"

#include "mellin/catalog.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace mellin {

nlohmann::json profile_json(const ExponentProfile& profile) {
  return {{"m", profile.m}, {"m_list", profile.m_list}, {"d", profile.d}};
}

nlohmann::json index_list_json(const std::vector<MultiIndex>& indices) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& index : indices) out.push_back(index.entries());
  return out;
}

nlohmann::json rational_vector_json(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

namespace {

std::string join_indices(const nlohmann::json& list) {
  std::string out;
  for (const auto& entry : list) {
    if (!out.empty()) out += ' ';
    out += MultiIndex(entry.get<std::vector<int>>()).to_string();
  }
  return out.empty() ? "none" : out;
}

std::string matrix_text(const nlohmann::json& matrix) {
  std::ostringstream out;
  for (const auto& row : matrix) {
    out << "  [";
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << ' ';
      if (row[k].is_string())
        out << row[k].get<std::string>();
      else
        out << row[k].dump();
    }
    out << "]\n";
  }
  return out.str();
}

std::string vector_text(const nlohmann::json& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ' ';
    out += values[k].is_string() ? values[k].get<std::string>() : values[k].dump();
  }
  return out + "]";
}

template <typename T>
nlohmann::json matrix_json(const std::vector<std::vector<T>>& matrix) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : matrix) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& value : row) {
      if constexpr (std::is_same_v<T, Rational>)
        r.push_back(to_string(value));
      else
        r.push_back(value);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

nlohmann::json dims_report(const ExponentProfile& profile) {
  const DimensionReport report = dims(profile);
  nlohmann::json out = {{"profile", profile_json(profile)},
                        {"rank", report.rank},
                        {"dim_Y", report.dim_Y},
                        {"dim_R", report.dim_R},
                        {"dim_S", report.dim_S},
                        {"card_Bprime", report.card_Bprime},
                        {"algebraic_indices", index_list_json(algebraic_index_set(profile))},
                        {"missing_indices", index_list_json(missing_index_set(profile))},
                        {"coset_representatives", index_list_json(coset_representatives(profile))}};
  nlohmann::json relations = nlohmann::json::array();
  if (profile.d == 1)
    for (const auto& c : relation_basis(profile)) relations.push_back(rational_vector_json(c));
  out["relation_basis"] = relations;
  return out;
}

std::string dims_text(const nlohmann::json& report) {
  std::ostringstream out;
  const auto& p = report["profile"];
  out << "profile " << make_profile(p["m"].get<int>(), p["m_list"].get<std::vector<int>>()).to_string() << " d "
      << p["d"].get<int>() << '\n';
  out << "rank " << report["rank"].get<long>() << '\n';
  out << "dim Y " << report["dim_Y"].get<long>() << '\n';
  out << "dim R " << report["dim_R"].get<long>() << '\n';
  out << "dim S " << report["dim_S"].get<long>() << '\n';
  out << "card B' " << report["card_Bprime"].get<long>() << '\n';
  out << "missing " << join_indices(report["missing_indices"]) << '\n';
  out << "cosets " << join_indices(report["coset_representatives"]) << '\n';
  for (const auto& c : report["relation_basis"]) out << "relation " << vector_text(c) << '\n';
  return out.str();
}

bool HornCheck::ok() const { return std::all_of(signed_.begin(), signed_.end(), [](bool b) { return b; }); }

HornCheck horn_check(const ExponentProfile& profile) {
  HornCheck out;
  const auto mellin = mellin_system(profile);
  for (std::size_t j = 0; j < profile.n(); ++j) {
    const DiffOperator quotient = horn_mellin_quotient(profile, j);
    out.literal.push_back(quotient == mellin[j]);
    out.signed_.push_back(quotient == mellin[j].scaled(sign_pow(profile.mprime_list[j])));
  }
  return out;
}

nlohmann::json operators_report(const ExponentProfile& profile, bool check_horn) {
  auto render = [](const std::vector<DiffOperator>& ops, char variable) {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t j = 0; j < ops.size(); ++j)
      list.push_back({{"j", j + 1}, {"text", ops[j].to_text(variable)}, {"terms", ops[j].to_json()}});
    return list;
  };
  const HornSystem horn = horn_system(profile);
  const LatticeMatrices lattice = lattice_matrices(profile);
  nlohmann::json out = {{"profile", profile_json(profile)},
                        {"mellin", render(mellin_system(profile), 'x')},
                        {"g", render(gj_operators(profile), 'x')},
                        {"horn_w", render(horn.in_w, 'w')},
                        {"horn_x", render(horn.in_x, 'x')},
                        {"matrices",
                         {{"A", matrix_json(lattice.A)},
                          {"A_prime", matrix_json(lattice.A_prime)},
                          {"B", matrix_json(lattice.B)},
                          {"c", rational_vector_json(lattice.c)},
                          {"beta", rational_vector_json(lattice.beta)},
                          {"beta_prime", rational_vector_json(lattice.beta_prime)},
                          {"compatible", lattice_compatible(lattice)}}}};
  if (profile.n() == 1) {
    const UPoly discriminant = discriminant_poly(profile.m, profile.m1());
    out["discriminant"] = discriminant.to_string();
  }
  if (check_horn) {
    const HornCheck check = horn_check(profile);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t j = 0; j < profile.n(); ++j)
      rows.push_back({{"j", j + 1},
                      {"sign", sign_pow(profile.mprime_list[j])},
                      {"literal", static_cast<bool>(check.literal[j])},
                      {"signed", static_cast<bool>(check.signed_[j])}});
    out["horn_check"] = {{"ok", check.ok()}, {"rows", rows}};
  }
  return out;
}

std::string operators_text(const nlohmann::json& report) {
  std::ostringstream out;
  const bool single = report["mellin"].size() == 1;
  auto block = [&](const char* label, const nlohmann::json& list) {
    for (const auto& op : list) {
      out << label;
      if (!single) out << op["j"].get<int>();
      out << " = " << op["text"].get<std::string>() << '\n';
    }
  };
  block("M", report["mellin"]);
  block("G", report["g"]);
  block("H", report["horn_w"]);
  block("H'", report["horn_x"]);
  const auto& matrices = report["matrices"];
  out << "A =\n" << matrix_text(matrices["A"]);
  out << "A' =\n" << matrix_text(matrices["A_prime"]);
  out << "B =\n" << matrix_text(matrices["B"]);
  out << "c = " << vector_text(matrices["c"]) << '\n';
  out << "beta = " << vector_text(matrices["beta"]) << '\n';
  out << "beta' = " << vector_text(matrices["beta_prime"]) << '\n';
  out << "lattice " << (matrices["compatible"].get<bool>() ? "compatible" : "INCOMPATIBLE") << '\n';
  if (report.contains("discriminant")) out << "discriminant " << report["discriminant"].get<std::string>() << '\n';
  if (report.contains("horn_check")) {
    for (const auto& row : report["horn_check"]["rows"])
      out << "horn j=" << row["j"].get<int>() << " sign " << row["sign"].get<int>() << " literal "
          << (row["literal"].get<bool>() ? "yes" : "no") << " signed " << (row["signed"].get<bool>() ? "yes" : "no")
          << '\n';
    out << "horn check " << (report["horn_check"]["ok"].get<bool>() ? "OK" : "FAILED") << '\n';
  }
  return out.str();
}

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::vector<Complex> default_base_point(std::size_t n) {
  std::vector<Complex> point;
  for (std::size_t j = 0; j < n; ++j)
    point.push_back(std::polar(0.1 / static_cast<double>(j + 1), 0.7 + 1.3 * static_cast<double>(j)));
  return point;
}

namespace {

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

CheckResult skipped(const std::string& name, const std::string& reason) {
  return {name, CheckStatus::skipped, reason, nlohmann::json::object()};
}

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << value;
  return out.str();
}

class Verifier {
 public:
  Verifier(const ExponentProfile& profile, const VerifyOptions& options)
      : profile_(profile), options_(options), dims_(dims(profile)) {
    n_ = static_cast<int>(profile.n());
    box_order_ = n_ * (profile.m - 1);
  }

  VerifyReport run() {
    VerifyReport report;
    report.profile = profile_;
    report.options = options_;
    report.twists = coset_representatives(profile_);
    auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };
    add(dimensions());
    add(lattice());
    add(basis_annihilation());
    add(horn());
    add(rotation_rank());
    add(scaled_roots());
    add(root_jets());
    add(base_point_roots());
    if (profile_.d == 1) {
      add(relations());
      add(log_solutions());
    }
    if (n_ == 1) {
      add(reference_operator());
      if (profile_.d == 1) add(discriminant());
      add(factorizations());
      if (profile_.m1() == 1) add(derivative_left_factor());
      if (profile_.top_exponent_adjacent()) add(theta_right_factor());
      if (profile_.d > 1) add(invariant_subspaces());
    }
    return report;
  }

 private:
  CheckResult dimensions() {
    CheckResult r{"dimensions", CheckStatus::pass, "", dims_report(profile_)};
    bool ok = dims_.rank == ipow(profile_.m, static_cast<unsigned>(n_)) && dims_.dim_Y + dims_.dim_S == dims_.rank;
    if (profile_.d == 1) {
      ok = ok && dims_.card_Bprime == dims_.dim_Y;
      for (int residue = 0; residue < profile_.m; ++residue)
        ok = ok && modular_count(profile_, residue) == ipow(profile_.m, static_cast<unsigned>(n_ - 1));
    }
    r.status = status_of(ok);
    r.summary = "rank " + std::to_string(dims_.rank) + ", dim Y " + std::to_string(dims_.dim_Y) + ", dim R " +
                std::to_string(dims_.dim_R) + ", dim S " + std::to_string(dims_.dim_S);
    return r;
  }

  CheckResult lattice() {
    const bool ok = lattice_compatible(lattice_matrices(profile_));
    return {"lattice", status_of(ok), ok ? "columns of B lie in ker A" : "B is not in ker A", {}};
  }

  CheckResult basis_annihilation() {
    if (options_.order < box_order_)
      return skipped("basis_annihilation", "order below n(m-1) = " + std::to_string(box_order_));
    const auto basis = convenient_basis(profile_, options_.order);
    const auto ops = mellin_system(profile_);
    int annihilated = 0;
    std::set<MultiIndex> initials;
    for (const auto& series : basis) {
      bool zero = true;
      for (const auto& op : ops) zero = zero && apply(op, series).is_zero();
      annihilated += zero;
      initials.insert(series.terms().begin()->first);
    }
    const int rank = independence_rank(basis);
    const long expected = dims_.rank;
    const bool ok = annihilated == static_cast<int>(basis.size()) && static_cast<long>(basis.size()) == expected &&
                    static_cast<long>(initials.size()) == expected && rank == expected;
    return {"basis_annihilation", status_of(ok),
            std::to_string(annihilated) + "/" + std::to_string(basis.size()) + " annihilated exactly, rank " +
                std::to_string(rank),
            {{"series", basis.size()},
             {"annihilated", annihilated},
             {"distinct_initial_monomials", initials.size()},
             {"rank", rank}}};
  }

  CheckResult horn() {
    const HornCheck check = horn_check(profile_);
    nlohmann::json literal = nlohmann::json::array(), signed_ = nlohmann::json::array();
    for (std::size_t j = 0; j < profile_.n(); ++j) {
      literal.push_back(static_cast<bool>(check.literal[j]));
      signed_.push_back(static_cast<bool>(check.signed_[j]));
    }
    return {"horn_identity", status_of(check.ok()),
            check.ok() ? "(-1)^{m+1} m^m H'_j = (-1)^{m'_j} x_j^m M_j for all j" : "Horn identity fails",
            {{"literal", literal}, {"signed", signed_}}};
  }

  CheckResult rotation_rank() {
    if (options_.order < box_order_)
      return skipped("rotation_rank", "order below n(m-1) = " + std::to_string(box_order_));
    const auto principal = principal_series(profile_, options_.order);
    std::vector<CyclotomicSeries> rotations;
    for (const auto& twist : index_box(profile_)) rotations.push_back(rotate(principal, twist, profile_.m));
    const int rank = independence_rank(rotations);
    const bool generating = is_generating(principal, profile_);
    const bool ok = rank == dims_.dim_Y && generating == (dims_.dim_Y == dims_.rank);
    return {"rotation_rank", status_of(ok),
            "rank " + std::to_string(rank) + " of " + std::to_string(rotations.size()) + " rotations" +
                (generating ? ", principal series generating" : ", principal series not generating"),
            {{"rank", rank}, {"rotations", rotations.size()}, {"generating", generating}}};
  }

  CheckResult scaled_roots() {
    const ScaledRootReport check = scaled_root_identity_check(profile_, options_.order);
    return {"scaled_roots", status_of(check.ok), "max deviation " + format_double(check.max_deviation),
            {{"residual", check.max_deviation}, {"deviations", check.deviations}}};
  }

  CheckResult root_jets() {
    if (options_.order < std::max(profile_.m + 2, box_order_))
      return skipped("root_jets", "order below max(m+2, n(m-1))");
    jets_ = coset_jets(profile_, options_.order);
    double worst_residual = 0, worst_sum = 0;
    std::vector<ComplexSeries> family;
    for (std::size_t k = 0; k < jets_.size(); ++k) {
      ComplexSeries sum(n_, options_.order);
      for (const auto& jet : jets_[k]) {
        worst_residual = std::max(worst_residual, mellin_residual(profile_, jet.coefficients));
        family.push_back(jet.coefficients);
        sum = sum + jet.coefficients;
      }
      // the roots sum to minus the coefficient of y^{m-1}
      if (profile_.top_exponent_adjacent())
        sum = sum + ComplexSeries::variable(n_, 0, options_.order)
                        .scaled(unit_root(profile_.m, coset_representatives(profile_)[k][0]));
      worst_sum = std::max(worst_sum, sum.max_abs());
    }
    const int rank = independence_rank(family);
    y_family_ = family;
    const bool ok = worst_residual < options_.annihilation_tolerance && worst_sum < kSubstitutionTolerance &&
                    rank == dims_.dim_Y;
    return {"root_jets", status_of(ok),
            std::to_string(family.size()) + " jets, rank " + std::to_string(rank) + ", max residual " +
                format_double(worst_residual),
            {{"equations", jets_.size()}, {"rank", rank}, {"residual", worst_residual}, {"root_sum_residual", worst_sum}}};
  }

  CheckResult base_point_roots() {
    const int order = std::max(options_.order, 1);
    const auto point = default_base_point(profile_.n());
    double worst = 0;
    for (const auto& twist : coset_representatives(profile_)) {
      const auto roots = roots_at_point({profile_, twist, point}, options_.seed);
      const auto jets = lift_jets(profile_, twist, order);
      for (const auto& root : roots) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& jet : jets) nearest = std::min(nearest, std::abs(jet.coefficients.evaluate(point) - root));
        worst = std::max(worst, nearest);
      }
    }
    // truncation error of a jet at |x| <= 0.1 dominates for small orders
    const bool meaningful = options_.order >= 8;
    const bool ok = worst < kJetEvaluationTolerance;
    if (!meaningful)
      return {"base_point_roots", CheckStatus::skipped, "order below 8, deviation " + format_double(worst),
              {{"residual", worst}}};
    return {"base_point_roots", status_of(ok), "max |root - jet(x0)| " + format_double(worst), {{"residual", worst}}};
  }

  CheckResult relations() {
    const auto basis = relation_basis(profile_);
    double worst = 0;
    for (const auto& c : basis) worst = std::max(worst, relation_check(profile_, c, options_.order));
    const bool ok = static_cast<long>(basis.size()) == dims_.dim_R && worst < kSubstitutionTolerance;
    return {"relations", status_of(ok),
            std::to_string(basis.size()) + " relation vectors, max residual " + format_double(worst),
            {{"dim_R", basis.size()}, {"residual", worst}}};
  }

  CheckResult log_solutions() {
    if (dims_.dim_R == 0) return skipped("log_solutions", "dim R = 0");
    if (y_family_.empty()) return skipped("log_solutions", "root jets unavailable at this order");
    double worst = 0;
    std::vector<ComplexSeries> family = y_family_;
    nlohmann::json per_vector = nlohmann::json::array();
    for (const auto& c : relation_basis(profile_)) {
      const LogSolution solution = log_solution(profile_, c, options_.order);
      const double residual = mellin_residual(profile_, solution.chi);
      worst = std::max(worst, residual);
      per_vector.push_back({{"c", rational_vector_json(c)}, {"residual", residual}});
      family.push_back(solution.chi);
    }
    const int rank = independence_rank(family);
    const bool ok = worst < options_.annihilation_tolerance && rank == dims_.rank;
    return {"log_solutions", status_of(ok),
            std::to_string(per_vector.size()) + " chi solutions, max residual " + format_double(worst) +
                ", rank with Y " + std::to_string(rank),
            {{"residual", worst}, {"rank", rank}, {"solutions", per_vector}}};
  }

  CheckResult reference_operator() {
    const auto reference = reference_ode(profile_.m, profile_.m1());
    if (!reference) return skipped("reference_operator", "no reference form for this profile");
    Rational factor;
    const bool ok = equals_up_to_rational_scale(mellin_operator_1d(profile_.m, profile_.m1()), *reference, &factor);
    return {"reference_operator", status_of(ok),
            ok ? "matches reference form with scale " + to_string(factor) : "differs from reference form",
            {{"scale", ok ? to_string(factor) : ""}}};
  }

  CheckResult discriminant() {
    const UPoly leading = mellin_operator_1d(profile_.m, profile_.m1()).leading_coefficient();
    Rational factor;
    const bool ok = leading.proportional_to(discriminant_poly(profile_.m, profile_.m1()), &factor);
    return {"discriminant", status_of(ok),
            "leading coefficient " + leading.to_string() + (ok ? " is proportional" : " is NOT proportional") +
                " to the discriminant",
            {{"leading", leading.to_string()}, {"discriminant", discriminant_poly(profile_.m, profile_.m1()).to_string()}}};
  }

  CheckResult factorizations() {
    int checked = 0, held = 0;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& f : reference_factorizations()) {
      if (f.m != profile_.m || f.m1 != profile_.m1()) continue;
      ++checked;
      const bool ok = factorization_check(f.left, f.right, f.target, f.multiplier) &&
                      equals_up_to_rational_scale(f.target, mellin_operator_1d(profile_.m, profile_.m1()));
      held += ok;
      rows.push_back({{"identity", f.description}, {"holds", ok}});
    }
    if (checked == 0) return skipped("factorizations", "no reference factorization for this profile");
    return {"factorizations", status_of(held == checked),
            std::to_string(held) + "/" + std::to_string(checked) + " reference factorizations hold", {{"rows", rows}}};
  }

  CheckResult derivative_left_factor() {
    try {
      const DerivativeLeftFactorization f = derivative_left_factorization(profile_.m);
      const bool irreducible = !beukers_heckman_reducible(profile_.m);
      return {"derivative_left_factor", status_of(irreducible),
              "M(m,1) = D o (" + f.right.to_text() + ")" +
                  (irreducible ? ", right factor irreducible" : ", reducibility condition met"),
              {{"right", f.right.to_text()}, {"beukers_heckman_reducible", !irreducible}}};
    } catch (const std::runtime_error& e) {
      return {"derivative_left_factor", CheckStatus::fail, e.what(), {}};
    }
  }

  CheckResult theta_right_factor() {
    try {
      const ThetaRightFactorization f = theta_right_factorization(profile_.m);
      return {"theta_right_factor", CheckStatus::pass,
              "x^" + std::to_string(f.exponent) + " M(m,m-1) = L o (theta - 1); reduced exponent " +
                  std::to_string(f.reduced_exponent),
              {{"exponent", f.exponent}, {"reduced_exponent", f.reduced_exponent}, {"left", f.reduced_left.to_text()}}};
    } catch (const std::runtime_error& e) {
      return {"theta_right_factor", CheckStatus::fail, e.what(), {}};
    }
  }

  CheckResult invariant_subspaces() {
    if (options_.order < profile_.m + 2) return skipped("invariant_subspaces", "order below m+2");
    const InvariantSubspaceReport w = invariant_subspace_witness(profile_.m, profile_.m1(), options_.order);
    nlohmann::json blocks = nlohmann::json::array();
    double worst = 0;
    std::string ranks;
    for (const auto& b : w.blocks) {
      blocks.push_back({{"twist", b.twist},
                        {"branches", b.branches},
                        {"rank_selected", b.rank_selected},
                        {"rank_all_branches", b.rank_all_branches},
                        {"residual", b.max_residual}});
      worst = std::max(worst, b.max_residual);
      ranks += (ranks.empty() ? "" : "+") + std::to_string(b.rank_selected);
    }
    const bool ok = w.ok && worst < options_.annihilation_tolerance;
    return {"invariant_subspaces", status_of(ok),
            "blocks " + ranks + ", joint rank " + std::to_string(w.joint_rank) + ", max residual " +
                format_double(worst),
            {{"blocks", blocks}, {"rank", w.joint_rank}, {"residual", worst}}};
  }

  ExponentProfile profile_;
  VerifyOptions options_;
  DimensionReport dims_;
  int n_ = 0;
  int box_order_ = 0;
  std::vector<std::vector<PointJet>> jets_;
  std::vector<ComplexSeries> y_family_;
};

}  // namespace

VerifyReport verify(const ExponentProfile& profile, const VerifyOptions& options) {
  if (options.order < 1) throw std::invalid_argument("order must be at least 1");
  return Verifier(profile, options).run();
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json residuals = nlohmann::json::object(), ranks = nlohmann::json::object();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"summary", c.summary}, {"data", c.data}});
    if (c.data.contains("residual")) residuals[c.name] = c.data["residual"];
    if (c.data.contains("rank")) ranks[c.name] = c.data["rank"];
  }
  return {{"profile", profile_json(report.profile)},
          {"twists", index_list_json(report.twists)},
          {"order", report.options.order},
          {"seed", report.options.seed},
          {"tolerances",
           {{"annihilation", report.options.annihilation_tolerance},
            {"substitution", kSubstitutionTolerance},
            {"rank", kRankTolerance},
            {"jet_evaluation", kJetEvaluationTolerance}}},
          {"checks", checks},
          {"residuals", residuals},
          {"ranks", ranks},
          {"passed", report.passed()}};
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify " << report.profile.to_string() << " order " << report.options.order << " seed "
      << report.options.seed << '\n';
  for (const auto& c : report.checks) {
    std::string label = status_name(c.status);
    std::transform(label.begin(), label.end(), label.begin(), ::toupper);
    out << label << ' ' << c.name << ": " << c.summary << '\n';
  }
  out << (report.passed() ? "ALL CHECKS PASSED" : "VERIFICATION FAILED") << '\n';
  return out.str();
}

}  // namespace mellin
