#include "mellin/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct RunConfig {
  std::vector<int> profile;
  int order = 12;
  std::uint64_t seed = 0;
  bool json = false;
  double tol_annihilation = mellin::kAnnihilationTolerance;
  bool check_horn = false;
  std::string basis;
  bool principal = false;
  bool roots = false;
  std::string twist;
  bool generating_check = false;
};

mellin::ExponentProfile parse_profile(const std::vector<int>& values) {
  if (values.size() < 2) throw mellin::ProfileError("a profile needs m and at least one exponent m1");
  return mellin::make_profile(values.front(), {values.begin() + 1, values.end()});
}

void emit(const RunConfig& config, const nlohmann::json& report, const std::string& text) {
  if (config.json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_dims(const RunConfig& config) {
  const auto profile = parse_profile(config.profile);
  const auto report = mellin::dims_report(profile);
  emit(config, report, mellin::dims_text(report));
  return kExitPass;
}

int cmd_operators(const RunConfig& config) {
  const auto profile = parse_profile(config.profile);
  const auto report = mellin::operators_report(profile, config.check_horn);
  emit(config, report, mellin::operators_text(report));
  if (config.check_horn && !report["horn_check"]["ok"].get<bool>()) return kExitVerification;
  return kExitPass;
}

int cmd_series(const RunConfig& config) {
  const auto profile = parse_profile(config.profile);
  const int modes = static_cast<int>(config.principal) + static_cast<int>(!config.basis.empty()) +
                    static_cast<int>(config.roots);
  if (modes > 1) throw CLI::ValidationError("choose at most one of --principal, --basis, --roots");
  if (!config.twist.empty() && !config.roots) throw CLI::ValidationError("--twist needs --roots");
  if (config.generating_check && modes == 1 && !config.principal)
    throw CLI::ValidationError("--generating-check applies to the principal series");

  nlohmann::json report = {{"profile", mellin::profile_json(profile)}, {"order", config.order}};
  std::string text;
  if (config.roots) {
    mellin::MultiIndex twist(profile.n());
    if (!config.twist.empty()) twist = mellin::parse_multi_index(config.twist);
    if (twist.size() != profile.n()) throw CLI::ValidationError("--twist needs one entry per variable");
    report["mode"] = "roots";
    report["twist"] = twist.entries();
    nlohmann::json jets = nlohmann::json::array();
    for (const auto& jet : mellin::lift_jets(profile, twist, config.order)) {
      jets.push_back({{"branch", jet.branch_id}, {"series", mellin::to_json(jet.coefficients)}});
      text += "y" + std::to_string(jet.branch_id) + " = " + mellin::to_text(jet.coefficients) + '\n';
    }
    report["series"] = jets;
  } else if (!config.basis.empty()) {
    const auto initial = mellin::parse_multi_index(config.basis);
    const auto series = mellin::convenient_basis_series(profile, initial, config.order);
    report["mode"] = "basis";
    report["initial"] = initial.entries();
    report["series"] = mellin::to_json(series);
    text = "f" + initial.to_string() + " = " + mellin::to_text(series) + '\n';
  } else {
    const auto series = mellin::principal_series(profile, config.order);
    report["mode"] = "principal";
    report["series"] = mellin::to_json(series);
    text = "y_pr = " + mellin::to_text(series) + '\n';
    if (config.generating_check) {
      const bool generating = mellin::is_generating(series, profile);
      report["generating"] = generating;
      text += generating ? "GENERATING\n" : "NOT GENERATING\n";
    }
  }
  emit(config, report, text);
  return kExitPass;
}

int cmd_verify(const RunConfig& config) {
  const auto profile = parse_profile(config.profile);
  mellin::VerifyOptions options;
  options.order = config.order;
  options.seed = config.seed;
  options.annihilation_tolerance = config.tol_annihilation;
  const auto report = mellin::verify(profile, options);
  emit(config, mellin::to_json(report), mellin::to_text(report));
  return report.passed() ? kExitPass : kExitVerification;
}

void add_common(CLI::App* sub, RunConfig& config) {
  sub->add_option("profile", config.profile, "m m1 ... mn")->required()->expected(-1);
  sub->add_option("--order", config.order, "truncation order (total degree)")
      ->default_val(12)
      ->check(CLI::Range(0, 200));
  sub->add_option("--seed", config.seed, "root-finder perturbation seed")->default_val(0);
  sub->add_flag("--json", config.json, "emit JSON instead of text");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mellin hypergeometric systems of y^m + x_1 y^{m_1} + ... + x_n y^{m_n} - 1 = 0"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<int (*)(const RunConfig&)> action;

  auto* dims = app.add_subcommand("dims", "holonomic rank and solution-space dimensions");
  add_common(dims, config);
  dims->callback([&] { action = cmd_dims; });

  auto* operators = app.add_subcommand("operators", "Mellin, G_j and Horn operators, lattice matrices");
  add_common(operators, config);
  operators->add_flag("--check-horn", config.check_horn, "verify the Horn-Mellin identity");
  operators->callback([&] { action = cmd_operators; });

  auto* series = app.add_subcommand("series", "principal series, convenient basis series or root jets");
  add_common(series, config);
  series->add_flag("--principal", config.principal, "principal series (default)");
  series->add_option("--basis", config.basis, "convenient basis element with initial index I, e.g. 2,1");
  series->add_flag("--roots", config.roots, "Taylor jets of the m roots at the origin");
  series->add_option("--twist", config.twist, "twist exponents I of the equation for --roots");
  series->add_flag("--generating-check", config.generating_check, "report whether the principal series is generating");
  series->callback([&] { action = cmd_series; });

  auto* verify = app.add_subcommand("verify", "run every applicable verification");
  add_common(verify, config);
  verify->add_option("--tol-annihilation", config.tol_annihilation, "relative annihilation tolerance")
      ->default_val(mellin::kAnnihilationTolerance)
      ->check(CLI::PositiveNumber);
  verify->callback([&] { action = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return (*action)(config);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return kExitVerification;
  }
}
