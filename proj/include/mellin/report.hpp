#pragma once

#include "mellin/combinatorics.hpp"
#include "mellin/roots.hpp"
#include "mellin/series.hpp"
#include "mellin/weyl.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace mellin {

nlohmann::json profile_json(const ExponentProfile& profile);
nlohmann::json index_list_json(const std::vector<MultiIndex>& indices);
nlohmann::json rational_vector_json(const std::vector<Rational>& values);

/// rank, dim Y, dim R, dim S, B', B'', coset representatives, relation basis.
nlohmann::json dims_report(const ExponentProfile& profile);
std::string dims_text(const nlohmann::json& report);

struct HornCheck {
  std::vector<bool> literal;  // (-1)^{m+1} m^m H'_j == x_j^m o M_j
  std::vector<bool> signed_;  // (-1)^{m+1} m^m H'_j == (-1)^{m'_j} x_j^m o M_j
  bool ok() const;
};

HornCheck horn_check(const ExponentProfile& profile);

/// Mellin operators, G_j, Horn operators in w and in x, lattice matrices.
nlohmann::json operators_report(const ExponentProfile& profile, bool check_horn);
std::string operators_text(const nlohmann::json& report);

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string summary;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyOptions {
  int order = 12;
  std::uint64_t seed = 0;
  double annihilation_tolerance = kAnnihilationTolerance;
};

struct VerifyReport {
  ExponentProfile profile;
  VerifyOptions options;
  std::vector<MultiIndex> twists;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Runs every check that applies to the profile. Checks that need a larger
/// truncation order than requested are reported as skipped.
VerifyReport verify(const ExponentProfile& profile, const VerifyOptions& options = {});

/// {profile, twists, order, seed, tolerances, checks, residuals, ranks, passed}.
nlohmann::json to_json(const VerifyReport& report);
std::string to_text(const VerifyReport& report);

/// Deterministic base point off the discriminant, |x_j| <= 0.1.
std::vector<Complex> default_base_point(std::size_t n);

}  // namespace mellin
