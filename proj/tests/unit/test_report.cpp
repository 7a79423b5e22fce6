#include <doctest.h>

#include "mellin/report.hpp"

#include <algorithm>

using namespace mellin;

namespace {

const CheckResult* find(const VerifyReport& report, const std::string& name) {
  for (const auto& c : report.checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("dimension report") {
  const auto report = dims_report(make_profile(3, {2, 1}));
  CHECK(report["rank"] == 9);
  CHECK(report["dim_Y"] == 7);
  CHECK(report["missing_indices"] == nlohmann::json({{0, 2}, {2, 1}}));
  CHECK(report["relation_basis"] == nlohmann::json({{"1", "-1", "0"}, {"1", "0", "-1"}}));
  const std::string text = dims_text(report);
  CHECK(text.find("dim Y 7") != std::string::npos);
  CHECK(text.find("missing (0,2) (2,1)") != std::string::npos);
}

TEST_CASE("operator report") {
  const auto report = operators_report(make_profile(2, {1}), true);
  CHECK(report["mellin"][0]["text"] == "(x^2 + 4) D^2 + x D - 1");
  CHECK(report["horn_check"]["ok"] == true);
  CHECK(report["horn_check"]["rows"][0]["literal"] == false);
  CHECK(report["matrices"]["compatible"] == true);
  CHECK(report["discriminant"] == "x^2 + 4");
  CHECK(operators_text(report).find("M = (x^2 + 4) D^2 + x D - 1") != std::string::npos);
}

TEST_CASE("verification of (3,[2,1])") {
  const auto report = verify(make_profile(3, {2, 1}));
  CHECK(report.passed());
  const auto* logs = find(report, "log_solutions");
  REQUIRE(logs != nullptr);
  CHECK(logs->status == CheckStatus::pass);
  CHECK(logs->data["rank"] == 9);
  CHECK(find(report, "root_jets")->data["rank"] == 7);
  const auto json = to_json(report);
  CHECK(json["passed"] == true);
  CHECK(json["twists"] == nlohmann::json({{0, 0}, {0, 1}, {0, 2}}));
  CHECK(json["ranks"]["rotation_rank"] == 7);
  CHECK(json["residuals"].contains("log_solutions"));
  CHECK(to_text(report).find("ALL CHECKS PASSED") != std::string::npos);
}

TEST_CASE("verification of ordinary profiles") {
  const auto r31 = verify(make_profile(3, {1}));
  CHECK(r31.passed());
  CHECK(find(r31, "derivative_left_factor")->status == CheckStatus::pass);
  CHECK(find(r31, "factorizations")->status == CheckStatus::pass);
  const auto r42 = verify(make_profile(4, {2}));
  CHECK(r42.passed());
  CHECK(find(r42, "invariant_subspaces")->summary.find("blocks 2+2") != std::string::npos);
  CHECK(find(r42, "relations") == nullptr);
}

TEST_CASE("low orders skip the checks they cannot decide") {
  const auto report = verify(make_profile(3, {2, 1}), {2, 0, kAnnihilationTolerance});
  CHECK(report.passed());
  CHECK(find(report, "basis_annihilation")->status == CheckStatus::skipped);
  CHECK(find(report, "log_solutions")->status == CheckStatus::skipped);
  CHECK_THROWS(verify(make_profile(3, {2, 1}), {0, 0, kAnnihilationTolerance}));
}

TEST_CASE("an impossible tolerance is reported as a failure") {
  const auto report = verify(make_profile(6, {4, 2}), {12, 0, 1e-30});
  CHECK_FALSE(report.passed());
  CHECK(find(report, "root_jets")->status == CheckStatus::fail);
}

TEST_CASE("reports are deterministic") {
  const auto a = to_json(verify(make_profile(3, {1}), {12, 5, kAnnihilationTolerance})).dump();
  const auto b = to_json(verify(make_profile(3, {1}), {12, 5, kAnnihilationTolerance})).dump();
  CHECK(a == b);
}
