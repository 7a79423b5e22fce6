#include "mellin/report.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace mellin;

namespace {

MultiIndex twist_or_zero(const ExponentProfile& profile, const std::optional<std::vector<int>>& twist) {
  return twist ? MultiIndex(*twist) : MultiIndex(profile.n());
}

std::string series_report(int m, const std::vector<int>& exponents, int order) {
  const auto profile = make_profile(m, exponents);
  const auto series = principal_series(profile, order);
  nlohmann::json out = {{"profile", profile_json(profile)},
                        {"order", order},
                        {"series", to_json(series)},
                        {"generating", order >= static_cast<int>(profile.n()) * (profile.m - 1)
                                           ? nlohmann::json(is_generating(series, profile))
                                           : nlohmann::json(nullptr)}};
  return out.dump();
}

std::string jets_report(int m, const std::vector<int>& exponents, const std::optional<std::vector<int>>& twist,
                        int order) {
  const auto profile = make_profile(m, exponents);
  nlohmann::json jets = nlohmann::json::array();
  for (const auto& jet : lift_jets(profile, twist_or_zero(profile, twist), order))
    jets.push_back({{"branch", jet.branch_id}, {"series", to_json(jet.coefficients)}});
  return jets.dump();
}

}  // namespace

PYBIND11_MODULE(_core, module) {
  module.doc() = "Mellin hypergeometric systems of y^m + x_1 y^{m_1} + ... + x_n y^{m_n} - 1 = 0";
  py::register_exception<ProfileError>(module, "ProfileError", PyExc_ValueError);

  module.def(
      "dims_json", [](int m, const std::vector<int>& exponents) { return dims_report(make_profile(m, exponents)).dump(); },
      py::arg("m"), py::arg("exponents"));
  module.def(
      "operators_json",
      [](int m, const std::vector<int>& exponents, bool check_horn) {
        return operators_report(make_profile(m, exponents), check_horn).dump();
      },
      py::arg("m"), py::arg("exponents"), py::arg("check_horn") = false);
  module.def("principal_series_json", &series_report, py::arg("m"), py::arg("exponents"), py::arg("order") = 12);
  module.def(
      "basis_series_json",
      [](int m, const std::vector<int>& exponents, const std::vector<int>& initial, int order) {
        return to_json(convenient_basis_series(make_profile(m, exponents), MultiIndex(initial), order)).dump();
      },
      py::arg("m"), py::arg("exponents"), py::arg("initial"), py::arg("order") = 12);
  module.def("root_jets_json", &jets_report, py::arg("m"), py::arg("exponents"), py::arg("twist") = std::nullopt,
             py::arg("order") = 12);
  module.def(
      "roots_at_point",
      [](int m, const std::vector<int>& exponents, const std::vector<Complex>& point,
         const std::optional<std::vector<int>>& twist, std::uint64_t seed) {
        const auto profile = make_profile(m, exponents);
        return mellin::roots_at_point({profile, twist_or_zero(profile, twist), point}, seed);
      },
      py::arg("m"), py::arg("exponents"), py::arg("point"), py::arg("twist") = std::nullopt, py::arg("seed") = 0);
  module.def(
      "verify_json",
      [](int m, const std::vector<int>& exponents, int order, std::uint64_t seed, double tolerance) {
        VerifyOptions options;
        options.order = order;
        options.seed = seed;
        options.annihilation_tolerance = tolerance;
        py::gil_scoped_release release;
        return to_json(verify(make_profile(m, exponents), options)).dump();
      },
      py::arg("m"), py::arg("exponents"), py::arg("order") = 12, py::arg("seed") = 0,
      py::arg("annihilation_tolerance") = kAnnihilationTolerance);
  module.def(
      "modular_count", [](int m, const std::vector<int>& exponents, int residue) {
        return mellin::modular_count(make_profile(m, exponents), residue);
      },
      py::arg("m"), py::arg("exponents"), py::arg("residue"));
  module.def("beukers_heckman_reducible", &beukers_heckman_reducible, py::arg("m"));
}
