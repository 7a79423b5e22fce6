#include "mellin/catalog.hpp"

namespace mellin {

DiffOperator integer_operator(const std::vector<std::vector<long>>& coefficients) {
  std::vector<UPoly> polys;
  for (const auto& row : coefficients) {
    std::vector<Rational> values;
    for (long c : row) values.emplace_back(c);
    polys.emplace_back(std::move(values));
  }
  return DiffOperator::univariate(polys);
}

std::optional<DiffOperator> reference_ode(int m, int m1) {
  if (m == 2 && m1 == 1) return integer_operator({{-1}, {0, 1}, {4, 0, 1}});
  if (m == 3 && m1 == 2) return integer_operator({{-4}, {0, 4}, {0, 0, 18}, {-27, 0, 0, 4}});
  if (m == 3 && m1 == 1) return integer_operator({{-2}, {0, 10}, {0, 0, 18}, {27, 0, 0, 4}});
  if (m == 4 && m1 == 2)
    return integer_operator({{-15}, {0, 120}, {0, 0, 360}, {0, 0, 0, 160}, {-256, 0, 0, 0, 16}});
  if (m == 6 && m1 == 2)
    return integer_operator({{-6545},
                             {0, 236180},
                             {0, 0, 955780},
                             {0, 0, 0, 818944},
                             {0, 0, 0, 0, 242816},
                             {0, 0, 0, 0, 0, 27648},
                             {-46656, 0, 0, 0, 0, 0, 1024}});
  return std::nullopt;
}

std::vector<ReferenceFactorization> reference_factorizations() {
  std::vector<ReferenceFactorization> out;
  out.push_back({3, 2, "x^2 M(3,2) = ((4x^4 - 27x) D^2 + (14x^3 + 27) D + 4x^2)(x D - 1)",
                 integer_operator({{0, 0, 4}, {27, 0, 0, 14}, {0, -27, 0, 0, 4}}), integer_operator({{-1}, {0, 1}}),
                 *reference_ode(3, 2), DiffOperator::x(1, 0, 2)});
  out.push_back({3, 1, "M(3,1) = D((4x^3 + 27) D^2 + 6x^2 D - 2x)", DiffOperator::d(1, 0),
                 integer_operator({{0, -2}, {0, 0, 6}, {27, 0, 0, 4}}), *reference_ode(3, 1), std::nullopt});
  out.push_back({4, 2, "M(4,2) = ((4x^2 - 16) D^2 + 20x D + 15)((4x^2 + 16) D^2 + 4x D - 1)",
                 integer_operator({{15}, {0, 20}, {-16, 0, 4}}), integer_operator({{-1}, {0, 4}, {16, 0, 4}}),
                 *reference_ode(4, 2), std::nullopt});
  out.push_back({6, 2,
                 "M(6,2) = ((32x^3 - 216) D^3 + 432x^2 D^2 + 1526x D + 1309)"
                 "((32x^3 + 216) D^3 + 144x^2 D^2 + 86x D - 5)",
                 integer_operator({{1309}, {0, 1526}, {0, 0, 432}, {-216, 0, 0, 32}}),
                 integer_operator({{-5}, {0, 86}, {0, 0, 144}, {216, 0, 0, 32}}), *reference_ode(6, 2),
                 std::nullopt});
  return out;
}

}  // namespace mellin
