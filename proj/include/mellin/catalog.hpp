#pragma once

#include "mellin/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mellin {

/// Univariate operator from integer coefficient lists, coefficients[k] being
/// the polynomial (low degree first) that multiplies D^k.
DiffOperator integer_operator(const std::vector<std::vector<long>>& coefficients);

/// Reference form of the ordinary Mellin equation for y^m + x y^{m1} - 1,
/// when one is known.
std::optional<DiffOperator> reference_ode(int m, int m1);

/// multiplier o target == left o right.
struct ReferenceFactorization {
  int m = 0;
  int m1 = 0;
  std::string description;
  DiffOperator left;
  DiffOperator right;
  DiffOperator target;
  std::optional<DiffOperator> multiplier;
};

std::vector<ReferenceFactorization> reference_factorizations();

}  // namespace mellin
