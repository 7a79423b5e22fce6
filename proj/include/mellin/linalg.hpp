#pragma once

#include "mellin/cyclotomic.hpp"
#include "mellin/rational.hpp"
#include "mellin/ring.hpp"

#include <vector>

namespace mellin {

/// Row rank by fraction-exact Gaussian elimination.
int exact_rank(std::vector<std::vector<Rational>> rows);

/// Row rank over Q(zeta_m) by exact elimination.
int exact_rank(std::vector<std::vector<CyclotomicField>> rows);

/// Numeric rank from a column-pivoted QR: pivots below
/// tolerance * (largest pivot) count as zero.
int numeric_rank(const std::vector<std::vector<Complex>>& rows, double tolerance);

}  // namespace mellin
