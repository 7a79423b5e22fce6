#include "mellin/linalg.hpp"

#include <Eigen/Dense>

#include <utility>

namespace mellin {

namespace {

template <typename T, typename IsZero, typename Inverse>
int eliminate(std::vector<std::vector<T>>& rows, IsZero is_zero, Inverse inverse) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& top = rows[static_cast<std::size_t>(rank)];
    const T inv = inverse(top[col]);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (is_zero(rows[r][col])) continue;
      const T factor = rows[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c) rows[r][c] = rows[r][c] - factor * top[c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int exact_rank(std::vector<std::vector<Rational>> rows) {
  return eliminate(
      rows, [](const Rational& q) { return q == 0; }, [](const Rational& q) { return Rational(1 / q); });
}

int exact_rank(std::vector<std::vector<CyclotomicField>> rows) {
  return eliminate(
      rows, [](const CyclotomicField& q) { return q.is_zero(); }, [](const CyclotomicField& q) { return q.inverse(); });
}

int numeric_rank(const std::vector<std::vector<Complex>>& rows, double tolerance) {
  if (rows.empty() || rows.front().empty()) return 0;
  Eigen::MatrixXcd matrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  // columns are the series, so pivoting selects among them
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(matrix.transpose());
  qr.setThreshold(tolerance);
  return static_cast<int>(qr.rank());
}

}  // namespace mellin
