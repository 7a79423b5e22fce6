#pragma once

#include "mellin/multi_index.hpp"
#include "mellin/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mellin {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponents of y^m + x_1 y^{m_1} + ... + x_n y^{m_n} - 1 = 0.
///
/// Every other quantity (gcd d, complements m'_j = m - m_j, the index box)
/// is derived from (m; m_1, ..., m_n). Construct through make_profile.
struct ExponentProfile {
  int m = 0;
  std::vector<int> m_list;
  std::vector<int> mprime_list;
  int d = 0;

  std::size_t n() const { return m_list.size(); }
  int m1() const { return m_list.front(); }
  bool top_exponent_adjacent() const { return m_list.front() == m - 1; }

  /// "(3,[2,1])".
  std::string to_string() const;

  friend bool operator==(const ExponentProfile&, const ExponentProfile&) = default;
};

/// Validates m > m_1 > ... > m_n > 0 and fills in d and the complements.
ExponentProfile make_profile(int m, const std::vector<int>& m_list);

/// B = {0, ..., m-1}^n in lexicographic order.
std::vector<MultiIndex> index_box(const ExponentProfile& profile);

/// True iff the principal-series coefficient at nu vanishes, decided by
/// scanning mu = 1 .. |nu|-1 for <M,nu> - m mu + 1 = 0.
bool principal_coefficient_vanishes(const ExponentProfile& profile, const MultiIndex& nu);

/// Same predicate restricted to nu in B, decided through the congruence
/// <M,nu> = -1 (mod m) with the nu = e_1 exception when m_1 = m - 1.
/// Only meaningful for d = 1.
bool missing_by_congruence(const ExponentProfile& profile, const MultiIndex& nu);

/// B' : indices of B carried by the principal series.
std::vector<MultiIndex> algebraic_index_set(const ExponentProfile& profile);

/// B'' = B \ B'.
std::vector<MultiIndex> missing_index_set(const ExponentProfile& profile);

struct DimensionReport {
  long rank = 0;
  long dim_Y = 0;
  long dim_R = 0;
  long dim_S = 0;
  long card_Bprime = 0;
};

DimensionReport dims(const ExponentProfile& profile);

/// One lexicographically smallest representative per coset of the cyclic
/// subgroup generated by (m_1, ..., m_n) in (Z/m)^n. The zero index is first.
std::vector<MultiIndex> coset_representatives(const ExponentProfile& profile);

/// Basis of the relation space R in coordinates indexed by the coset
/// representatives. Throws ProfileError when d > 1.
std::vector<std::vector<Rational>> relation_basis(const ExponentProfile& profile);

/// #{nu in B : <M,nu> = r (mod m)}.
long modular_count(const ExponentProfile& profile, int residue);

/// Exhaustive integer search for i, j in {0, ..., m-2} with
/// (m i - 1)/(m (m-1)) + j/m an integer.
bool beukers_heckman_reducible(int m);

long ipow(long base, unsigned exponent);

}  // namespace mellin
