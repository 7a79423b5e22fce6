#include "mellin/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace mellin {

namespace {

Rational binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational falling_factorial(int n, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

std::string variable_name(char base, std::size_t j, int n_vars) {
  std::string name(1, base);
  if (n_vars > 1) name += std::to_string(j + 1);
  return name;
}

std::string monomial_text(const MultiIndex& e, char base, int n_vars) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << variable_name(base, j, n_vars);
    if (e[j] > 1) out << '^' << e[j];
  }
  return out.str();
}

}  // namespace

DiffOperator DiffOperator::scalar(int n_vars, const Rational& c) {
  DiffOperator op(n_vars);
  const MultiIndex zero(static_cast<std::size_t>(n_vars));
  op.add_term(zero, zero, c);
  return op;
}

DiffOperator DiffOperator::term(const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  if (a.size() != b.size()) throw std::invalid_argument("operator term exponents differ in length");
  DiffOperator op(static_cast<int>(a.size()));
  op.add_term(a, b, c);
  return op;
}

DiffOperator DiffOperator::x(int n_vars, std::size_t j, int power) {
  const auto n = static_cast<std::size_t>(n_vars);
  return term(MultiIndex::unit(n, j, power), MultiIndex(n), 1);
}

DiffOperator DiffOperator::d(int n_vars, std::size_t j, int power) {
  const auto n = static_cast<std::size_t>(n_vars);
  return term(MultiIndex(n), MultiIndex::unit(n, j, power), 1);
}

DiffOperator DiffOperator::theta(int n_vars, std::size_t j) {
  const auto n = static_cast<std::size_t>(n_vars);
  return term(MultiIndex::unit(n, j), MultiIndex::unit(n, j), 1);
}

DiffOperator DiffOperator::univariate(const std::vector<UPoly>& coefficients) {
  DiffOperator op(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const auto& poly = coefficients[k];
    for (int a = 0; a <= poly.degree(); ++a)
      op.add_term(MultiIndex{a}, MultiIndex{static_cast<int>(k)}, poly.coefficient(a));
  }
  return op;
}

Rational DiffOperator::coefficient(const MultiIndex& a, const MultiIndex& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffOperator::add_term(const MultiIndex& a, const MultiIndex& b, const Rational& c) {
  if (a.size() != static_cast<std::size_t>(n_vars_) || b.size() != static_cast<std::size_t>(n_vars_))
    throw std::invalid_argument("operator term has wrong number of variables");
  if (!a.all_nonnegative() || !b.all_nonnegative()) throw std::invalid_argument("negative exponent in operator");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void DiffOperator::check(const DiffOperator& other) const {
  if (other.n_vars_ != n_vars_) throw std::invalid_argument("operator variable counts differ");
}

DiffOperator DiffOperator::operator+(const DiffOperator& other) const {
  check(other);
  DiffOperator out(*this);
  for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
  return out;
}

DiffOperator DiffOperator::operator-() const { return scaled(-1); }

DiffOperator DiffOperator::operator-(const DiffOperator& other) const { return *this + (-other); }

DiffOperator DiffOperator::scaled(const Rational& c) const {
  DiffOperator out(n_vars_);
  for (const auto& [key, value] : terms_) out.add_term(key.first, key.second, value * c);
  return out;
}

DiffOperator DiffOperator::compose(const DiffOperator& other) const {
  check(other);
  DiffOperator out(n_vars_);
  const auto n = static_cast<std::size_t>(n_vars_);
  for (const auto& [left_key, left_c] : terms_) {
    const auto& [a, b] = left_key;
    for (const auto& [right_key, right_c] : other.terms_) {
      const auto& [c, d] = right_key;
      // D^b x^c = sum_k prod_j C(b_j, k_j) (c_j)_{k_j} x^{c-k} D^{b-k}
      MultiIndex k(n);
      while (true) {
        Rational weight = left_c * right_c;
        for (std::size_t j = 0; j < n; ++j) weight *= binomial(b[j], k[j]) * falling_factorial(c[j], k[j]);
        out.add_term(a + c - k, b + d - k, weight);
        std::size_t j = 0;
        while (j < n) {
          if (++k[j] <= std::min(b[j], c[j])) break;
          k[j] = 0;
          ++j;
        }
        if (j == n) break;
      }
    }
  }
  return out;
}

int DiffOperator::order() const {
  int best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, key.second.degree());
  return best;
}

std::optional<DiffOperator> DiffOperator::left_divide_by_x(std::size_t j, int e) const {
  DiffOperator out(n_vars_);
  for (const auto& [key, c] : terms_) {
    if (key.first[j] < e) return std::nullopt;
    MultiIndex a = key.first;
    a[j] -= e;
    out.add_term(a, key.second, c);
  }
  return out;
}

int DiffOperator::x_valuation(std::size_t j) const {
  if (terms_.empty()) return 0;
  int best = -1;
  for (const auto& [key, c] : terms_) best = (best < 0) ? key.first[j] : std::min(best, key.first[j]);
  return best;
}

UPoly DiffOperator::coefficient_of_derivative(int k) const {
  if (n_vars_ != 1) throw std::invalid_argument("univariate operator expected");
  std::vector<Rational> coeffs;
  for (const auto& [key, c] : terms_) {
    if (key.second[0] != k) continue;
    const auto a = static_cast<std::size_t>(key.first[0]);
    if (coeffs.size() <= a) coeffs.resize(a + 1, 0);
    coeffs[a] += c;
  }
  return UPoly(std::move(coeffs));
}

UPoly DiffOperator::leading_coefficient() const {
  if (n_vars_ != 1) throw std::invalid_argument("univariate operator expected");
  if (is_zero()) throw std::domain_error("zero operator has no leading coefficient");
  return coefficient_of_derivative(order());
}

std::string DiffOperator::to_text(char variable) const {
  if (terms_.empty()) return "0";
  // group by D-monomial, highest total order first, then lexicographically
  std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rational>>, GradedLess> groups;
  for (const auto& [key, c] : terms_) groups[key.second].emplace_back(key.first, c);
  std::ostringstream out;
  bool first_group = true;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    auto terms = it->second;
    std::sort(terms.begin(), terms.end(),
              [](const auto& l, const auto& r) { return GradedLess{}(r.first, l.first); });
    const std::string d_part = monomial_text(it->first, 'D', n_vars_);
    std::ostringstream poly;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const auto& [a, c] = terms[t];
      const Rational magnitude = abs(c);
      const std::string x_part = monomial_text(a, variable, n_vars_);
      if (t == 0)
        poly << (c < 0 ? "-" : "");
      else
        poly << (c < 0 ? " - " : " + ");
      if (magnitude != 1 || x_part.empty()) poly << to_string(magnitude) << (x_part.empty() ? "" : " ");
      poly << x_part;
    }
    std::string coefficient = poly.str();
    bool negative_single = false;
    if (terms.size() > 1 && !d_part.empty()) {
      coefficient = "(" + coefficient + ")";
    } else if (terms.size() == 1 && coefficient.front() == '-') {
      negative_single = true;
      coefficient.erase(0, 1);
    }
    if (first_group)
      out << (negative_single ? "-" : "");
    else
      out << (negative_single ? " - " : " + ");
    first_group = false;
    if (d_part.empty()) {
      out << coefficient;
    } else if (coefficient == "1") {
      out << d_part;
    } else {
      out << coefficient << ' ' << d_part;
    }
  }
  return out.str();
}

nlohmann::json DiffOperator::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, c] : terms_)
    out.push_back({{"a", key.first.entries()}, {"b", key.second.entries()}, {"coeff", to_string(c)}});
  return out;
}

bool equals_up_to_rational_scale(const DiffOperator& a, const DiffOperator& b, Rational* factor) {
  if (a.n_vars() != b.n_vars()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& [key, value] = *b.terms().begin();
  const Rational ratio = a.coefficient(key.first, key.second) / value;
  if (ratio == 0) return false;
  if (a != b.scaled(ratio)) return false;
  if (factor) *factor = ratio;
  return true;
}

ThetaPolynomial ThetaPolynomial::constant(int n_vars, const Rational& c) {
  ThetaPolynomial p(n_vars);
  if (c != 0) p.terms_[MultiIndex(static_cast<std::size_t>(n_vars))] = c;
  return p;
}

ThetaPolynomial ThetaPolynomial::linear(const std::vector<Rational>& weights, const Rational& shift) {
  const int n = static_cast<int>(weights.size());
  ThetaPolynomial p = constant(n, shift);
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (weights[j] != 0) p.terms_[MultiIndex::unit(weights.size(), j)] = weights[j];
  return p;
}

ThetaPolynomial ThetaPolynomial::operator*(const ThetaPolynomial& other) const {
  ThetaPolynomial out(n_vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Rational& slot = out.terms_[ea + eb];
      slot += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

ThetaPolynomial ThetaPolynomial::operator+(const ThetaPolynomial& other) const {
  ThetaPolynomial out(*this);
  for (const auto& [e, c] : other.terms_) out.terms_[e] += c;
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

ThetaPolynomial ThetaPolynomial::scaled(const Rational& c) const {
  ThetaPolynomial out(n_vars_);
  if (c == 0) return out;
  for (const auto& [e, value] : terms_) out.terms_[e] = value * c;
  return out;
}

Rational ThetaPolynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < point.size(); ++j) term *= rational_pow(point[j], static_cast<unsigned>(e[j]));
    total += term;
  }
  return total;
}

DiffOperator ThetaPolynomial::expand() const {
  DiffOperator out(n_vars_);
  std::vector<std::vector<DiffOperator>> powers(static_cast<std::size_t>(n_vars_));
  auto theta_power = [&](std::size_t j, int k) -> const DiffOperator& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(DiffOperator::scalar(n_vars_, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * DiffOperator::theta(n_vars_, j));
    return cache[static_cast<std::size_t>(k)];
  };
  for (const auto& [e, c] : terms_) {
    DiffOperator term = DiffOperator::scalar(n_vars_, c);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) term = term * theta_power(j, e[j]);
    out = out + term;
  }
  return out;
}

ThetaPolynomial theta_product(const std::vector<Rational>& weights, const Rational& shift, const Rational& step,
                              int count) {
  ThetaPolynomial out = ThetaPolynomial::constant(static_cast<int>(weights.size()), 1);
  for (int k = 0; k < count; ++k) out = out * ThetaPolynomial::linear(weights, shift + step * k);
  return out;
}

namespace {

std::vector<Rational> as_rationals(const std::vector<int>& values, const Rational& scale = 1) {
  std::vector<Rational> out;
  for (int v : values) out.push_back(scale * v);
  return out;
}

}  // namespace

ThetaPolynomial mellin_symbol(const ExponentProfile& profile, std::size_t j) {
  const Rational m = profile.m;
  return theta_product(as_rationals(profile.m_list), 1, m, profile.m_list[j]) *
         theta_product(as_rationals(profile.mprime_list), -1, m, profile.mprime_list[j]);
}

std::vector<DiffOperator> mellin_system(const ExponentProfile& profile) {
  const int n = static_cast<int>(profile.n());
  const Rational scale = rational_pow(profile.m, static_cast<unsigned>(profile.m));
  std::vector<DiffOperator> system;
  for (std::size_t j = 0; j < profile.n(); ++j)
    system.push_back(mellin_symbol(profile, j).expand() -
                     DiffOperator::d(n, j, profile.m).scaled(scale * sign_pow(profile.m_list[j])));
  return system;
}

std::vector<DiffOperator> gj_operators(const ExponentProfile& profile) {
  const int n = static_cast<int>(profile.n());
  const int m = profile.m;
  const Rational scale = rational_pow(m, static_cast<unsigned>(m));
  std::vector<DiffOperator> out;
  for (std::size_t j = 0; j < profile.n(); ++j) {
    const DiffOperator xm = DiffOperator::x(n, j, m);
    out.push_back(xm * mellin_symbol(profile, j).expand() -
                  (xm * DiffOperator::d(n, j, m)).scaled(scale * sign_pow(profile.m_list[j])));
  }
  return out;
}

HornSystem horn_system(const ExponentProfile& profile) {
  const int n = static_cast<int>(profile.n());
  const int m = profile.m;
  const Rational inv_m = Rational(1) / m;
  std::vector<Rational> neg_weights = as_rationals(profile.m_list, -1);
  std::vector<Rational> neg_complements = as_rationals(profile.mprime_list, -1);
  std::vector<Rational> neg_weights_x = as_rationals(profile.m_list, -inv_m);
  std::vector<Rational> neg_complements_x = as_rationals(profile.mprime_list, -inv_m);

  HornSystem horn;
  for (std::size_t j = 0; j < profile.n(); ++j) {
    std::vector<Rational> unit(profile.n(), 0);
    unit[j] = 1;
    std::vector<Rational> scaled_unit(profile.n(), 0);
    scaled_unit[j] = m;

    const DiffOperator w_part =
        (theta_product(neg_weights, -inv_m, -1, profile.m_list[j]) *
         theta_product(neg_complements, inv_m, -1, profile.mprime_list[j]))
            .expand();
    horn.in_w.push_back(theta_product(scaled_unit, 0, -1, m).expand() - DiffOperator::x(n, j) * w_part);

    const DiffOperator x_part = (theta_product(neg_weights_x, -inv_m, -1, profile.m_list[j]) *
                                 theta_product(neg_complements_x, inv_m, -1, profile.mprime_list[j]))
                                    .expand();
    horn.in_x.push_back(theta_product(unit, 0, -1, m).expand() -
                        (DiffOperator::x(n, j, m) * x_part).scaled(sign_pow(profile.mprime_list[j])));
  }
  return horn;
}

DiffOperator horn_mellin_quotient(const ExponentProfile& profile, std::size_t j) {
  const int m = profile.m;
  const DiffOperator scaled =
      horn_system(profile).in_x.at(j).scaled(rational_pow(m, static_cast<unsigned>(m)) * sign_pow(m + 1));
  auto quotient = scaled.left_divide_by_x(j, m);
  if (!quotient) throw std::logic_error("Horn operator is not left-divisible by x_j^m");
  return *quotient;
}

LatticeMatrices lattice_matrices(const ExponentProfile& profile) {
  const std::size_t n = profile.n();
  const int m = profile.m;
  LatticeMatrices out;
  std::vector<int> ones(n + 2, 1);
  std::vector<int> weights{m};
  weights.insert(weights.end(), profile.m_list.begin(), profile.m_list.end());
  weights.push_back(0);
  out.A = {ones, weights};
  out.A_prime = {as_rationals(ones), as_rationals(weights, Rational(1) / profile.d)};

  out.B.assign(n + 2, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    out.B[0][j] = -profile.m_list[j];
    out.B[j + 1][j] = m;
    out.B[n + 1][j] = -profile.mprime_list[j];
  }
  out.c.assign(n + 2, 0);
  out.c.front() = Rational(-1) / m;
  out.c.back() = Rational(1) / m;
  out.beta = {0, -1};
  out.beta_prime = {0, Rational(-1) / profile.d};
  return out;
}

bool lattice_compatible(const LatticeMatrices& lattice) {
  const std::size_t columns = lattice.B.front().size();
  for (std::size_t col = 0; col < columns; ++col)
    for (const auto& row : lattice.A) {
      long total = 0;
      for (std::size_t k = 0; k < row.size(); ++k) total += static_cast<long>(row[k]) * lattice.B[k][col];
      if (total != 0) return false;
    }
  return true;
}

DiffOperator mellin_operator_1d(int m, int m1) {
  if (!(m > m1 && m1 >= 1)) throw ProfileError("need m > m_1 >= 1");
  return mellin_system(make_profile(m, {m1})).front();
}

UPoly discriminant_poly(int m, int m1) {
  if (!(m > m1 && m1 >= 1)) throw ProfileError("need m > m_1 >= 1");
  const int d = make_profile(m, {m1}).d;
  const int a = m / d;
  const int b = m1 / d;
  const Rational lead = rational_pow(b, static_cast<unsigned>(b)) * rational_pow(a - b, static_cast<unsigned>(a - b));
  const Rational constant = -rational_pow(a, static_cast<unsigned>(a)) * sign_pow(b);
  return UPoly::monomial(lead, a) + UPoly::constant(constant);
}

bool factorization_check(const DiffOperator& left, const DiffOperator& right, const DiffOperator& target,
                         const std::optional<DiffOperator>& multiplier) {
  const DiffOperator lhs = multiplier ? multiplier->compose(target) : target;
  return lhs == left.compose(right);
}

ThetaRightFactorization theta_right_factorization(int m) {
  if (m < 2) throw ProfileError("need m >= 2");
  const DiffOperator theta = DiffOperator::theta(1, 0);
  const DiffOperator one = DiffOperator::scalar(1, 1);

  ThetaRightFactorization out;
  out.right = theta - one;
  const DiffOperator product = theta_product({Rational(m - 1)}, 1, m, m - 1).expand();
  DiffOperator tail = theta;
  for (int k = 2; k <= m - 1; ++k) tail = tail * (theta - one.scaled(k));
  out.left = DiffOperator::x(1, 0, m) * product + tail.scaled(rational_pow(-m, static_cast<unsigned>(m)));

  const DiffOperator mellin = mellin_operator_1d(m, m - 1);
  const DiffOperator composed = out.left * out.right;
  for (int e = 0; e <= m; ++e) {
    if (DiffOperator::x(1, 0, e) * mellin == composed) {
      out.exponent = e;
      break;
    }
  }
  if (out.exponent < 0)
    throw std::runtime_error("no multiplier x^e, 0 <= e <= m, makes the m_1 = m-1 factorization exact for m = " +
                             std::to_string(m));
  const int valuation = std::min(out.left.x_valuation(0), out.exponent);
  out.reduced_left = *out.left.left_divide_by_x(0, valuation);
  out.reduced_exponent = out.exponent - valuation;
  if (DiffOperator::x(1, 0, out.reduced_exponent) * mellin != out.reduced_left * out.right)
    throw std::logic_error("reduced m_1 = m-1 factorization failed");
  return out;
}

DerivativeLeftFactorization derivative_left_factorization(int m) {
  if (m < 2) throw ProfileError("need m >= 2");
  DerivativeLeftFactorization out;
  out.left = DiffOperator::d(1, 0);
  out.right = DiffOperator::x(1, 0) * theta_product({Rational(m - 1)}, -1, m, m - 1).expand() +
              DiffOperator::d(1, 0, m - 1).scaled(rational_pow(m, static_cast<unsigned>(m)));
  if (out.left * out.right != mellin_operator_1d(m, 1))
    throw std::runtime_error("D o M_alg differs from M(m,1) for m = " + std::to_string(m));
  return out;
}

}  // namespace mellin
