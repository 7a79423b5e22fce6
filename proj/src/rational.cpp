#include "mellin/rational.hpp"

#include "mellin/multi_index.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mellin {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned k = 0; k < exponent; ++k) result *= base;
  return result;
}

Integer factorial(unsigned k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t j = 0; j < size(); ++j) out[j] += other[j];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (other.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t j = 0; j < size(); ++j) out[j] -= other[j];
  return out;
}

MultiIndex MultiIndex::mod(int m) const {
  MultiIndex out(*this);
  for (auto& e : out.entries_) e = ((e % m) + m) % m;
  return out;
}

long MultiIndex::dot(const MultiIndex& other) const { return dot(other.entries()); }

long MultiIndex::dot(const std::vector<int>& weights) const {
  if (weights.size() != size()) throw std::invalid_argument("multi-index length mismatch");
  long total = 0;
  for (std::size_t j = 0; j < size(); ++j) total += static_cast<long>(entries_[j]) * weights[j];
  return total;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < size(); ++j) {
    if (j) out << ',';
    out << entries_[j];
  }
  out << ')';
  return out.str();
}

MultiIndex parse_multi_index(const std::string& text) {
  std::vector<int> entries;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    entries.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      digits.push_back(ch);
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else if (ch != '(' && ch != ')') {
      throw std::invalid_argument("bad multi-index: " + text);
    }
  }
  flush();
  if (entries.empty()) throw std::invalid_argument("empty multi-index: " + text);
  return MultiIndex(std::move(entries));
}

}  // namespace mellin
