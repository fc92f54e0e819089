#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "gbcode/errors.hpp"

namespace gbcode {

// Total orders on power products. Variable precedence is fixed as
// X1 > X2 > ... > Xn in both.
enum class MonomialOrder { lex, grlex };

// A power product X1^e1 * ... * Xn^en, stored as its exponent vector.
// Index 0 corresponds to X1.
class Monomial {
 public:
  // The unit monomial 1 in var_count variables.
  explicit Monomial(std::size_t var_count) : exps_(var_count, 0) {}

  explicit Monomial(std::vector<int> exponents);

  std::size_t var_count() const { return exps_.size(); }
  int exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  // Total degree |e|.
  int degree() const;

  bool is_unit() const;
  bool is_squarefree() const;

  // True when every exponent of this monomial is <= the matching exponent
  // of other.
  bool divides(const Monomial& other) const;

  // Product: componentwise exponent sum.
  Monomial operator*(const Monomial& rhs) const;

  // Exact quotient this / divisor. Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  // "1", "X3", or "X1*X5^2" style; factors in ascending variable index.
  std::string to_string() const;

  // Plain componentwise comparison, used only as a container key order.
  // Monomial-order comparisons go through compare() below.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

// Compares a and b under the given monomial order.
std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             MonomialOrder order);

// Componentwise maximum of exponents.
Monomial lcm(const Monomial& a, const Monomial& b);

// True when the supports of a and b are disjoint.
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace gbcode
