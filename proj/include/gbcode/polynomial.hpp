#pragma once

#include <set>
#include <string>

#include "gbcode/monomial.hpp"

namespace gbcode {

// Multivariate polynomial over GF(2): the set of monomials that carry
// coefficient 1. Addition is symmetric difference of the term sets, and
// subtraction coincides with addition (characteristic 2). The zero
// polynomial is the empty set.
class Polynomial {
 public:
  // The zero polynomial in var_count variables.
  explicit Polynomial(std::size_t var_count) : vars_(var_count) {}

  static Polynomial monomial(Monomial m);

  // a + b; equal arguments cancel to zero.
  static Polynomial binomial(Monomial a, Monomial b);

  static Polynomial one(std::size_t var_count);

  std::size_t var_count() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::set<Monomial>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& rhs) const;

  // Multiplication by a single monomial: every exponent vector is shifted
  // by m.
  Polynomial times(const Monomial& m) const;

  // Maximal term under the order. Undefined on zero; throws DomainError.
  // The returned monomial is the multidegree of the polynomial.
  const Monomial& leading_term(MonomialOrder order) const;

  // Canonical rendering: terms descending under the order, joined " + ";
  // zero renders "0".
  std::string to_string(MonomialOrder order = MonomialOrder::lex) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t vars_;
  std::set<Monomial> terms_;
};

}  // namespace gbcode
