#include "gbcode/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace gbcode {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionError("monomials live in different variable counts (" +
                         std::to_string(a.var_count()) + " vs " +
                         std::to_string(b.var_count()) + ")");
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_length(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  require_same_length(*this, rhs);
  std::vector<int> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] + rhs.exps_[i];
  return Monomial(std::move(out));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  require_same_length(*this, divisor);
  if (!divisor.divides(*this)) {
    throw DomainError("monomial quotient is not exact: " +
                      divisor.to_string() + " does not divide " + to_string());
  }
  std::vector<int> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out[i] = exps_[i] - divisor.exps_[i];
  return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'X';
    out += std::to_string(i + 1);
    if (exps_[i] >= 2) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b,
                             MonomialOrder order) {
  require_same_length(a, b);
  if (order == MonomialOrder::grlex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  // lex: the leftmost differing exponent decides (X1 strongest).
  for (std::size_t i = 0; i < a.var_count(); ++i) {
    if (auto c = a.exponent(i) <=> b.exponent(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionError("lcm of monomials with different variable counts");
  }
  std::vector<int> out(a.var_count());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionError("coprimality of monomials with different variable counts");
  }
  for (std::size_t i = 0; i < a.var_count(); ++i) {
    if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
  }
  return true;
}

}  // namespace gbcode
