#include "gbcode/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace gbcode {

Polynomial Polynomial::monomial(Monomial m) {
  Polynomial p(m.var_count());
  p.terms_.insert(std::move(m));
  return p;
}

Polynomial Polynomial::binomial(Monomial a, Monomial b) {
  if (a.var_count() != b.var_count()) {
    throw DimensionError("binomial terms live in different variable counts");
  }
  Polynomial p(a.var_count());
  if (a == b) return p;  // X^a - X^a = 0
  p.terms_.insert(std::move(a));
  p.terms_.insert(std::move(b));
  return p;
}

Polynomial Polynomial::one(std::size_t var_count) {
  return monomial(Monomial(var_count));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (vars_ != rhs.vars_) {
    throw DimensionError("polynomial sum across different variable counts");
  }
  Polynomial out(vars_);
  // Symmetric difference: a term survives iff it appears in exactly one side.
  std::set_symmetric_difference(
      terms_.begin(), terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
      std::inserter(out.terms_, out.terms_.end()));
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  if (vars_ != m.var_count()) {
    throw DimensionError("monomial factor has the wrong variable count");
  }
  Polynomial out(vars_);
  for (const Monomial& t : terms_) out.terms_.insert(t * m);
  return out;
}

const Monomial& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) {
    throw DomainError("leading term of the zero polynomial is undefined");
  }
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (compare(*it, *best, order) > 0) best = it;
  }
  return *best;
}

std::string Polynomial::to_string(MonomialOrder order) const {
  if (terms_.empty()) return "0";
  std::vector<const Monomial*> sorted;
  sorted.reserve(terms_.size());
  for (const Monomial& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [order](const Monomial* a, const Monomial* b) {
              return compare(*a, *b, order) > 0;
            });
  std::string out;
  for (const Monomial* t : sorted) {
    if (!out.empty()) out += " + ";
    out += t->to_string();
  }
  return out;
}

}  // namespace gbcode
