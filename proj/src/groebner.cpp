#include "gbcode/groebner.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

namespace gbcode {

namespace {

void check_divisors(const Polynomial& f,
                    const std::vector<Polynomial>& divisors) {
  for (const Polynomial& d : divisors) {
    if (d.var_count() != f.var_count()) {
      throw DimensionError("divisor has the wrong variable count");
    }
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
  }
}

}  // namespace

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      MonomialOrder order) {
  check_divisors(f, divisors);

  std::vector<Monomial> divisor_lts;
  divisor_lts.reserve(divisors.size());
  for (const Polynomial& d : divisors)
    divisor_lts.push_back(d.leading_term(order));

  DivisionResult out{
      std::vector<Polynomial>(divisors.size(), Polynomial(f.var_count())),
      Polynomial(f.var_count())};

  Polynomial p = f;
  while (!p.is_zero()) {
    const Monomial lt_p = p.leading_term(order);
    bool rewritten = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!divisor_lts[i].divides(lt_p)) continue;
      const Monomial q = lt_p.quotient(divisor_lts[i]);
      out.quotients[i] = out.quotients[i] + Polynomial::monomial(q);
      // Subtraction is addition: q * lt(divisor) cancels lt_p, everything
      // else added is strictly smaller under the order.
      p = p + divisors[i].times(q);
      rewritten = true;
      break;
    }
    if (!rewritten) {
      const Polynomial t = Polynomial::monomial(lt_p);
      out.remainder = out.remainder + t;
      p = p + t;
    }
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) {
    throw DomainError("S-polynomial of the zero polynomial is undefined");
  }
  if (f.var_count() != g.var_count()) {
    throw DimensionError("S-polynomial across different variable counts");
  }
  const Monomial& lt_f = f.leading_term(order);
  const Monomial& lt_g = g.leading_term(order);
  const Monomial l = lcm(lt_f, lt_g);
  return f.times(l.quotient(lt_f)) + g.times(l.quotient(lt_g));
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& elements,
                                    MonomialOrder order) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const Polynomial s = s_polynomial(elements[i], elements[j], order);
      if (!divide(s, elements, order).remainder.is_zero()) return false;
    }
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         MonomialOrder order, std::size_t max_insertions) {
  if (generators.empty()) {
    throw DomainError("buchberger needs at least one generator");
  }
  for (const Polynomial& g : generators) {
    if (g.is_zero()) throw DomainError("buchberger generator is zero");
    if (g.var_count() != generators.front().var_count()) {
      throw DimensionError("buchberger generators disagree on variable count");
    }
  }

  std::vector<Polynomial> basis = generators;
  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      pending.emplace_back(i, j);

  std::size_t insertions = 0;
  while (!pending.empty()) {
    const auto [i, j] = pending.front();
    pending.pop_front();
    // First Buchberger criterion: coprime leading terms always reduce.
    if (coprime(basis[i].leading_term(order), basis[j].leading_term(order)))
      continue;
    Polynomial rem =
        divide(s_polynomial(basis[i], basis[j], order), basis, order).remainder;
    if (rem.is_zero()) continue;
    if (++insertions > max_insertions) {
      throw ResourceError("buchberger exceeded the insertion cap of " +
                          std::to_string(max_insertions));
    }
    basis.push_back(std::move(rem));
    for (std::size_t m = 0; m + 1 < basis.size(); ++m)
      pending.emplace_back(m, basis.size() - 1);
  }
  return GroebnerBasis{std::move(basis), order, false};
}

GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  if (basis.elements.empty()) {
    throw DomainError("reduce_basis on an empty basis");
  }
  if (!satisfies_buchberger_criterion(basis.elements, basis.order)) {
    throw ContractError(
        "reduce_basis input is not a Groebner basis: an S-polynomial has a "
        "nonzero remainder");
  }

  const MonomialOrder order = basis.order;
  const std::vector<Polynomial>& elems = basis.elements;

  // Minimal basis: drop any element whose leading term is divisible by the
  // leading term of another kept element. Of identical leading terms, the
  // first survives.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Monomial& lt_i = elems[i].leading_term(order);
    bool redundant = false;
    for (std::size_t j = 0; j < elems.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& lt_j = elems[j].leading_term(order);
      if (!lt_j.divides(lt_i)) continue;
      redundant = lt_j != lt_i || j < i;
    }
    if (!redundant) minimal.push_back(elems[i]);
  }

  // Full reduction: replace every element by its remainder against the
  // others. Leading terms are mutually indivisible, so each survives its
  // own reduction and only tails change.
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(reduced.size() - 1);
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = divide(reduced[i], others, order).remainder;
  }

  std::sort(reduced.begin(), reduced.end(),
            [order](const Polynomial& a, const Polynomial& b) {
              return compare(a.leading_term(order), b.leading_term(order),
                             order) > 0;
            });
  return GroebnerBasis{std::move(reduced), order, true};
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return divide(f, basis.elements, basis.order).remainder;
}

}  // namespace gbcode
