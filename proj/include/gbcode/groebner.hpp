#pragma once

#include <cstddef>
#include <vector>

#include "gbcode/polynomial.hpp"

namespace gbcode {

// Safety bound on Buchberger basis insertions. Termination is guaranteed,
// the cap guards implementation bugs.
inline constexpr std::size_t default_iteration_cap = 10000;

struct DivisionResult {
  std::vector<Polynomial> quotients;  // one per divisor, possibly zero
  Polynomial remainder;
};

// Multivariate division: f = sum quotients[i] * divisors[i] + remainder,
// with no remainder term divisible by any divisor's leading term. At each
// step the first divisor in list order whose leading term divides the
// current leading term is used, so quotients are deterministic.
// An empty divisor list returns remainder f. Zero divisors are rejected.
DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors,
                      MonomialOrder order);

// S(f, g) = (L/lt(f))*f + (L/lt(g))*g with L = lcm(lt(f), lt(g)).
// The L-degree terms cancel. Zero inputs are rejected.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder order);

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order = MonomialOrder::lex;
  bool reduced = false;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

// True iff every pairwise S-polynomial of elements reduces to zero against
// the full list. Checked directly, pair by pair, with no shortcuts.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& elements,
                                    MonomialOrder order);

// Completion: starting from the generators, appends every nonzero
// S-polynomial remainder until all pairs reduce to zero. Pairs with coprime
// leading terms are skipped. Throws ResourceError past max_insertions.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         MonomialOrder order,
                         std::size_t max_insertions = default_iteration_cap);

// Canonical reduced basis: minimal leading terms, every element fully
// reduced against the others, elements sorted by descending leading term.
// The input must satisfy the Buchberger criterion (ContractError otherwise).
// Output is independent of how the same ideal was presented.
GroebnerBasis reduce_basis(const GroebnerBasis& basis);

// Remainder of f on division by the basis. For a Groebner basis this is
// the unique normal form: independent of element listing order, and zero
// exactly when f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace gbcode
