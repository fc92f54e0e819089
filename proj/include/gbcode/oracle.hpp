#pragma once

#include "gbcode/linear_code.hpp"

namespace gbcode {

// Brute-force references. Deliberately O(2^k); used by tests and the
// verify command to cross-check the algebraic paths.

struct NearestResult {
  Word codeword;
  int distance = 0;
  bool unique = true;  // no other codeword at the same distance
};

// Exhaustive scan over all 2^k codewords. Ties are broken by the smallest
// message in bit-string lexicographic order and reported via unique=false.
NearestResult nearest_codeword(const Word& received, const LinearCode& code,
                               std::size_t cap = default_enumeration_cap);

// Direct statement of the Groebner criterion: every pairwise S-polynomial
// of the basis reduces to zero.
bool verify_groebner(const GroebnerBasis& basis);

}  // namespace gbcode
