#include "gbcode/oracle.hpp"

#include <cstdint>
#include <string>

namespace gbcode {

NearestResult nearest_codeword(const Word& received, const LinearCode& code,
                               std::size_t cap) {
  if (received.size() != code.length()) {
    throw DimensionError("received word length does not match the code");
  }
  const std::size_t k = code.dimension();
  if (k > cap) {
    throw ResourceError("nearest-codeword scan would enumerate 2^" +
                        std::to_string(k) + " codewords (cap " +
                        std::to_string(cap) + ")");
  }

  NearestResult best;
  best.distance = static_cast<int>(code.length()) + 1;
  // Messages ascend in bit-string lexicographic order, so the first minimum
  // found is the canonical tie-break winner.
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    Word message(k);
    for (std::size_t i = 0; i < k; ++i) {
      if ((x >> (k - 1 - i)) & 1) message = message.with_flipped(i);
    }
    const Word c = code.encode(message);
    const int dist = (c ^ received).weight();
    if (dist < best.distance) {
      best.codeword = c;
      best.distance = dist;
      best.unique = true;
    } else if (dist == best.distance) {
      best.unique = false;
    }
  }
  return best;
}

bool verify_groebner(const GroebnerBasis& basis) {
  if (basis.elements.empty()) {
    throw DomainError("verify_groebner on an empty basis");
  }
  return satisfies_buchberger_criterion(basis.elements, basis.order);
}

}  // namespace gbcode
