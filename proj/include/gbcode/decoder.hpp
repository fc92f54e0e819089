#pragma once

#include <optional>

#include "gbcode/linear_code.hpp"

namespace gbcode {

enum class DecodePath {
  simple,        // zero correction word accepted the remainder directly
  search,        // a nonzero head correction was found
  single_error,  // matched a generator-row remainder (radius-1 shortcut)
};

const char* to_string(DecodePath path);

struct DecodeResult {
  Word codeword;                // decoded codeword, in the code
  Word error;                   // codeword ^ error == received word
  Word message;                 // first k bits of the codeword
  DecodePath path = DecodePath::simple;
  std::optional<Word> search_v;  // the accepted head word when path == search
};

// Enumerates the head-supported correction words
// (a_1, ..., a_k, 0, ..., 0) with sum a_i <= max_weight, by increasing
// weight and then lexicographically by position; the zero word comes first.
class ErrorSearchSpace {
 public:
  ErrorSearchSpace(std::size_t length, std::size_t head_len, int max_weight);

  // The next word, or nullopt when exhausted.
  std::optional<Word> next();

 private:
  std::size_t n_;
  std::size_t k_;
  int max_weight_;
  int weight_ = 0;
  bool weight_fresh_ = true;
  std::vector<std::size_t> positions_;  // current combination, ascending
};

// The word of the normal form of X^u - 1 against the code's closed-form
// basis, computed directly: zeros on the first k coordinates, then
// u_tail ^ u_head * M. Zero exactly when u is a codeword.
Word remainder_word(const Word& received, const LinearCode& code);

// Weight of a reduced word binomial X^a - X^b with a, b squarefree: the
// Hamming distance between a and b. Zero polynomial gives 0; any other
// shape is a DomainError.
int binomial_weight(const Polynomial& r);

// Full decoding: scans correction words v over the search space and accepts
// the first v with weight(remainder_word(u ^ v)) <= t - weight(v); the
// codeword is then u ^ v ^ remainder. Throws DecodeFailure when no v
// qualifies (more than t errors). t comes from the code unless overridden.
DecodeResult decode(const Word& received, const LinearCode& code,
                    std::optional<int> t_override = std::nullopt);

// Radius-1 shortcut for t = 1 codes: accept the remainder when its weight
// is <= 1, otherwise find the generator row i whose remainder matches and
// flip coordinate i. Throws ContractError when the code's t is not 1,
// DecodeFailure when no row matches.
DecodeResult decode_single_error(const Word& received, const LinearCode& code);

}  // namespace gbcode
