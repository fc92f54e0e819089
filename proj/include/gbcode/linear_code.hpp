#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <vector>

#include "gbcode/groebner.hpp"
#include "gbcode/word.hpp"

namespace gbcode {

// Enumeration bound for the 2^k scans (minimum distance, nearest codeword).
inline constexpr std::size_t default_enumeration_cap = 24;

// A binary [n, k] linear block code held by a generator matrix in standard
// form (I_k | M). Immutable after construction; the lazily computed
// distance data is populated once and shared between copies.
class LinearCode {
 public:
  struct Distance {
    int d = 0;  // minimum weight of a nonzero codeword
    int t = 0;  // error-correcting radius, maximal with 2t + 1 <= d
  };

  // Row-reduces raw over F2 into standard form. Throws DimensionError on
  // ragged or empty input, ContractError when the rows are dependent
  // (rank < k) or when the leftmost k x k block cannot be pivoted to the
  // identity by row operations alone.
  static LinearCode standardize(const std::vector<Word>& raw);

  // Same, with an explicit length so that k = 0 codes are representable.
  static LinearCode standardize(const std::vector<Word>& raw,
                                std::size_t length);

  std::size_t length() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }

  // Row i of the standard-form generator matrix (length n).
  const Word& generator_row(std::size_t i) const { return rows_[i]; }
  const std::vector<Word>& generator_rows() const { return rows_; }

  // The parity part of row i: its last n - k coordinates.
  Word parity_tail(std::size_t i) const;

  // x * G over F2. The message must have length k.
  Word encode(const Word& message) const;

  // Exhaustive minimum distance over all 2^k - 1 nonzero messages, with
  // t = floor((d - 1) / 2). Computed once, then cached. Throws
  // ResourceError when k exceeds the cap (pass an explicit t downstream
  // instead), DomainError when k = 0.
  Distance min_distance(std::size_t cap = default_enumeration_cap) const;

 private:
  LinearCode(std::size_t n, std::vector<Word> rows);

  struct DistanceCache {
    std::once_flag once;
    Distance value;
  };

  std::size_t n_;
  std::vector<Word> rows_;
  std::shared_ptr<DistanceCache> cache_;
};

// Reads the textual matrix format: one row per non-empty line, characters
// '0'/'1', ASCII spaces ignored, all rows the same length.
std::vector<Word> parse_matrix(std::istream& in);

// The finite generating set of the code's binomial ideal: one binomial
// X^r - 1 per generator row r, plus the field equations Xj^2 - 1 for every
// variable.
std::vector<Polynomial> ideal_generators(const LinearCode& code);

// The reduced Groebner basis of the code ideal under lex, built directly
// from the generator matrix: Xi + X^{m_i} for each of the k message
// variables (m_i supported on the tail positions j > k where row i has a
// one), then Xj^2 + 1 for the n - k tail variables.
GroebnerBasis closed_form_basis(const LinearCode& code);

}  // namespace gbcode
