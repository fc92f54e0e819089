#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gbcode/monomial.hpp"

namespace gbcode {

// A fixed-length bit vector over F2. Coordinate 1 is index 0 and maps to
// variable X1.
class Word {
 public:
  // The empty word; useful as a placeholder in result structs.
  Word() = default;

  // The zero word of the given length.
  explicit Word(std::size_t length) : bits_(length, 0) {}

  // Entries must be 0 or 1.
  explicit Word(std::vector<std::uint8_t> bits);

  // Parses a contiguous bit string such as "1001100".
  static Word parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i] != 0; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  int weight() const;
  std::vector<std::size_t> support() const;  // 0-based indices of set bits
  bool is_zero() const { return weight() == 0; }

  Word operator^(const Word& rhs) const;
  Word with_flipped(std::size_t i) const;

  // First count coordinates.
  Word head(std::size_t count) const;
  // Coordinates from index from to the end.
  Word tail(std::size_t from) const;
  static Word concat(const Word& head, const Word& tail);

  std::string to_string() const;

  // Bit-string lexicographic order (coordinate 1 most significant).
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// X^w: the squarefree monomial whose support is the support of w. The zero
// word maps to the unit monomial 1.
Monomial to_monomial(const Word& w);

// Inverse of to_monomial. Requires a squarefree monomial (DomainError
// otherwise).
Word from_monomial(const Monomial& m);

}  // namespace gbcode
