#include "gbcode/word.hpp"

#include <algorithm>

namespace gbcode {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw DomainError("word entries must be 0 or 1");
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty bit string");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError(std::string("invalid character '") + c +
                       "' in bit string");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

int Word::weight() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::size_t> Word::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

Word Word::operator^(const Word& rhs) const {
  if (bits_.size() != rhs.bits_.size()) {
    throw DimensionError("xor of words with different lengths");
  }
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    out[i] = bits_[i] ^ rhs.bits_[i];
  return Word(std::move(out));
}

Word Word::with_flipped(std::size_t i) const {
  Word out = *this;
  out.bits_[i] ^= 1;
  return out;
}

Word Word::head(std::size_t count) const {
  return Word(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + count));
}

Word Word::tail(std::size_t from) const {
  return Word(std::vector<std::uint8_t>(bits_.begin() + from, bits_.end()));
}

Word Word::concat(const Word& head, const Word& tail) {
  std::vector<std::uint8_t> out = head.bits_;
  out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out += static_cast<char>('0' + b);
  return out;
}

Monomial to_monomial(const Word& w) {
  std::vector<int> exps(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) exps[i] = w.bit(i) ? 1 : 0;
  return Monomial(std::move(exps));
}

Word from_monomial(const Monomial& m) {
  if (!m.is_squarefree()) {
    throw DomainError("monomial " + m.to_string() +
                      " is not squarefree, no word corresponds to it");
  }
  std::vector<std::uint8_t> bits(m.var_count());
  for (std::size_t i = 0; i < bits.size(); ++i)
    bits[i] = static_cast<std::uint8_t>(m.exponent(i));
  return Word(std::move(bits));
}

}  // namespace gbcode
