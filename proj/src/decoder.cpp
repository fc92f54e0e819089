#include "gbcode/decoder.hpp"

#include <string>

namespace gbcode {

const char* to_string(DecodePath path) {
  switch (path) {
    case DecodePath::simple: return "simple";
    case DecodePath::search: return "search";
    case DecodePath::single_error: return "single_error";
  }
  return "?";
}

ErrorSearchSpace::ErrorSearchSpace(std::size_t length, std::size_t head_len,
                                   int max_weight)
    : n_(length), k_(head_len), max_weight_(max_weight) {
  if (head_len > length) {
    throw DimensionError("search head is longer than the word");
  }
  if (max_weight_ > static_cast<int>(k_)) max_weight_ = static_cast<int>(k_);
}

std::optional<Word> ErrorSearchSpace::next() {
  while (weight_ <= max_weight_) {
    if (weight_fresh_) {
      // First combination of this weight: positions 0..weight-1.
      positions_.resize(weight_);
      for (int i = 0; i < weight_; ++i) positions_[i] = i;
      weight_fresh_ = false;
    } else {
      // Advance to the next combination in lexicographic position order.
      int i = weight_ - 1;
      while (i >= 0 && positions_[i] == k_ - (weight_ - i)) --i;
      if (i < 0) {
        ++weight_;
        weight_fresh_ = true;
        continue;
      }
      ++positions_[i];
      for (int j = i + 1; j < weight_; ++j)
        positions_[j] = positions_[j - 1] + 1;
    }
    Word v(n_);
    for (std::size_t p : positions_) v = v.with_flipped(p);
    return v;
  }
  return std::nullopt;
}

Word remainder_word(const Word& received, const LinearCode& code) {
  if (received.size() != code.length()) {
    throw DimensionError("received word length " +
                         std::to_string(received.size()) +
                         " does not match the code length " +
                         std::to_string(code.length()));
  }
  const std::size_t k = code.dimension();
  Word tail = received.tail(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (received.bit(i)) tail = tail ^ code.parity_tail(i);
  }
  return Word::concat(Word(k), tail);
}

int binomial_weight(const Polynomial& r) {
  if (r.is_zero()) return 0;
  if (r.term_count() != 2) {
    throw DomainError(
        "polynomial is not a word binomial: expected exactly two terms");
  }
  auto it = r.terms().begin();
  const Word a = from_monomial(*it);        // throws unless squarefree
  const Word b = from_monomial(*std::next(it));
  return (a ^ b).weight();
}

DecodeResult decode(const Word& received, const LinearCode& code,
                    std::optional<int> t_override) {
  const int t = t_override ? *t_override : code.min_distance().t;
  const std::size_t k = code.dimension();

  ErrorSearchSpace space(code.length(), k, t);
  while (auto v = space.next()) {
    const Word r = remainder_word(received ^ *v, code);
    if (r.weight() > t - v->weight()) continue;
    const Word codeword = received ^ *v ^ r;
    DecodeResult out;
    out.codeword = codeword;
    out.error = *v ^ r;
    out.message = codeword.head(k);
    if (v->is_zero()) {
      out.path = DecodePath::simple;
    } else {
      out.path = DecodePath::search;
      out.search_v = *v;
    }
    return out;
  }
  throw DecodeFailure("no correction of weight <= " + std::to_string(t) +
                      " exists; the received word carries more than " +
                      std::to_string(t) + " errors");
}

DecodeResult decode_single_error(const Word& received, const LinearCode& code) {
  if (code.min_distance().t != 1) {
    throw ContractError("single-error decoding requires a code with t = 1");
  }
  const std::size_t k = code.dimension();
  const Word r = remainder_word(received, code);
  if (r.weight() <= 1) {
    DecodeResult out;
    out.codeword = received ^ r;
    out.error = r;
    out.message = out.codeword.head(k);
    out.path = DecodePath::simple;
    return out;
  }
  // The remainder of a single head-coordinate error equals the remainder of
  // the matching generator row's unit message.
  for (std::size_t i = 0; i < k; ++i) {
    if (r.tail(k) != code.parity_tail(i)) continue;
    const Word flip = Word(code.length()).with_flipped(i);
    DecodeResult out;
    out.codeword = received ^ flip;
    out.error = flip;
    out.message = out.codeword.head(k);
    out.path = DecodePath::single_error;
    return out;
  }
  throw DecodeFailure("remainder matches no single-error pattern; the "
                      "received word carries more than one error");
}

}  // namespace gbcode
