#include "gbcode/linear_code.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <utility>

namespace gbcode {

namespace {

using BitMatrix = std::vector<std::vector<std::uint8_t>>;

BitMatrix to_matrix(const std::vector<Word>& rows) {
  BitMatrix m;
  m.reserve(rows.size());
  for (const Word& r : rows) m.push_back(r.bits());
  return m;
}

// Rank over F2, free pivot choice across all columns.
std::size_t rank(BitMatrix m) {
  const std::size_t k = m.size();
  const std::size_t n = k == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < k; ++col) {
    std::size_t pivot = r;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t q = 0; q < k; ++q) {
      if (q == r || m[q][col] == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[q][c] ^= m[r][c];
    }
    ++r;
  }
  return r;
}

}  // namespace

LinearCode::LinearCode(std::size_t n, std::vector<Word> rows)
    : n_(n), rows_(std::move(rows)), cache_(std::make_shared<DistanceCache>()) {}

LinearCode LinearCode::standardize(const std::vector<Word>& raw) {
  if (raw.empty()) {
    throw DimensionError("cannot infer the code length from an empty matrix");
  }
  return standardize(raw, raw.front().size());
}

LinearCode LinearCode::standardize(const std::vector<Word>& raw,
                                   std::size_t length) {
  const std::size_t k = raw.size();
  for (const Word& r : raw) {
    if (r.size() != length) {
      throw DimensionError("generator matrix rows disagree on length");
    }
  }
  if (k > length) {
    throw ContractError("generator matrix has more rows than columns");
  }

  BitMatrix m = to_matrix(raw);

  // Pivot the leftmost k columns to the identity using row operations only.
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) {
      if (rank(to_matrix(raw)) < k) {
        throw ContractError("generator matrix rows are linearly dependent");
      }
      throw ContractError(
          "the leftmost k x k block is singular; the matrix cannot be "
          "brought to standard form by row operations (column permutation "
          "is out of scope)");
    }
    std::swap(m[col], m[pivot]);
    for (std::size_t q = 0; q < k; ++q) {
      if (q == col || m[q][col] == 0) continue;
      for (std::size_t c = 0; c < length; ++c) m[q][c] ^= m[col][c];
    }
  }

  std::vector<Word> rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) rows.emplace_back(std::move(m[i]));
  return LinearCode(length, std::move(rows));
}

Word LinearCode::parity_tail(std::size_t i) const {
  return rows_[i].tail(dimension());
}

Word LinearCode::encode(const Word& message) const {
  if (message.size() != dimension()) {
    throw DimensionError("message length " + std::to_string(message.size()) +
                         " does not match the code dimension " +
                         std::to_string(dimension()));
  }
  Word out(n_);
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (message.bit(i)) out = out ^ rows_[i];
  }
  return out;
}

LinearCode::Distance LinearCode::min_distance(std::size_t cap) const {
  const std::size_t k = dimension();
  if (k == 0) {
    throw DomainError("the zero code has no nonzero codeword");
  }
  if (k > cap) {
    throw ResourceError(
        "minimum-distance enumeration would scan 2^" + std::to_string(k) +
        " codewords (cap " + std::to_string(cap) +
        "); pass an explicit radius with --t instead");
  }
  std::call_once(cache_->once, [&] {
    int best = static_cast<int>(n_) + 1;
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << k); ++x) {
      Word c(n_);
      for (std::size_t i = 0; i < k; ++i) {
        if ((x >> (k - 1 - i)) & 1) c = c ^ rows_[i];
      }
      best = std::min(best, c.weight());
    }
    cache_->value = Distance{best, (best - 1) / 2};
  });
  return cache_->value;
}

std::vector<Word> parse_matrix(std::istream& in) {
  std::vector<Word> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string cleaned;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (c != '0' && c != '1') {
        throw ParseError(std::string("invalid character '") + c +
                         "' in matrix row " + std::to_string(rows.size() + 1));
      }
      cleaned += c;
    }
    if (cleaned.empty()) continue;
    rows.push_back(Word::parse(cleaned));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("matrix rows disagree on length");
    }
  }
  if (rows.empty()) throw ParseError("matrix file contains no rows");
  return rows;
}

std::vector<Polynomial> ideal_generators(const LinearCode& code) {
  const std::size_t n = code.length();
  std::vector<Polynomial> gens;
  gens.reserve(code.dimension() + n);
  for (const Word& row : code.generator_rows()) {
    gens.push_back(Polynomial::binomial(to_monomial(row), Monomial(n)));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> exps(n, 0);
    exps[j] = 2;
    gens.push_back(Polynomial::binomial(Monomial(std::move(exps)), Monomial(n)));
  }
  return gens;
}

GroebnerBasis closed_form_basis(const LinearCode& code) {
  const std::size_t n = code.length();
  const std::size_t k = code.dimension();
  std::vector<Polynomial> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> head(n, 0);
    head[i] = 1;
    std::vector<int> tail(n, 0);
    for (std::size_t j = k; j < n; ++j) {
      if (code.generator_row(i).bit(j)) tail[j] = 1;
    }
    // Xi + X^{m_i}; an empty tail support gives Xi + 1.
    elements.push_back(Polynomial::binomial(Monomial(std::move(head)),
                                            Monomial(std::move(tail))));
  }
  for (std::size_t j = k; j < n; ++j) {
    std::vector<int> sq(n, 0);
    sq[j] = 2;
    elements.push_back(
        Polynomial::binomial(Monomial(std::move(sq)), Monomial(n)));
  }
  return GroebnerBasis{std::move(elements), MonomialOrder::lex, true};
}

}  // namespace gbcode
