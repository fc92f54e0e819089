#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gbcode/decoder.hpp"
#include "gbcode/oracle.hpp"
#include "test_util.hpp"

using namespace gbcode;
using namespace testutil;

TEST_CASE("nearest codeword by exhaustive scan") {
  SUBCASE("worked [7,4] example") {
    const NearestResult res = nearest_codeword(word("1001100"), hamming74());
    CHECK(res.codeword == word("1011100"));
    CHECK(res.distance == 1);
    CHECK(res.unique);
  }

  SUBCASE("codewords are their own nearest") {
    const LinearCode code = hamming74();
    for (const Word& c : codewords(code)) {
      const NearestResult res = nearest_codeword(c, code);
      CHECK(res.codeword == c);
      CHECK(res.distance == 0);
      CHECK(res.unique);
    }
  }

  SUBCASE("two-codeword scan") {
    const LinearCode code = LinearCode::standardize({word("111")});
    const NearestResult res = nearest_codeword(word("110"), code);
    CHECK(res.codeword == word("111"));
    CHECK(res.distance == 1);
    CHECK(res.unique);
  }

  SUBCASE("ties keep the lexicographically first message and are flagged") {
    const LinearCode code = LinearCode::standardize({word("110")});
    const NearestResult res = nearest_codeword(word("100"), code);
    CHECK(res.codeword == word("000"));
    CHECK(res.distance == 1);
    CHECK_FALSE(res.unique);
  }

  SUBCASE("enumeration cap") {
    std::vector<Word> rows;
    for (std::size_t i = 0; i < 25; ++i)
      rows.push_back(Word(25).with_flipped(i));
    const LinearCode code = LinearCode::standardize(rows);
    CHECK_THROWS_AS(nearest_codeword(Word(25), code), ResourceError);
  }

  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(nearest_codeword(word("110"), hamming74()),
                    DimensionError);
  }
}

TEST_CASE("groebner criterion verification") {
  SUBCASE("the worked [7,4] basis passes") {
    CHECK(verify_groebner(closed_form_basis(hamming74())));
  }

  SUBCASE("a two-element basis with coprime-free overlap passes") {
    // Direct S-polynomial reduction confirms {X1 + X2*X3, X2 + X3}.
    const GroebnerBasis basis{
        {Polynomial::binomial(mono_at(3, {1}), mono_at(3, {2, 3})),
         Polynomial::binomial(mono_at(3, {2}), mono_at(3, {3}))},
        MonomialOrder::lex,
        false};
    CHECK(verify_groebner(basis));
  }

  SUBCASE("a single element always passes") {
    const GroebnerBasis basis{
        {Polynomial::binomial(mono_at(2, {1, 2}), Monomial(2))},
        MonomialOrder::lex,
        false};
    CHECK(verify_groebner(basis));
  }

  SUBCASE("a non-basis fails") {
    const GroebnerBasis bogus{
        {Polynomial::binomial(mono_at(3, {1, 2}), Monomial(3)),
         Polynomial::binomial(mono_at(3, {2, 3}), Monomial(3))},
        MonomialOrder::lex,
        false};
    CHECK_FALSE(verify_groebner(bogus));
  }

  SUBCASE("every produced basis passes") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 6; ++round) {
      const std::size_t k = 1 + rng() % 4;
      const std::size_t n = k + rng() % 4;
      const LinearCode code = random_code(rng, n, k);
      CHECK(verify_groebner(closed_form_basis(code)));
      for (MonomialOrder ord : {MonomialOrder::lex, MonomialOrder::grlex}) {
        const GroebnerBasis completed = buchberger(ideal_generators(code), ord);
        CHECK(verify_groebner(completed));
        CHECK(verify_groebner(reduce_basis(completed)));
      }
    }
  }
}

TEST_CASE("decode agrees with the oracle whenever the nearest is unique") {
  std::mt19937_64 rng(37);
  for (const LinearCode& code : {hamming74(), code_10_2()}) {
    const int t = code.min_distance().t;
    const auto words = all_words(code.length());
    for (int round = 0; round < 300; ++round) {
      const Word& u = words[rng() % words.size()];
      const NearestResult oracle = nearest_codeword(u, code);
      if (oracle.distance > t || !oracle.unique) continue;
      CHECK(decode(u, code).codeword == oracle.codeword);
    }
  }
}
