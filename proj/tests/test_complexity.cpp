#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "twist/complexity.hpp"
#include "twist/morphism.hpp"
#include "twist/suffix_automaton.hpp"

using namespace twist;

namespace {

CyclicShiftMorphism canonical(int n, Symbol seed = 0) {
  return CyclicShiftMorphism(Permutation::cyclic(Alphabet(n)), seed);
}

}  // namespace

TEST_CASE("rational arithmetic stays normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(abs(Rational(-3, 2)) == Rational(3, 2));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(3, 2).is_integer());
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-4, 8).to_string() == "-1/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(3, 2).to_double() == doctest::Approx(1.5));
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("naive factor counting matches a plain set") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Word w = oracles::random_word(rng, Alphabet(n), 1 + rng() % 50);
    for (std::size_t k = 1; k <= 6; ++k)
      REQUIRE(factor_count_naive(w, k) == oracles::set_factor_count(w, k));
  }
  Word w = Word::parse("abab", Alphabet(2));
  CHECK(factor_count_naive(w, 1) == 2);
  CHECK(factor_count_naive(w, 2) == 2);
  CHECK(factor_count_naive(w, 4) == 1);
  CHECK(factor_count_naive(w, 5) == 0);
}

TEST_CASE("automaton counts equal naive counts") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Word w = oracles::random_word(rng, Alphabet(n), 1 + rng() % 80);
    ComplexityProfile profile = complexity_profile(w, 10);
    for (std::size_t k = 1; k <= 10; ++k)
      REQUIRE(profile.count(k) == factor_count_naive(w, k));
  }
  for (int n : {2, 3}) {
    Word w = canonical(n).prefix(256);
    ComplexityProfile profile = complexity_profile(w, 12);
    for (std::size_t k = 1; k <= 12; ++k)
      REQUIRE(profile.count(k) == factor_count_naive(w, k));
  }
}

TEST_CASE("profile growth obeys the alphabet bounds") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Word w = oracles::random_word(rng, Alphabet(n), 20 + rng() % 100);
    ComplexityProfile p = complexity_profile(w, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
      std::uint64_t cap = w.size() >= k ? w.size() - k + 1 : 0;
      CHECK(p.count(k) <= cap);
      if (k <= 10) {
        double nk = std::pow(double(n), double(k));
        CHECK(double(p.count(k)) <= nk);
      }
      if (k > 1) CHECK(p.count(k) <= std::uint64_t(n) * p.count(k - 1));
    }
    CHECK(p.count(1) <= std::uint64_t(n));
  }
}

TEST_CASE("fixed-point prefix counts on two and three letters") {
  ComplexityProfile tm = complexity_profile(canonical(2).prefix(4096), 10);
  std::vector<std::uint64_t> tm_expected{2, 4, 6, 10, 12, 16, 20, 22, 24, 28};
  CHECK(tm.counts == tm_expected);

  ComplexityProfile three = complexity_profile(canonical(3).prefix(4096), 10);
  std::vector<std::uint64_t> three_expected{3, 9, 15, 24, 30, 39, 48, 54, 60, 69};
  CHECK(three.counts == three_expected);
}

TEST_CASE("counts within the stable horizon do not change on longer prefixes") {
  for (int n : {2, 3, 4}) {
    CyclicShiftMorphism psi = canonical(n);
    ComplexityProfile p = complexity_profile(psi.prefix(1024), 24);
    REQUIRE(p.stable_upto >= 1);
    ComplexityProfile longer = complexity_profile(psi.prefix(2048), 24);
    for (std::size_t k = 1; k <= p.stable_upto; ++k)
      CHECK(p.count(k) == longer.count(k));
    // within the horizon an infinite recurrent word never loses factors
    for (std::size_t k = 1; k < p.stable_upto; ++k)
      CHECK(p.count(k + 1) >= p.count(k));
    // a prefix can only lose factors, at every length
    for (std::size_t k = 1; k <= 24; ++k)
      CHECK(longer.count(k) >= p.count(k));
    // a length-(i+j) factor is a length-i factor glued to a length-j one
    for (std::size_t i = 1; i < p.stable_upto; ++i)
      for (std::size_t j = 1; i + j <= p.stable_upto; ++j)
        CHECK(p.count(i + j) <= p.count(i) * p.count(j));
  }
  CHECK(complexity_profile(canonical(4).prefix(1024), 24).stable_upto == 9);
}

TEST_CASE("stability never reaches counts the window truncates away") {
  Word w = canonical(3).prefix(64);
  ComplexityProfile p = complexity_profile(w, 64);
  CHECK(p.stable_upto < 32);  // the half prefix cannot see longer factors
}

TEST_CASE("exact linear data fits exactly") {
  ComplexityProfile p;
  p.word_length = 4096;
  for (std::int64_t k = 1; k <= 12; ++k)
    p.counts.push_back(static_cast<std::uint64_t>(2 * k + 3));
  p.stable_upto = 12;
  LinearFit fit = fit_linear(p, 4, 10);
  CHECK(fit.slope == Rational(2));
  CHECK(fit.intercept == Rational(3));
  CHECK(fit.max_residual == Rational(0));
  CHECK(fit.exact);
}

TEST_CASE("a single outlier moves the residual but not the median slope") {
  ComplexityProfile p;
  p.word_length = 4096;
  for (std::int64_t k = 1; k <= 7; ++k)
    p.counts.push_back(static_cast<std::uint64_t>(2 * k + 3));
  p.counts[3] = 12;  // k = 4 bumped from 11
  p.stable_upto = 7;
  LinearFit fit = fit_linear(p, 1, 7);
  CHECK(fit.slope == Rational(2));
  CHECK(fit.intercept == Rational(3));
  CHECK(fit.max_residual == Rational(1));
  CHECK_FALSE(fit.exact);
}

TEST_CASE("the fit refuses untrusted windows") {
  ComplexityProfile p;
  p.word_length = 100;
  p.counts = {2, 4, 6, 8, 10};
  p.stable_upto = 3;
  CHECK_THROWS_AS(fit_linear(p, 1, 4), Error);
  CHECK_THROWS_AS(fit_linear(p, 0, 3), Error);
  CHECK_THROWS_AS(fit_linear(p, 3, 3), Error);
  CHECK(fit_linear(p, 1, 3).slope == Rational(2));
}

TEST_CASE("measured fixed-point increments are reported, not idealized") {
  // the three-letter word's increments oscillate between 6 and 9 at this
  // scale, so the fitted slope lands in that band and the fit is not exact
  ComplexityProfile p = complexity_profile(canonical(3).prefix(4096), 24);
  REQUIRE(p.stable_upto >= 16);
  LinearFit fit = fit_linear(p, 8, 16);
  CHECK(Rational(6) <= fit.slope);
  CHECK(fit.slope <= Rational(9));
  CHECK_FALSE(fit.exact);
}

TEST_CASE("entropy estimate shrinks as the horizon grows") {
  Word w = canonical(3).prefix(16384);
  double prev = 2.0;
  for (std::size_t k_max : {8, 16, 32, 64}) {
    ComplexityProfile p = complexity_profile(w, k_max);
    REQUIRE(p.stable_upto == k_max);
    double h = entropy_estimate(p);
    CHECK(h > 0.0);
    CHECK(h < prev);
    prev = h;
  }

  ComplexityProfile narrow;
  narrow.word_length = 4;
  narrow.counts = {2};
  narrow.stable_upto = 1;
  CHECK_THROWS_AS(entropy_estimate(narrow), Error);

  // a word with one factor per length has zero entropy
  Word unary(Alphabet(1), std::vector<Symbol>(64, 0));
  ComplexityProfile flat = complexity_profile(unary, 8);
  REQUIRE(flat.stable_upto == 8);
  CHECK(entropy_estimate(flat) == 0.0);
}

TEST_CASE("profile input validation") {
  CHECK_THROWS_AS(complexity_profile(Word(Alphabet(2)), 4), Error);
  CHECK_THROWS_AS(complexity_profile(Word::parse("ab", Alphabet(2)), 0), Error);
}

TEST_CASE("automaton size stays linear") {
  Word w = canonical(3).prefix(2048);
  SuffixAutomaton sa(w);
  CHECK(sa.state_count() <= 2 * w.size());
  CHECK(sa.state_count() > w.size());
}
