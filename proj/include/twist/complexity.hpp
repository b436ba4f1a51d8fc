#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twist/morphism.hpp"
#include "twist/word.hpp"

namespace twist {

// Exact fraction; linear fits over integer counts produce half-integer
// medians, so doubles would blur exactness.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  Rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-*)

  Rational operator+(const Rational&) const;
  Rational operator-(const Rational&) const;
  Rational operator*(const Rational&) const;
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational&) const;

  bool is_integer() const { return den == 1; }
  double to_double() const;
  std::string to_string() const;
};

Rational abs(const Rational& r);

struct ComplexityProfile {
  std::size_t word_length = 0;
  // counts[i] = distinct factors of length i+1, for lengths 1..k_max.
  std::vector<std::uint64_t> counts;
  // Largest contiguous k such that counts[1..k] equal those of any longer
  // prefix; beyond it the window truncates factor discovery.
  std::size_t stable_upto = 0;

  std::uint64_t count(std::size_t k) const { return counts.at(k - 1); }
  std::size_t k_max() const { return counts.size(); }
};

// Distinct factors of length k by direct enumeration. Reference oracle for
// the automaton-based profile.
std::uint64_t factor_count_naive(const Word& w, std::size_t k);

// Counts for lengths 1..k_max via one suffix automaton sweep. stable_upto is
// the largest k with count(k-th) reliable for the infinite word, determined
// by comparing against the half-length prefix profile.
ComplexityProfile complexity_profile(const Word& w, std::size_t k_max);

struct LinearFit {
  Rational slope;
  Rational intercept;
  Rational max_residual;
  std::size_t window_lo = 0;
  std::size_t window_hi = 0;
  bool exact = false;  // every point in the window on the fitted line
};

// Median-slope line through (k, counts[k]) for k in [window_lo, window_hi].
// Slope = median of consecutive differences, intercept = median of
// counts[k] - slope*k, both exact rationals. The window must stay within
// stable_upto; counts beyond that are truncation artifacts.
LinearFit fit_linear(const ComplexityProfile& profile, std::size_t window_lo,
                     std::size_t window_hi);

// log(count(stable_upto)) / stable_upto; tends to 0 for linear-growth words.
// Requires stable_upto >= 2.
double entropy_estimate(const ComplexityProfile& profile);

}  // namespace twist
