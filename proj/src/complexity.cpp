#include "twist/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "twist/suffix_automaton.hpp"

namespace twist {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  return num * o.den <=> o.num * den;
}

double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rational::to_string() const {
  std::ostringstream out;
  out << num;
  if (den != 1) out << '/' << den;
  return out.str();
}

Rational abs(const Rational& r) {
  return r.num < 0 ? Rational(-r.num, r.den) : r;
}

std::uint64_t factor_count_naive(const Word& w, std::size_t k) {
  if (k == 0 || k > w.size()) return k == 0 ? 1 : 0;
  std::set<std::vector<Symbol>> factors;
  for (std::size_t p = 0; p + k <= w.size(); ++p)
    factors.insert(std::vector<Symbol>(w.symbols().begin() + static_cast<std::ptrdiff_t>(p),
                                       w.symbols().begin() + static_cast<std::ptrdiff_t>(p + k)));
  return factors.size();
}

namespace {

// counts for lengths 1..k_max of one word, automaton sweep
std::vector<std::uint64_t> automaton_counts(const Word& w, std::size_t k_max) {
  SuffixAutomaton sa(w);
  auto raw = sa.distinct_factor_counts(k_max);
  return std::vector<std::uint64_t>(raw.begin() + 1, raw.end());
}

}  // namespace

ComplexityProfile complexity_profile(const Word& w, std::size_t k_max) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  if (w.empty()) throw Error("cannot profile the empty word");
  ComplexityProfile profile;
  profile.word_length = w.size();
  profile.counts = automaton_counts(w, k_max);

  std::size_t half = w.size() / 2;
  profile.stable_upto = 0;
  if (half >= 1) {
    auto half_counts = automaton_counts(w.factor(0, half), k_max);
    std::size_t k = 0;
    while (k < k_max && profile.counts[k] == half_counts[k] &&
           profile.counts[k] > 0)
      ++k;
    profile.stable_upto = k;
  }
  return profile;
}

namespace {

Rational median(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) * Rational(1, 2);
}

}  // namespace

LinearFit fit_linear(const ComplexityProfile& profile, std::size_t window_lo,
                     std::size_t window_hi) {
  if (window_lo < 1) throw Error("fit window must start at k >= 1");
  if (window_hi <= window_lo)
    throw Error("fit window needs at least two points");
  if (window_hi > profile.stable_upto)
    throw Error("fit window exceeds the stable horizon of the profile");

  std::vector<Rational> slopes;
  for (std::size_t k = window_lo; k < window_hi; ++k)
    slopes.emplace_back(static_cast<std::int64_t>(profile.count(k + 1)) -
                        static_cast<std::int64_t>(profile.count(k)));
  Rational slope = median(std::move(slopes));

  std::vector<Rational> offsets;
  for (std::size_t k = window_lo; k <= window_hi; ++k)
    offsets.push_back(Rational(static_cast<std::int64_t>(profile.count(k))) -
                      slope * Rational(static_cast<std::int64_t>(k)));
  Rational intercept = median(std::move(offsets));

  Rational worst(0);
  for (std::size_t k = window_lo; k <= window_hi; ++k) {
    Rational predicted = slope * Rational(static_cast<std::int64_t>(k)) + intercept;
    Rational residual = abs(Rational(static_cast<std::int64_t>(profile.count(k))) - predicted);
    if (worst < residual) worst = residual;
  }

  LinearFit fit;
  fit.slope = slope;
  fit.intercept = intercept;
  fit.max_residual = worst;
  fit.window_lo = window_lo;
  fit.window_hi = window_hi;
  fit.exact = worst == Rational(0);
  return fit;
}

double entropy_estimate(const ComplexityProfile& profile) {
  if (profile.stable_upto < 2)
    throw Error("entropy estimate needs a stable horizon of at least 2");
  std::uint64_t count = profile.count(profile.stable_upto);
  return std::log(static_cast<double>(count)) /
         static_cast<double>(profile.stable_upto);
}

}  // namespace twist
