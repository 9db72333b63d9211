#pragma once

#include "x3top/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace x3top {

// Truncated power series sum_{n<=maxdeg} c_n z^n.
class PowerSeries {
 public:
  explicit PowerSeries(int maxdeg = 0);
  PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries one(int maxdeg);

  int maxdeg() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_.at(n); }
  Rational& operator[](int n) { return c_.at(n); }
  const std::vector<Rational>& coeffs() const { return c_; }

  PowerSeries truncated(int maxdeg) const;
  std::vector<long> to_longs() const;  // throws unless every coefficient is an integer

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> c_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries reciprocal(const PowerSeries& a);  // needs a[0] != 0

// (1 + sign z^d)^e with rational e, truncated.
PowerSeries binomial_factor(int d, int sign, const Rational& e, int maxdeg);

// prod_{n odd} (1+z^n)^{r_n} / prod_{n even} (1-z^n)^{r_n}
PowerSeries series_from_product(const std::map<int, long>& odd_exponents,
                                const std::map<int, long>& even_exponents, int maxdeg);
// Same, ranks[n] for n = 1..maxdeg (ranks[0] ignored).
PowerSeries series_from_ranks(const std::vector<long>& ranks, int maxdeg);

struct PbwError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PbwExponents {
  std::map<int, long> odd, even;
  std::vector<long> ranks;  // ranks[n], n = 0..maxdeg, ranks[0] = 0
};

// Exact exponents r_1..r_maxdeg, any rational values allowed.
std::vector<Rational> pbw_extract_rational(const PowerSeries& series);
// Integral version: throws PbwError when some r_n is not a nonnegative integer.
PbwExponents pbw_extract(const PowerSeries& series);

// Series 1/(1 - 3z + z^2): Poincare series of the loop space of the 2-point blow-up.
PowerSeries loop_series_x2(int maxdeg);
// r_n for n = 1..maxdeg from loop_series_x2 (index 0 unused).
std::vector<long> loop_ranks_x2(int maxdeg);

}  // namespace x3top
