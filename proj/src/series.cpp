#include "x3top/series.hpp"

#include <algorithm>

namespace x3top {

PowerSeries::PowerSeries(int maxdeg) : c_(static_cast<size_t>(std::max(maxdeg, 0)) + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

PowerSeries PowerSeries::one(int maxdeg) {
  PowerSeries s(maxdeg);
  s.c_[0] = 1;
  return s;
}

PowerSeries PowerSeries::truncated(int maxdeg) const {
  PowerSeries s(maxdeg);
  for (int n = 0; n <= std::min(maxdeg, this->maxdeg()); ++n) s.c_[n] = c_[n];
  return s;
}

std::vector<long> PowerSeries::to_longs() const {
  std::vector<long> out;
  for (const auto& q : c_) {
    if (!is_integer(q)) throw std::domain_error("non-integral coefficient " + to_string(q));
    out.push_back(to_long(num(q)));
  }
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int m = std::min(a.maxdeg(), b.maxdeg());
  PowerSeries s(m);
  for (int n = 0; n <= m; ++n) s[n] = a[n] + b[n];
  return s;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  int m = std::min(a.maxdeg(), b.maxdeg());
  PowerSeries s(m);
  for (int n = 0; n <= m; ++n) s[n] = a[n] - b[n];
  return s;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int m = std::min(a.maxdeg(), b.maxdeg());
  PowerSeries s(m);
  for (int i = 0; i <= m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  int m = a.maxdeg();
  PowerSeries s(m);
  s[0] = Rational(1) / a[0];
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) acc += a[i] * s[n - i];
    s[n] = -acc * s[0];
  }
  return s;
}

PowerSeries binomial_factor(int d, int sign, const Rational& e, int maxdeg) {
  PowerSeries s = PowerSeries::one(maxdeg);
  if (d <= 0) throw std::invalid_argument("factor degree must be positive");
  Rational coeff = 1;
  for (int j = 1; j * d <= maxdeg; ++j) {
    coeff = coeff * (e - (j - 1)) / j;
    s[j * d] = (sign < 0 && j % 2 == 1) ? Rational(-coeff) : coeff;
  }
  return s;
}

PowerSeries series_from_product(const std::map<int, long>& odd_exponents,
                                const std::map<int, long>& even_exponents, int maxdeg) {
  PowerSeries s = PowerSeries::one(maxdeg);
  for (auto [d, r] : odd_exponents) {
    if (d % 2 == 0) throw std::invalid_argument("odd exponent map has even degree");
    if (r < 0) throw std::invalid_argument("negative exponent");
    if (d <= maxdeg && r > 0) s = s * binomial_factor(d, +1, r, maxdeg);
  }
  for (auto [d, r] : even_exponents) {
    if (d % 2 != 0) throw std::invalid_argument("even exponent map has odd degree");
    if (r < 0) throw std::invalid_argument("negative exponent");
    if (d <= maxdeg && r > 0) s = s * binomial_factor(d, -1, Rational(-r), maxdeg);
  }
  return s;
}

PowerSeries series_from_ranks(const std::vector<long>& ranks, int maxdeg) {
  std::map<int, long> odd, even;
  for (int n = 1; n < static_cast<int>(ranks.size()) && n <= maxdeg; ++n)
    (n % 2 ? odd : even)[n] = ranks[n];
  return series_from_product(odd, even, maxdeg);
}

std::vector<Rational> pbw_extract_rational(const PowerSeries& series) {
  if (series[0] != 1) throw PbwError("series must have constant coefficient 1");
  int m = series.maxdeg();
  std::vector<Rational> r(m + 1);
  PowerSeries known = PowerSeries::one(m);
  for (int n = 1; n <= m; ++n) {
    // the degree-n factor starts 1 + r_n z^n for either parity
    r[n] = series[n] - known[n];
    if (r[n] != 0)
      known = known * (n % 2 ? binomial_factor(n, +1, r[n], m) : binomial_factor(n, -1, -r[n], m));
  }
  return r;
}

PbwExponents pbw_extract(const PowerSeries& series) {
  auto r = pbw_extract_rational(series);
  PbwExponents out;
  out.ranks.assign(r.size(), 0);
  for (size_t n = 1; n < r.size(); ++n) {
    if (!is_integer(r[n]) || r[n] < 0)
      throw PbwError("exponent r_" + std::to_string(n) + " = " + to_string(r[n]) +
                     " is not a nonnegative integer");
    long v = to_long(num(r[n]));
    out.ranks[n] = v;
    (n % 2 ? out.odd : out.even)[static_cast<int>(n)] = v;
  }
  return out;
}

PowerSeries loop_series_x2(int maxdeg) {
  PowerSeries d = PowerSeries::one(maxdeg);
  if (maxdeg >= 1) d[1] = -3;
  if (maxdeg >= 2) d[2] = 1;
  return reciprocal(d);
}

std::vector<long> loop_ranks_x2(int maxdeg) { return pbw_extract(loop_series_x2(maxdeg)).ranks; }

}  // namespace x3top
