#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <string_view>

namespace x3top {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Vec2 = Eigen::Matrix<Rational, 2, 1>;
using Mat2i = Eigen::Matrix<long, 2, 2>;
using Vec2i = Eigen::Matrix<long, 2, 1>;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "p/q" or an integer literal, optional leading '-'. Nothing else.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return den(q) == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
long to_long(const Integer& z);

}  // namespace x3top
