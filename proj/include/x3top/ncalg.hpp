#pragma once

#include "x3top/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace x3top {

struct NcGenerator {
  std::string name;
  int degree = 1;
  int parity() const { return degree % 2; }
};

using Alphabet = std::vector<NcGenerator>;
using Word = std::vector<int>;

int word_degree(const Alphabet& a, const Word& w);

// Element of the free associative algebra on an alphabet.
class NcElement {
 public:
  NcElement() = default;
  static NcElement letter(int index);
  static NcElement word(Word w, Rational c = 1);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Homogeneous component of the given degree.
  NcElement component(const Alphabet& a, int degree) const;
  // Degree if homogeneous, -1 if zero, throws if mixed.
  int homogeneous_degree(const Alphabet& a) const;

  NcElement& operator+=(const NcElement& o);
  NcElement& operator-=(const NcElement& o);
  friend NcElement operator+(NcElement a, const NcElement& b) { return a += b; }
  friend NcElement operator-(NcElement a, const NcElement& b) { return a -= b; }
  friend NcElement operator*(const NcElement& a, const NcElement& b);
  friend NcElement operator*(const Rational& c, const NcElement& a);
  friend bool operator==(const NcElement&, const NcElement&) = default;

 private:
  void add(const Word& w, const Rational& c);
  std::map<Word, Rational> terms_;
};

// Graded commutator ab - (-1)^{|a||b|} ba of homogeneous elements.
NcElement graded_bracket(const Alphabet& alphabet, const NcElement& a, const NcElement& b);

struct Cancelled : std::runtime_error {
  Cancelled() : std::runtime_error("computation cancelled") {}
};

// Polled between degree stages; return true to stop (throws Cancelled).
using CancelCheck = std::function<bool()>;

// Graded dimensions 0..maxdeg of T(V)/(relations). Relations must be
// homogeneous of degree >= 2; generator degrees >= 1.
std::vector<long> graded_dim_quotient_nc(const Alphabet& alphabet,
                                         const std::vector<NcElement>& relations, int maxdeg,
                                         const CancelCheck& cancel = {});

// Same computation, keeping the standard words of each degree.
struct NcQuotient {
  std::vector<long> dims;
  std::vector<std::vector<Word>> standard_words;
};
NcQuotient quotient_nc(const Alphabet& alphabet, const std::vector<NcElement>& relations,
                       int maxdeg, const CancelCheck& cancel = {});

}  // namespace x3top
