#pragma once

#include "x3top/homology.hpp"
#include "x3top/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace x3top {

// Polynomial in b with rational coefficients, lowest degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly b() { return UPoly({0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator()(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;
  // Quotient and remainder.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& d);
  static UPoly gcd(UPoly a, UPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Reduced quotient num/den with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UPoly::constant(1)) {}
  RatFunc(const Rational& c) : num_(UPoly::constant(c)), den_(UPoly::constant(1)) {}
  RatFunc(UPoly num, UPoly den);
  static RatFunc b() { return RatFunc(UPoly::b(), UPoly::constant(1)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rational constant_value() const;  // throws unless constant
  Rational operator()(const Rational& b) const;  // throws on a pole
  // Limit as b -> infinity; nullopt when it diverges.
  std::optional<Rational> limit() const;
  std::string to_string() const;

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x) { return RatFunc() - x; }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  UPoly num_, den_;
};

struct FormulaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bindings for mu, c1, c2, l, lam, c1p (and a, e inside scripts); b stays symbolic.
using FormulaEnv = std::map<std::string, RatFunc>;
FormulaEnv formula_env(const Shape& s);
// + - * / parentheses, integers, min(x,y) on constants.
RatFunc eval_formula(const std::string& f, const FormulaEnv& env);
// "lhs op rhs" with op in <=, <, >=, >, ==; both sides constant.
bool eval_condition(const std::string& c, const FormulaEnv& env);
// "D[4l+1]", "F-E1-E2", "E1-E2", "F", "B", ... for a given l.
HClass parse_curve(const std::string& s, long ell);

// Areas of B, F, E1, E2.
struct FormClass {
  Rational B, F, E1, E2;
  Rational area(const HClass& z) const;
  // Empty when F and the six exceptional classes all have positive area.
  std::string admissibility_violation() const;
  friend bool operator==(const FormClass&, const FormClass&) = default;
};

FormClass form_of(const Shape& s);  // (mu, 1, c1, c2)

struct InflationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// [w] + t PD(z); negative curves need t*m < w(z) with m = -z.z.
FormClass inflate(const FormClass& f, const HClass& z, const Rational& t);

struct InflationStep {
  std::string param;  // "a", "b" or "e"
  std::string curve;
};

struct Formula {
  Formula() = default;
  Formula(const char* p) : printed(p) {}
  Formula(std::string p, std::string e = {}) : printed(std::move(p)), emended(std::move(e)) {}
  std::string printed;
  std::string emended;  // empty when the printed formula is used as is
  const std::string& use(bool emend) const { return emend && !emended.empty() ? emended : printed; }
};

struct TableColumn {
  int table = 0, column = 0;
  std::string header;                   // lambda range as printed
  std::vector<std::string> conditions;  // all must hold
  std::vector<InflationStep> positive;
  std::string denominator;
  std::optional<InflationStep> negative;
  Formula a, e;
  std::string final_class;  // "B", "E1" or "E2"
  Formula final_area;
  std::vector<std::pair<std::string, std::string>> held;  // class -> formula kept fixed
  std::string target;  // final_class area as b -> sup
  // Cap on b from the negative step, when it exists: (condition or "", formula, stated in the text?)
  struct Cap {
    std::string when, formula;
    bool stated;
  };
  std::vector<Cap> caps;
};

const std::vector<TableColumn>& inflation_tables();
const TableColumn& table_column(int table, int column);  // throws std::invalid_argument

struct StepRecord {
  std::string label;
  FormClass areas;
};

struct TableReport {
  int table = 0, column = 0;
  bool ok = true;
  bool rejected = false;  // an inflation step was refused
  std::vector<std::string> failures;
  std::vector<StepRecord> steps;
  FormClass final_areas;
  Rational a, e;
};

// Throws std::invalid_argument when the shape misses the column's header (unless
// enforce_header is false) or b < 0.
TableReport run_table(int table, int column, const Shape& s, const Rational& b, bool emended = true,
                      bool enforce_header = true);

// Supremum of admissible b from the Buse slack of the negative step (nullopt: unbounded).
std::optional<Rational> derived_cap(const TableColumn& col, const Shape& s, bool emended = true);
// Cap from the column's data, if one applies at this shape.
std::optional<Rational> tabulated_cap(const TableColumn& col, const Shape& s);

struct LimitReport {
  bool ok = false;
  std::optional<Rational> cap;
  std::optional<Rational> value;  // final area at b -> cap or b -> infinity
  Rational target;
  RatFunc final_area;  // executed script, symbolic in b
  std::string detail;
};
LimitReport limit_check(int table, int column, const Shape& s, bool emended = true);

// Whether the shape satisfies the header; empty string on success, else the failed condition.
std::string column_precondition(const TableColumn& col, const Shape& s);

}  // namespace x3top
