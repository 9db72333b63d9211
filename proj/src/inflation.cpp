#include "x3top/inflation.hpp"

#include <cctype>
#include <sstream>

namespace x3top {

// ---- polynomials in b

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> q(std::max(a.degree() - d.degree() + 1, 0));
  UPoly r = a;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Rational f = r.lead() / d.lead();
    q[shift] += f;
    std::vector<Rational> t(shift + 1);
    t[shift] = f;
    r = r - UPoly(std::move(t)) * d;
  }
  return {UPoly(std::move(q)), r};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational l = a.lead();
  for (auto& x : a.c_) x /= l;
  return a;
}

// ---- rational functions

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  num = UPoly::divmod(num, g).first;
  den = UPoly::divmod(den, g).first;
  UPoly scale = UPoly::constant(1 / den.lead());
  num_ = num * scale;
  den_ = den * scale;
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw FormulaError("expression depends on b");
  return num_(0) / den_(0);
}

Rational RatFunc::operator()(const Rational& b) const {
  Rational d = den_(b);
  if (d == 0) throw std::domain_error("pole at b = " + x3top::to_string(b));
  return num_(b) / d;
}

std::optional<Rational> RatFunc::limit() const {
  if (num_.degree() > den_.degree()) return std::nullopt;
  if (num_.degree() < den_.degree()) return Rational(0);
  return num_.lead() / den_.lead();
}

namespace {

std::string poly_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (i == 0 || c != 1) s += x3top::to_string(c) + (i ? "*" : "");
    if (i == 1) s += "b";
    if (i > 1) s += "b^" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return poly_string(num_);
  return "(" + poly_string(num_) + ")/(" + poly_string(den_) + ")";
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}
RatFunc operator-(const RatFunc& x, const RatFunc& y) {
  return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}
RatFunc operator*(const RatFunc& x, const RatFunc& y) { return RatFunc(x.num_ * y.num_, x.den_ * y.den_); }
RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (y.num_.is_zero()) throw std::domain_error("division by the zero function");
  return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

// ---- formulas

namespace {

class Parser {
 public:
  Parser(const std::string& s, const FormulaEnv& env) : s_(s), env_(env) {}

  RatFunc parse_all() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw FormulaError("formula \"" + s_ + "\": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }
  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) r = r * unary();
      else if (eat('/')) {
        RatFunc d = unary();
        if (d.num().is_zero()) fail("division by zero");
        r = r / d;
      } else return r;
    }
  }
  RatFunc unary() {
    if (eat('-')) return -unary();
    return primary();
  }
  RatFunc primary() {
    skip();
    if (eat('(')) {
      RatFunc r = expr();
      if (!eat(')')) fail("missing ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(parse_rational(s_.substr(start, pos_ - start)));
    }
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    std::string id = s_.substr(start, pos_ - start);
    if (id.empty()) fail("expected a term");
    if (id == "min") {
      if (!eat('(')) fail("min needs arguments");
      RatFunc x = expr();
      if (!eat(',')) fail("min takes two arguments");
      RatFunc y = expr();
      if (!eat(')')) fail("missing ')'");
      if (!x.is_constant() || !y.is_constant()) fail("min of non-constants");
      return std::min(x.constant_value(), y.constant_value());
    }
    if (id == "b") return RatFunc::b();
    auto it = env_.find(id);
    if (it == env_.end()) fail("unknown variable " + id);
    return it->second;
  }

  const std::string& s_;
  const FormulaEnv& env_;
  size_t pos_ = 0;
};

Rational const_formula(const std::string& f, const FormulaEnv& env) {
  return eval_formula(f, env).constant_value();
}

}  // namespace

FormulaEnv formula_env(const Shape& s) {
  return {{"mu", s.mu()}, {"c1", s.c1()}, {"c2", s.c2()}, {"l", Rational(s.ell())}, {"lam", s.lambda()},
          {"c1p", s.c1()}};
}

RatFunc eval_formula(const std::string& f, const FormulaEnv& env) { return Parser(f, env).parse_all(); }

bool eval_condition(const std::string& c, const FormulaEnv& env) {
  for (const char* op : {"<=", ">=", "==", "<", ">"}) {
    size_t at = c.find(op);
    if (at == std::string::npos) continue;
    std::string o = op;
    Rational l = const_formula(c.substr(0, at), env), r = const_formula(c.substr(at + o.size()), env);
    if (o == "<=") return l <= r;
    if (o == ">=") return l >= r;
    if (o == "==") return l == r;
    if (o == "<") return l < r;
    return l > r;
  }
  throw FormulaError("condition \"" + c + "\" has no comparison");
}

HClass parse_curve(const std::string& s, long ell) {
  HClass out;
  size_t i = 0;
  int sign = 1;
  bool any = false;
  auto fail = [&]() -> HClass { throw FormulaError("bad curve \"" + s + "\""); };
  while (i < s.size()) {
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    HClass t;
    if (s.compare(i, 2, "E1") == 0) t = HClass::E1(), i += 2;
    else if (s.compare(i, 2, "E2") == 0) t = HClass::E2(), i += 2;
    else if (s[i] == 'B') t = HClass::B(), ++i;
    else if (s[i] == 'F') t = HClass::F(), ++i;
    else if (s.compare(i, 4, "D[4l") == 0) {
      size_t close = s.find(']', i);
      if (close == std::string::npos) return fail();
      std::string off = s.substr(i + 4, close - i - 4);
      long k = off.empty() ? 0 : std::stol(off);
      t = d_class(4 * ell + k);
      i = close + 1;
    } else return fail();
    out = out + sign * t;
    sign = 1;
    any = true;
  }
  if (!any) return fail();
  return out;
}

// ---- forms and inflation

Rational FormClass::area(const HClass& z) const { return B * z.p + F * z.q - E1 * z.r1 - E2 * z.r2; }

std::string FormClass::admissibility_violation() const {
  if (F <= 0) return "area(F) = " + x3top::to_string(F) + " <= 0";
  for (const auto& c : exceptional_classes()) {
    Rational a = area(c);
    if (a <= 0) return "area(" + c.to_string() + ") = " + x3top::to_string(a) + " <= 0";
  }
  return {};
}

FormClass form_of(const Shape& s) { return {s.mu(), 1, s.c1(), s.c2()}; }

FormClass inflate(const FormClass& f, const HClass& z, const Rational& t) {
  if (t < 0) throw InflationError("inflation parameter " + x3top::to_string(t) + " is negative");
  long sq = intersect(z, z);
  if (sq < 0) {
    Rational w = f.area(z);
    if (!(t * (-sq) < w))
      throw InflationError("Buse bound violated along " + z.to_string() + ": " + x3top::to_string(t) + " * " +
                           std::to_string(-sq) + " >= " + x3top::to_string(w));
  }
  FormClass g{f.B + t * intersect(z, HClass::B()), f.F + t * intersect(z, HClass::F()),
              f.E1 + t * intersect(z, HClass::E1()), f.E2 + t * intersect(z, HClass::E2())};
  std::string bad = g.admissibility_violation();
  if (!bad.empty()) throw InflationError("inadmissible after inflating along " + z.to_string() + ": " + bad);
  return g;
}

// ---- table data

namespace {

using Col = TableColumn;
using Cap = TableColumn::Cap;

std::vector<std::pair<std::string, std::string>> held(int table) {
  if (table <= 5) return {{"F", "1"}, {"E1", "c1"}, {"E2", "c2"}};
  if (table <= 11) return {{"F", "1"}, {"B", "mu"}, {"E2", "c2"}};
  return {{"F", "1"}, {"B", "mu"}, {"E1", "c1"}};
}

Col col(int t, int c, std::string header, std::vector<std::string> cond, std::vector<InflationStep> pos,
        std::string den, std::optional<InflationStep> neg, Formula a, Formula e, std::string cls, Formula fin,
        std::string target, std::vector<Cap> caps = {}) {
  Col x;
  x.table = t;
  x.column = c;
  x.header = std::move(header);
  x.conditions = std::move(cond);
  x.positive = std::move(pos);
  x.denominator = std::move(den);
  x.negative = std::move(neg);
  x.a = std::move(a);
  x.e = std::move(e);
  x.final_class = std::move(cls);
  x.final_area = std::move(fin);
  x.held = held(t);
  x.target = std::move(target);
  x.caps = std::move(caps);
  return x;
}

std::vector<TableColumn> build_tables() {
  const std::vector<std::string> A = {"lam<=c2"}, Bc = {"c2<lam", "lam<=c1"}, C = {"c1<lam", "lam<=c1+c2"},
                                 D = {"c1+c2<lam"};
  std::vector<TableColumn> v;
  v.push_back(col(3, 1, "lambda <= c2, (7) or (9)", A, {{"b", "D[4l+1]"}, {"e", "D[4l-1]"}}, "1+b+e",
                  InflationStep{"a", "E1-E2"}, {"c2*b/(1-c1-c2+b)"}, {"(c1+c2)*b/(1-c1-c2)"}, "B",
                  {"(mu*(1-c1-c2)+b*l)/(1-c1-c2+b)"}, "l"));
  v.push_back(col(3, 2, "c1 < lambda <= c1+c2, (13) or (15)", C, {{"b", "D[4l+1]"}, {"e", "D[4l+3]"}}, "1+b+e",
                  InflationStep{"a", "F-E1-E2"}, {"c2*b/(1-c1+c2+b)"}, {"(c1-c2)*b/(1-c1+c2)"}, "B",
                  {"(mu*(1-c1+c2)+b*(l+c1))/(1-c1+c2+b)"}, "l+c1"));
  v.push_back(col(4, 1, "lambda <= c2, (8) or (10)", A, {{"a", "D[4l]"}, {"b", "D[4l+1]"}, {"e", "D[4l-1]"}},
                  "1+a+b+e", std::nullopt, {"c2*b/(1-c1-c2)"}, {"c1*b/(1-c1-c2)"}, "B",
                  {"(mu*(1-c1-c2)+b*l)/(1-c1-c2+b)"}, "l"));
  v.push_back(col(4, 2, "c2 < lambda <= c1, (11) or (12)", Bc,
                  {{"a", "D[4l+4]"}, {"b", "D[4l+1]"}, {"e", "D[4l-1]"}}, "1+a+b+e", std::nullopt,
                  {"c2*b/(1-c1-c2)"}, {"c1*b/(1-c1-c2)"}, "B",
                  {"(mu*(1-c1-c2)+b*(l+c2))/(1-c1+c2+b)", "(mu*(1-c1-c2)+b*(l+c2))/(1-c1-c2+b)"}, "l+c2"));
  v.push_back(col(5, 1, "c1 < lambda <= c1+c2, (14) or (16)", C,
                  {{"a", "D[4l+2]"}, {"b", "D[4l+1]"}, {"e", "D[4l+3]"}}, "1+a+b+e", std::nullopt,
                  {"c2*b/(1-c1)"}, {"(c1-c2)*b/(1-c1)"}, "B", {"(mu*(1-c1)+b*(l+c1))/(1-c1+b)"}, "l+c1"));
  v.push_back(col(5, 2, "c1+c2 < lambda, (17) or (18)", D, {{"a", "D[4l+6]"}, {"b", "D[4l+1]"}, {"e", "D[4l+3]"}},
                  "1+a+b+e", std::nullopt, {"c2*b/(1-c1)"}, {"(c1-c2)*b/(1-c1)"}, "B",
                  {"(mu*(1-c1)+b*(l+c1+c2))/(1-c1+b)"}, "l+c1+c2"));
  v.push_back(col(6, 1, "lambda <= c2, (7) or (9)", A, {{"e", "F"}, {"b", "D[4l+1]"}}, "1+b",
                  InflationStep{"a", "E1-E2"}, {"c2*b/(1+b)"}, {"lam*b"}, "E1", {"(c1p-c2*b)/(1+b)"}, "c2",
                  {{"", "(c1p-c2)/(2*c2)", true}}));
  v.push_back(col(6, 2, "c1 < lambda <= c1+c2, (13) or (15)", C, {{"e", "F"}, {"b", "D[4l+1]"}}, "1+b",
                  InflationStep{"a", "F-E1-E2"}, {"c2*b/(1+b)"}, {"(lam-c2)*b"}, "E1", {"(c1p+c2*b)/(1+b)"},
                  "c2"));
  v.push_back(col(7, 1, "lambda <= c2, (8) or (10)", A, {{"e", "F"}, {"a", "D[4l]"}, {"b", "D[4l+1]"}}, "1+a+b",
                  std::nullopt, {"c2*b/(1-c2)"}, {"lam*b/(1-c2)"}, "E1", {"c1p*(1-c2)/(1-c2+b)"}, "0"));
  v.push_back(col(7, 2, "c2 < lambda <= c1, (11) or (12)", Bc, {{"e", "F"}, {"b", "D[4l+1]"}, {"a", "D[4l+4]"}},
                  "1+a+b", std::nullopt, {"c2*b/(1-c2)"}, {"(lam-c2)*b/(1-c2)"}, "E1",
                  {"c1p*(1-c2)/(1-c2+(lam-c2)*b)", "c1p*(1-c2)/(1-c2+b)"}, "0"));
  v.push_back(col(8, 1, "c1 <= c1' < lambda <= c1+c2, (14) or (16)", C,
                  {{"e", "F"}, {"b", "D[4l+1]"}, {"a", "D[4l+2]"}}, "1+a+b", std::nullopt, {"c2*b/(1-c2)"},
                  {"(lam-c2)*b/(1-c2)"}, "E1", {"(c1p*(1-c2)+c2*b)/(1-c2+b)"}, "c2"));
  v.push_back(col(8, 2, "c1+c2 < lambda, (17) or (18)", D, {{"e", "F"}, {"b", "D[4l+1]"}, {"a", "D[4l+6]"}},
                  "1+a+b", std::nullopt, {"c2*b/(1-c2)"}, {"(lam-2*c2)*b/(1-c2)"}, "E1",
                  {"(c1p*(1-c2)+c2*b)/(1-c2+b)"}, "c2"));
  v.push_back(col(9, 1, "lambda <= c2, (7) or (9)", A, {{"e", "F"}, {"b", "D[4l-1]"}}, "1+b",
                  InflationStep{"a", "E1-E2"}, {"c2*b/(1+b)"}, {"lam*b"}, "E1", {"(c1+(1-c2)*b)/(1+b)"}, "1-c2"));
  v.push_back(col(9, 2, "c1 <= c1' < lambda <= c1+c2, (13) or (15)", C, {{"e", "D[4l+1]"}, {"b", "D[4l+3]"}},
                  "1+b+e", InflationStep{"a", "F-E1-E2"}, {"c2*b/(lam-c2+b)"}, {"(1-lam+c2)*b/(lam-c2)"}, "E1",
                  {"(c1*(lam-c2)+lam*b)/(lam-c2+b)"}, "min(lam,1-c2)",
                  {{"lam+c2>1", "(lam-c2)*(1-c1-c2)/(lam+c2-1)", false}}));
  v.push_back(col(10, 1, "lambda <= c2, (8) or (10)", A, {{"e", "F"}, {"a", "D[4l]"}, {"b", "D[4l-1]"}},
                  "1+a+b", std::nullopt, {"c2*b/(1-c2)"}, {"lam*b/(1-c2)"}, "E1",
                  {"(c1*(1-c2)+(1-c2)*b)/(1-c2+b)"}, "1-c2"));
  v.push_back(col(10, 2, "c2 < lambda <= c1, (11) or (12)", Bc, {{"e", "F"}, {"b", "D[4l-1]"}, {"a", "D[4l+4]"}},
                  "1+a+b", std::nullopt, {"c2*b/(1-c2)"}, {"(lam-c2)*b/(1-c2)"}, "E1",
                  {"(c1*(1-c2)+(1-c2)*b)/(1-c2+b)"}, "1-c2"));
  v.push_back(col(11, 1, "c1 <= c1' < lambda <= c1+c2, (14) or (16)", C,
                  {{"e", "D[4l+1]"}, {"a", "D[4l+2]"}, {"b", "D[4l+3]"}}, "1+a+b+e", std::nullopt,
                  {"c2*b/(lam-c2)"}, {"(1-lam)*b/(lam-c2)"}, "E1", {"(c1*(lam-c2)+lam*b)/(lam-c2+b)"}, "lam"));
  v.push_back(col(11, 2, "c1 <= c1' < c1+c2 < lambda, (17) or (18)", D,
                  {{"e", "D[4l+1]"}, {"b", "D[4l+3]"}, {"a", "D[4l+6]"}}, "1+a+b+e", std::nullopt,
                  {"c2*b/(lam-2*c2)"}, {"(1-lam+c2)*b/(lam-2*c2)"}, "E1",
                  {"(c1*(lam-2*c2)+(lam-c2)*b)/(lam-2*c2+b)"}, "lam-c2"));
  v.push_back(col(12, 1, "lambda <= c2 <= c2' < c1, (7) or (9)", A, {{"e", "F"}, {"b", "D[4l-1]"}}, "1+b",
                  InflationStep{"a", "E1-E2"}, {"(1-c1)*b/(1+b)"}, {"lam*b"}, "E2", {"(c2+(1-c1)*b)/(1+b)"},
                  "min(c1,1-c1)", {{"c1<1/2", "(c1-c2)/(1-2*c1)", true}}));
  v.push_back(col(12, 2, "c1 < lambda <= c1+c2, (13) or (15)", C, {{"e", "F"}, {"b", "D[4l+1]"}}, "1+b",
                  InflationStep{"a", "F-E1-E2"}, {"c1*b/(1+b)"}, {"(lam-c1)*b"}, "E2", {"(c2+c1*b)/(1+b)"},
                  "min(c1,1-c1)", {{"c1>1/2", "(1-c1-c2)/(2*c1-1)", false}}));
  v.push_back(col(13, 1, "lambda <= c2 <= c2', (8) or (10)", A, {{"e", "F"}, {"b", "D[4l-1]"}, {"a", "D[4l]"}},
                  "1+a+b", std::nullopt, {"(1-c1)*b/c1"}, {"lam*b/c1"}, "E2", {"(c2*c1+(1-c1)*b)/(c1+b)"},
                  "1-c1"));
  v.push_back(col(13, 2, "c2 <= c2' < c1 < lambda <= c1+c2, (14) or (16)", C,
                  {{"e", "F"}, {"b", "D[4l+1]"}, {"a", "D[4l+2]"}}, "1+a+b", std::nullopt,
                  {"c1*b/(lam-c1)", "c1*b/(1-c1)"}, {"(lam-c1)*b/(1-c1)"}, "E2",
                  {"(c2*(1-c1)+c1*b)/(1-c1+b)"}, "c1"));
  v.push_back(col(14, 1, "c2 <= c2' < lambda <= c1 and lambda >= 1-c1", {"c2<lam", "lam<=c1", "lam>=1-c1"},
                  {{"e", "F"}, {"b", "D[4l-1]"}, {"a", "D[4l+4]"}}, "1+a+b", std::nullopt, {"(1-c1)*b/c1"},
                  {"(lam-1+c1)*b/c1"}, "E2", {"(c2*c1+(1-c1)*b)/(c1+b)"}, "1-c1"));
  v.push_back(col(14, 2, "c2 <= c2' < lambda <= c1 and lambda < 1-c1", {"c2<lam", "lam<=c1", "lam<1-c1"},
                  {{"e", "D[4l+1]"}, {"b", "D[4l-1]"}, {"a", "D[4l+4]"}}, "1+a+b+e", std::nullopt, {"lam*b/c1"},
                  {"(1-lam-c1)*b/c1"}, "E2", {"(c2*c1+lam*b)/(c1+b)"}, "lam"));
  v.push_back(col(15, 1, "c2+c1 < lambda and lambda-c1 <= c1", {"c1+c2<lam", "lam<=2*c1"},
                  {{"b", "D[4l+1]"}, {"a", "D[4l+6]"}, {"e", "F-E1"}}, "1+a+b", std::nullopt,
                  {"(lam-c1)*b/(1-lam+c1)"}, {"(2*c1-lam)*b/(1-lam+c1)"}, "E2",
                  {"(c2*(1-lam+c1)+(lam-c1)*b)/(1-lam+c1+b)"}, "lam-c1"));
  v.push_back(col(15, 2, "c2+c1 < lambda and lambda-c1 > c1", {"c1+c2<lam", "lam>2*c1"},
                  {{"e", "F"}, {"b", "D[4l+1]"}, {"a", "D[4l+6]"}}, "1+a+b", std::nullopt, {"c1*b/(1-c1)"},
                  {"(lam-2*c1)*b/(1-c1)"}, "E2", {"(c2*(1-c1)+c1*b)/(1-c1+b)"}, "c1"));
  return v;
}

struct SymForm {
  RatFunc B, F, E1, E2;
  RatFunc area(const HClass& z) const {
    return B * Rational(z.p) + F * Rational(z.q) - E1 * Rational(z.r1) - E2 * Rational(z.r2);
  }
  void add(const HClass& z, const RatFunc& t) {
    B = B + t * Rational(intersect(z, HClass::B()));
    F = F + t * Rational(intersect(z, HClass::F()));
    E1 = E1 + t * Rational(intersect(z, HClass::E1()));
    E2 = E2 + t * Rational(intersect(z, HClass::E2()));
  }
  void divide(const RatFunc& d) {
    B = B / d, F = F / d, E1 = E1 / d, E2 = E2 / d;
  }
  FormClass at(const Rational& b) const { return {B(b), F(b), E1(b), E2(b)}; }
  const RatFunc& get(const std::string& cls) const {
    if (cls == "B") return B;
    if (cls == "F") return F;
    if (cls == "E1") return E1;
    if (cls == "E2") return E2;
    throw FormulaError("unknown class " + cls);
  }
};

// One symbolic step of the script.
struct SymStep {
  std::string label;
  std::optional<HClass> curve;  // inflation step when set
  RatFunc t;
  SymForm after;
};

struct Script {
  RatFunc a, e;
  std::vector<SymStep> steps;
  SymForm final;
  std::optional<RatFunc> slack;  // Buse slack of the negative step: w(Z) - m t
};

Script execute(const TableColumn& c, const Shape& s, bool emend) {
  FormulaEnv env = formula_env(s);
  Script sc;
  sc.a = eval_formula(c.a.use(emend), env);
  sc.e = eval_formula(c.e.use(emend), env);
  auto param = [&](const std::string& p) -> RatFunc {
    if (p == "a") return sc.a;
    if (p == "e") return sc.e;
    if (p == "b") return RatFunc::b();
    throw FormulaError("unknown parameter " + p);
  };
  FormClass f0 = form_of(s);
  SymForm w{f0.B, f0.F, f0.E1, f0.E2};
  sc.steps.push_back({"start", std::nullopt, RatFunc(), w});
  for (const auto& st : c.positive) {
    HClass z = parse_curve(st.curve, s.ell());
    RatFunc t = param(st.param);
    w.add(z, t);
    sc.steps.push_back({"+" + st.param + " PD(" + z.to_string() + ")", z, t, w});
  }
  FormulaEnv with_params = env;
  with_params["a"] = sc.a;
  with_params["e"] = sc.e;
  w.divide(eval_formula(c.denominator, with_params));
  sc.steps.push_back({"/(" + c.denominator + ")", std::nullopt, RatFunc(), w});
  if (c.negative) {
    HClass z = parse_curve(c.negative->curve, s.ell());
    RatFunc t = param(c.negative->param);
    sc.slack = w.area(z) - t * Rational(-intersect(z, z));
    w.add(z, t);
    sc.steps.push_back({"+" + c.negative->param + " PD(" + z.to_string() + ")", z, t, w});
  }
  sc.final = w;
  return sc;
}

}  // namespace

const std::vector<TableColumn>& inflation_tables() {
  static const std::vector<TableColumn> t = build_tables();
  return t;
}

const TableColumn& table_column(int table, int column) {
  for (const auto& c : inflation_tables())
    if (c.table == table && c.column == column) return c;
  throw std::invalid_argument("no inflation table " + std::to_string(table) + " column " + std::to_string(column));
}

std::string column_precondition(const TableColumn& col, const Shape& s) {
  if (!s.generic()) return "shape must be generic (c2 < c1, c1+c2 < 1)";
  if (s.ell() < 1) return "l >= 1 (mu > 1)";
  FormulaEnv env = formula_env(s);
  for (const auto& c : col.conditions)
    if (!eval_condition(c, env)) return c;
  return {};
}

TableReport run_table(int table, int column, const Shape& s, const Rational& b, bool emend,
                      bool enforce_header) {
  const TableColumn& c = table_column(table, column);
  std::string pre = column_precondition(c, s);
  if (!pre.empty() && enforce_header)
    throw std::invalid_argument("table " + std::to_string(table) + " column " + std::to_string(column) +
                                " needs " + pre + " at " + s.to_string());
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  Script sc = execute(c, s, emend);
  TableReport r;
  r.table = table;
  r.column = column;
  r.a = sc.a(b);
  r.e = sc.e(b);
  // replay numerically through inflate() so bounds and admissibility are enforced
  FormClass cur = sc.steps.front().after.at(b);
  r.steps.push_back({sc.steps.front().label, cur});
  for (size_t i = 1; i < sc.steps.size(); ++i) {
    const SymStep& st = sc.steps[i];
    FormClass expect = st.after.at(b);
    if (st.curve) {
      try {
        cur = inflate(cur, *st.curve, st.t(b));
      } catch (const InflationError& ex) {
        r.ok = false;
        r.rejected = true;
        r.failures.push_back(st.label + ": " + ex.what());
        return r;
      }
    } else {
      cur = expect;
    }
    if (!(cur == expect)) {
      r.ok = false;
      r.failures.push_back(st.label + ": numeric and symbolic areas differ");
    }
    r.steps.push_back({st.label, cur});
  }
  r.final_areas = cur;
  FormulaEnv env = formula_env(s);
  auto check = [&](const std::string& cls, const std::string& formula) {
    Rational want = eval_formula(formula, env)(b);
    Rational got = sc.final.get(cls)(b);
    if (got != want) {
      r.ok = false;
      r.failures.push_back("area(" + cls + ") = " + to_string(got) + ", table gives " + to_string(want) + " (" +
                           formula + ")");
    }
  };
  check(c.final_class, c.final_area.use(emend));
  for (const auto& [cls, f] : c.held) check(cls, f);
  return r;
}

std::optional<Rational> derived_cap(const TableColumn& c, const Shape& s, bool emend) {
  Script sc = execute(c, s, emend);
  if (!sc.slack) return std::nullopt;
  const RatFunc& sl = *sc.slack;
  // slack = N/D with D > 0 on b >= 0; cap is the first positive root of N.
  const UPoly& n = sl.num();
  if (n.degree() <= 0) {
    if (n.is_zero() || n.lead() < 0) return Rational(0);
    return std::nullopt;
  }
  if (n.degree() > 1) throw std::logic_error("Buse slack numerator is not linear");
  Rational root = -n.coeffs()[0] / n.coeffs()[1];
  if (n.coeffs()[0] <= 0) return Rational(0);
  if (root > 0) return root;
  return std::nullopt;
}

std::optional<Rational> tabulated_cap(const TableColumn& c, const Shape& s) {
  FormulaEnv env = formula_env(s);
  for (const auto& cap : c.caps)
    if (cap.when.empty() || eval_condition(cap.when, env)) return const_formula(cap.formula, env);
  return std::nullopt;
}

LimitReport limit_check(int table, int column, const Shape& s, bool emend) {
  const TableColumn& c = table_column(table, column);
  std::string pre = column_precondition(c, s);
  if (!pre.empty())
    throw std::invalid_argument("table " + std::to_string(table) + " column " + std::to_string(column) +
                                " needs " + pre + " at " + s.to_string());
  Script sc = execute(c, s, emend);
  LimitReport r;
  r.final_area = sc.final.get(c.final_class);
  r.target = const_formula(c.target, formula_env(s));
  r.cap = derived_cap(c, s, emend);
  if (r.cap) r.value = r.final_area(*r.cap);
  else r.value = r.final_area.limit();
  r.ok = r.value && *r.value == r.target;
  std::ostringstream os;
  os << "area(" << c.final_class << ") = " << r.final_area.to_string();
  if (r.cap) os << ", b -> " << to_string(*r.cap);
  else os << ", b -> infinity";
  os << ": " << (r.value ? to_string(*r.value) : std::string("diverges")) << ", target " << c.target << " = "
     << to_string(r.target);
  r.detail = os.str();
  return r;
}

}  // namespace x3top
