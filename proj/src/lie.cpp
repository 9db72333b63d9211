#include "x3top/lie.hpp"

#include "x3top/series.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace x3top {

namespace {

constexpr std::array<std::pair<CaseId, const char*>, 11> kCaseNames = {{{CaseId::MU1, "MU1"},
                                                                       {CaseId::S1, "S1"},
                                                                       {CaseId::S2, "S2"},
                                                                       {CaseId::S3a, "S3a"},
                                                                       {CaseId::S3b, "S3b"},
                                                                       {CaseId::S4a, "S4a"},
                                                                       {CaseId::S4b, "S4b"},
                                                                       {CaseId::R1, "R1"},
                                                                       {CaseId::R2, "R2"},
                                                                       {CaseId::R3, "R3"},
                                                                       {CaseId::GINF, "GINF"}}};

BracketRelation br(std::vector<BracketTerm> t) { return {std::move(t)}; }
BracketRelation vanish(const std::string& a, const std::string& b) { return br({{1, a, b}}); }

void add_generator(LiePresentation& p, const std::string& name, int degree = 1) {
  p.generators.push_back({name, degree});
}

LiePresentation mu1() {
  LiePresentation p;
  for (const char* g : {"x0", "y0", "x1", "y1", "z"}) add_generator(p, g);
  for (const char* g : {"x0", "y0", "x1", "y1", "z"}) p.relations.push_back(vanish(g, g));
  // complement of {[x0,y1],[x0,x1],[y0,y1],[z,y0],[z,x1]}
  for (auto [a, b] : {std::pair{"x0", "y0"}, {"x0", "z"}, {"x1", "y1"}, {"x1", "y0"}, {"z", "y1"}})
    p.relations.push_back(vanish(a, b));
  return p;
}

LiePresentation with_t(LiePresentation p) {
  add_generator(p, "t");
  p.relations.push_back(vanish("t", "t"));
  p.relations.push_back(vanish("y1", "t"));
  return p;
}

LiePresentation s1() {
  LiePresentation p = with_t(mu1());
  p.relations.push_back(br({{1, "x0", "t"}, {-1, "y0", "t"}}));
  p.relations.push_back(br({{1, "z", "t"}, {-1, "x1", "z"}, {-1, "x1", "t"}}));
  return p;
}

LiePresentation s2() {
  LiePresentation p = with_t(mu1());
  p.relations.push_back(br({{1, "y0", "t"}, {-1, "x0", "t"}}));
  p.relations.push_back(br({{1, "x0", "t"}, {-1, "x1", "t"}, {-1, "x1", "x0"}}));
  p.relations.push_back(br({{1, "z", "t"}, {-1, "x1", "z"}, {-1, "x1", "t"}}));
  return p;
}

LiePresentation s3_relations() {
  LiePresentation p = with_t(mu1());
  p.relations.push_back(vanish("x1", "t"));
  p.relations.push_back(br({{1, "x0", "t"}, {-1, "y0", "t"}}));
  p.relations.push_back(br({{1, "x0", "t"}, {-1, "x1", "x0"}}));
  p.relations.push_back(br({{1, "z", "t"}, {-1, "x1", "z"}}));
  return p;
}

void add_w(LiePresentation& p, int count, long degree) {
  for (int i = 1; i <= count; ++i)
    p.central_even_generators.push_back({count == 1 ? "w" : "w" + std::to_string(i), static_cast<int>(degree)});
}

bool is_generic(CaseId c) {
  return c != CaseId::R1 && c != CaseId::R2 && c != CaseId::R3 && c != CaseId::GINF;
}

void need(bool ok, const LieCase& c, const char* what) {
  if (!ok) throw std::invalid_argument(c.to_string() + ": " + what);
}

}  // namespace

const char* to_string(CaseId c) {
  for (const auto& [id, name] : kCaseNames)
    if (id == c) return name;
  return "?";
}

CaseId parse_case_id(const std::string& s) {
  for (const auto& [id, name] : kCaseNames)
    if (s == name) return id;
  throw std::invalid_argument("unknown case " + s);
}

std::string LieCase::to_string() const {
  std::string s = x3top::to_string(id);
  if (id == CaseId::R1 || id == CaseId::R2) s += std::string("[") + x3top::to_string(base) + "]";
  if (id == CaseId::R3 && ell > 0) s += r3_small_lambda ? "[lambda<=1/2]" : "[lambda>1/2]";
  return s + "(l=" + std::to_string(ell) + ")";
}

std::string BracketRelation::to_string() const {
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    long c = terms[i].coeff;
    if (i) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += "[" + terms[i].a + "," + terms[i].b + "]";
  }
  return s + " = 0";
}

int LiePresentation::index(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator " + name);
}

std::vector<NcElement> LiePresentation::nc_relations() const {
  std::vector<NcElement> out;
  for (const auto& r : relations) {
    NcElement e;
    for (const auto& t : r.terms)
      e += Rational(t.coeff) *
           graded_bracket(generators, NcElement::letter(index(t.a)), NcElement::letter(index(t.b)));
    out.push_back(e);
  }
  return out;
}

LiePresentation LiePresentation::without(const std::string& name) const {
  index(name);
  LiePresentation p;
  for (const auto& g : generators)
    if (g.name != name) p.generators.push_back(g);
  for (const auto& r : relations) {
    bool uses = std::any_of(r.terms.begin(), r.terms.end(),
                            [&](const BracketTerm& t) { return t.a == name || t.b == name; });
    if (!uses) p.relations.push_back(r);
  }
  p.central_even_generators = central_even_generators;
  return p;
}

LiePresentation presentation_for(const LieCase& c) {
  const long l = c.ell;
  switch (c.id) {
    case CaseId::MU1:
      need(l == 0, c, "mu = 1 has l = 0");
      return mu1();
    case CaseId::S1:
      need(l == 1, c, "S1 needs 1 < mu <= 2");
      return s1();
    case CaseId::S2:
      need(l == 1, c, "S2 needs 1 < mu <= 2");
      return s2();
    case CaseId::S3a:
    case CaseId::S3b:
    case CaseId::S4a:
    case CaseId::S4b: {
      bool a = c.id == CaseId::S3a || c.id == CaseId::S4a;
      need(a ? l > 1 : l >= 1, c, a ? "case (a) needs l > 1" : "case (b) needs l >= 1");
      LiePresentation p = s3_relations();
      bool s3 = c.id == CaseId::S3a || c.id == CaseId::S3b;
      add_w(p, s3 ? 2 : 1, a ? 4 * l - 2 : 4 * l);
      return p;
    }
    case CaseId::GINF:
      return s3_relations();
    case CaseId::R1:
    case CaseId::R2: {
      need(is_generic(c.base) && c.base != CaseId::R1, c, "base must be a generic case");
      LieCase b{c.base, l};
      return presentation_for(b).without(c.id == CaseId::R1 ? "y1" : "z");
    }
    case CaseId::R3: {
      need(l >= 0, c, "l must be nonnegative");
      LiePresentation p;
      if (l == 0) {
        for (const char* g : {"x0", "y0"}) add_generator(p, g);
        for (auto [a, b] : {std::pair{"x0", "x0"}, {"y0", "y0"}, {"x0", "y0"}}) p.relations.push_back(vanish(a, b));
        return p;
      }
      std::vector<std::string> g = {"x0", "y0", "x1", "t"};
      for (const auto& n : g) add_generator(p, n);
      for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i; j < g.size(); ++j)
          if (!(g[i] == "x0" && g[j] == "x1")) p.relations.push_back(vanish(g[i], g[j]));
      add_w(p, 2, c.r3_small_lambda ? 4 * l - 2 : 4 * l);
      return p;
    }
  }
  throw std::invalid_argument("unknown case");
}

LiePresentation presentation_for(CaseId id, long ell) {
  LieCase c;
  c.id = id;
  c.ell = ell;
  return presentation_for(c);
}

std::vector<long> enveloping_dims(const LiePresentation& p, int maxdeg, const CancelCheck& cancel) {
  return graded_dim_quotient_nc(p.generators, p.nc_relations(), maxdeg, cancel);
}

std::vector<long> pi_ranks(const LiePresentation& p, int maxdeg, const CancelCheck& cancel) {
  if (maxdeg < 1 || maxdeg > kPiRanksMaxDeg)
    throw std::invalid_argument("maxdeg must be in 1.." + std::to_string(kPiRanksMaxDeg));
  std::vector<long> dims = enveloping_dims(p, maxdeg, cancel);
  std::vector<Rational> c(dims.begin(), dims.end());
  PowerSeries s(c);
  for (const auto& w : p.central_even_generators)
    if (w.degree <= maxdeg) s = s * binomial_factor(w.degree, -1, Rational(-1), maxdeg);
  return pbw_extract(s).ranks;
}

std::vector<long> pi_ranks(const LieCase& c, int maxdeg, const CancelCheck& cancel) {
  return pi_ranks(presentation_for(c), maxdeg, cancel);
}

LieCase case_for_shape(const Shape& s) {
  LieCase c;
  c.ell = s.ell();
  const Rational half(1, 2);
  auto generic_id = [&]() {
    if (s.mu() == 1) return CaseId::MU1;
    LambdaRange r = s.range();
    if (c.ell == 1) {
      switch (r) {
        case LambdaRange::A: return CaseId::S1;
        case LambdaRange::B: return CaseId::S2;
        case LambdaRange::C: return CaseId::S3b;
        case LambdaRange::D: return CaseId::S4b;
      }
    }
    switch (r) {
      case LambdaRange::A: return CaseId::S3a;
      case LambdaRange::B: return CaseId::S4a;
      case LambdaRange::C: return CaseId::S3b;
      case LambdaRange::D: break;
    }
    return CaseId::S4b;
  };
  switch (s.boundary()) {
    case Boundary::R3:
      c.id = CaseId::R3;
      c.r3_small_lambda = s.lambda() <= half;
      if (s.mu() == 1) c.ell = 0;
      return c;
    case Boundary::R1:
    case Boundary::R2:
      c.id = s.boundary() == Boundary::R1 ? CaseId::R1 : CaseId::R2;
      c.base = generic_id();
      return c;
    case Boundary::Generic:
      break;
  }
  c.id = generic_id();
  return c;
}

std::vector<long> expected_pi_ranks(const Shape& s, int maxdeg) {
  if (!s.generic()) throw std::invalid_argument("expected ranks are tabulated for generic shapes only");
  std::vector<long> r = loop_ranks_x2(maxdeg);
  std::vector<long> out(maxdeg + 1, 0);
  for (int n = 1; n <= maxdeg; ++n) out[n] = r[n];
  if (maxdeg >= 1) out[1] = s.mu() == 1 ? 5 : 6;
  if (s.mu() == 1) return out;
  const long l = s.ell();
  long at = 0, extra = 0;
  switch (s.range()) {
    case LambdaRange::A: at = 4 * l - 2, extra = 2; break;
    case LambdaRange::B: at = 4 * l - 2, extra = 1; break;
    case LambdaRange::C: at = 4 * l, extra = 2; break;
    case LambdaRange::D: at = 4 * l, extra = 1; break;
  }
  if (at <= maxdeg) out[at] += extra;
  return out;
}

}  // namespace x3top
