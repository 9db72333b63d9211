#include "x3top/cohomology.hpp"
#include "x3top/homology.hpp"
#include "x3top/inflation.hpp"
#include "x3top/lie.hpp"
#include "x3top/series.hpp"
#include "x3top/toric.hpp"
#include "x3top/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace x3top;
using json = nlohmann::ordered_json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string q(const Rational& r) { return to_string(r); }

json to_json(const HClass& a) { return {{"p", a.p}, {"q", a.q}, {"r1", a.r1}, {"r2", a.r2}}; }

json to_json(const Shape& s) {
  return {{"mu", q(s.mu())}, {"c1", q(s.c1())}, {"c2", q(s.c2())}, {"ell", s.ell()}, {"lambda", q(s.lambda())},
          {"range", to_string(s.range())}, {"boundary", to_string(s.boundary())}};
}

json to_json(const FormClass& f) { return {{"B", q(f.B)}, {"F", q(f.F)}, {"E1", q(f.E1)}, {"E2", q(f.E2)}}; }

json to_json(const KarshonGraph& g) {
  json fat = json::array(), iso = json::array(), zk = json::array();
  for (const auto& v : g.fat) fat.push_back({{"value", q(v.value)}, {"area", q(v.area)}, {"genus", v.genus}});
  for (const auto& p : g.isolated)
    iso.push_back({{"value", q(p.value)}, {"weights", {p.weights.first, p.weights.second}}});
  for (const auto& e : g.zk) zk.push_back({{"lo", q(e.lo)}, {"hi", q(e.hi)}, {"k", e.k}});
  return {{"fat", fat}, {"isolated", iso}, {"zk", zk}};
}

struct ShapeFlags {
  std::string mu, c1, c2;
  void add(CLI::App* app, bool required = true) {
    app->add_option("--mu", mu, "mu as p/q")->required(required);
    app->add_option("--c1", c1, "c1 as p/q")->required(required);
    app->add_option("--c2", c2, "c2 as p/q")->required(required);
  }
  bool given() const { return !mu.empty() || !c1.empty() || !c2.empty(); }
  Shape get() const {
    if (mu.empty() || c1.empty() || c2.empty()) throw UsageError("--mu, --c1 and --c2 go together");
    return Shape::make(parse_rational(mu), parse_rational(c1), parse_rational(c2));
  }
};

struct Output {
  std::string format = "json";
  void add(CLI::App* app) {
    app->add_option("--format", format, "json, pretty or csv")->check(CLI::IsMember({"json", "pretty", "csv"}));
  }
  // csv: table of (key, columns...) rows; nullptr means csv is not offered.
  void emit(const json& j, const std::vector<std::vector<std::string>>* csv = nullptr) const {
    if (format == "csv") {
      if (!csv) throw UsageError("this command has no csv output");
      for (const auto& row : *csv) {
        for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
      }
      return;
    }
    std::cout << (format == "pretty" ? j.dump(2) : j.dump()) << "\n";
  }
};

std::vector<std::vector<std::string>> degree_table(const std::string& head, const std::vector<long>& v,
                                                   size_t from = 0) {
  std::vector<std::vector<std::string>> rows = {{"degree", head}};
  for (size_t i = from; i < v.size(); ++i) rows.push_back({std::to_string(i), std::to_string(v[i])});
  return rows;
}

QuotientRing ring_by_name(const std::string& name, long ell) {
  if (name == "mu1") return mu1_ring();
  if (name == "bginf") return bg_infinity_ring();
  if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'd') {
    if (ell < 1) throw UsageError("--ell must be >= 1 for cases a..d");
    return lambda_ring(name[0], ell);
  }
  if (name == "r3a" || name == "r3b") {
    if (ell < 0) throw UsageError("--ell must be >= 0");
    return r3_ring(name[2], ell);
  }
  throw UsageError("unknown ring " + name);
}

PsiSource parse_source(const std::string& s) {
  if (s == "verbatim") return PsiSource::Verbatim;
  if (s == "emended") return PsiSource::Emended;
  if (s == "derived") return PsiSource::Derived;
  throw UsageError("unknown source " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"x3top: exact checks for symplectomorphism groups of the 3-point blow-up of CP2"};
  app.require_subcommand(1);
  Output out;
  int rc = kPass;

  // strata
  ShapeFlags sf_strata;
  auto* strata = app.add_subcommand("strata", "negative strata D_{-m} with positive area");
  sf_strata.add(strata);
  out.add(strata);
  strata->callback([&] {
    Shape s = sf_strata.get();
    auto st = enumerate_d_strata(s);
    json cls = json::array();
    std::vector<std::vector<std::string>> rows = {{"m", "class", "area"}};
    for (const auto& d : st) {
      cls.push_back({{"m", d.m}, {"class", to_json(d.cls)}, {"name", d.cls.to_string()}, {"area", q(area(s, d.cls))}});
      rows.push_back({std::to_string(d.m), d.cls.to_string(), q(area(s, d.cls))});
    }
    json j = {{"shape", to_json(s)}, {"N", st.size()}, {"classes", cls}};
    if (s.generic()) {
      j["strata_count"] = strata_count(s);
      j["ok"] = long(st.size()) == strata_count(s);
      if (!j["ok"].get<bool>()) rc = kFail;
    }
    out.emit(j, &rows);
  });

  // configs
  ShapeFlags sf_configs;
  auto* configs = app.add_subcommand("configs", "configurations of negative spheres");
  sf_configs.add(configs);
  out.add(configs);
  configs->callback([&] {
    Shape s = sf_configs.get();
    json arr = json::array();
    for (const auto& c : enumerate_configurations(s)) {
      json mem = json::array();
      for (const auto& a : c.member_classes) mem.push_back(a.to_string());
      auto t = torus_of(c.type_id, c.m);
      std::string err = validate_config(c);
      if (!err.empty()) rc = kFail;
      arr.push_back({{"type", c.type_id},
                     {"m", c.m},
                     {"defining", d_class(defining_d_index(c.type_id, c.m)).to_string()},
                     {"members", mem},
                     {"isometry", to_string(isometry_type(c))},
                     {"torus", t ? json{{"i", t->i}, {"n", t->n}} : json(nullptr)},
                     {"valid", err.empty()}});
    }
    out.emit({{"shape", to_json(s)}, {"count", arr.size()}, {"configurations", arr}});
  });

  // polygon
  ShapeFlags sf_poly;
  int poly_i = 1;
  long poly_n = 0;
  bool poly_delta0 = false;
  auto* polygon = app.add_subcommand("polygon", "toric polygon T_i(n) or Delta_0");
  sf_poly.add(polygon);
  polygon->add_option("--i", poly_i, "torus index 1..5")->check(CLI::Range(1, 5));
  polygon->add_option("--n", poly_n, "n >= 0")->check(CLI::NonNegativeNumber);
  polygon->add_flag("--delta0", poly_delta0, "the chopped rectangle instead of T_i(n)");
  out.add(polygon);
  polygon->callback([&] {
    Shape s = sf_poly.get();
    LatticePolygon p = poly_delta0 ? delta0_polygon(s) : t_polygon(poly_i, poly_n, s);
    json verts = json::array(), lens = json::array();
    for (const auto& v : p.vertices()) verts.push_back({q(v(0)), q(v(1))});
    for (const auto& l : p.edge_lengths()) lens.push_back(q(l));
    json j = {{"shape", to_json(s)}, {"vertices", verts}, {"edge_lengths", lens}, {"delzant", p.is_delzant()}};
    if (!p.is_delzant()) rc = kFail;
    if (!poly_delta0) {
      json cyc = json::array();
      auto len = p.edge_lengths();
      std::vector<Rational> areas;
      for (const auto& h : boundary_cycle(poly_i, poly_n)) {
        cyc.push_back({{"class", h.to_string()}, {"area", q(area(s, h))}});
        areas.push_back(area(s, h));
      }
      std::sort(len.begin(), len.end());
      std::sort(areas.begin(), areas.end());
      j["boundary_classes"] = cyc;
      j["lengths_match_areas"] = len == areas;
      if (len != areas) rc = kFail;
    }
    out.emit(j);
  });

  // karshon
  ShapeFlags sf_k;
  int k_i = 1;
  long k_n = 0;
  std::vector<long> k_xi = {1, 0};
  bool k_a = false;
  auto* karshon = app.add_subcommand("karshon", "Karshon graph of a circle action");
  sf_k.add(karshon);
  karshon->add_option("--i", k_i, "torus index 1..5")->check(CLI::Range(1, 5));
  karshon->add_option("--n", k_n, "n >= 0")->check(CLI::NonNegativeNumber);
  karshon->add_option("--xi", k_xi, "circle weight a b")->expected(2);
  karshon->add_flag("--a-action", k_a, "the action a_n instead of a torus circle");
  out.add(karshon);
  karshon->callback([&] {
    Shape s = sf_k.get();
    Circle c = k_a ? Circle::a_action(k_n) : Circle::torus(k_i, k_n, k_xi[0], k_xi[1]);
    out.emit({{"shape", to_json(s)},
              {"circle", c.to_string()},
              {"generator", circle_expr(c).to_string()},
              {"graph", to_json(circle_graph(c, s))}});
  });

  // relations
  ShapeFlags sf_rel;
  long rel_K = 2;
  auto* relations = app.add_subcommand("relations", "circle identifications checked by Karshon graphs");
  sf_rel.add(relations);
  relations->add_option("--K", rel_K, "index bound")->check(CLI::Range(1, 6));
  out.add(relations);
  relations->callback([&] {
    Shape s = sf_rel.get();
    json arr = json::array();
    int ok = 0, bad = 0, skipped = 0;
    for (const auto& r : circle_relations(rel_K)) {
      auto c = verify_relation(r.lhs, r.rhs, s);
      if (!c.admissible)
        ++skipped;
      else if (c.ok)
        ++ok;
      else
        ++bad;
      arr.push_back({{"name", r.name},
                     {"lhs", r.lhs.to_string()},
                     {"rhs", r.rhs.to_string()},
                     {"admissible", c.admissible},
                     {"ok", c.ok},
                     {"detail", c.detail}});
    }
    if (bad) rc = kFail;
    out.emit({{"shape", to_json(s)}, {"verified", ok}, {"failed", bad}, {"not_admissible", skipped}, {"relations", arr}});
  });

  // pi-ranks
  std::string pr_case = "MU1", pr_base = "S4b";
  long pr_ell = -1;
  int pr_max = 6;
  bool pr_big = false;
  auto* piranks = app.add_subcommand("pi-ranks", "ranks of rational homotopy from a Lie presentation");
  piranks->add_option("--case", pr_case, "MU1, S1, S2, S3a, S3b, S4a, S4b, R1, R2, R3, GINF");
  piranks->add_option("--ell", pr_ell, "integer part l (default 0 for MU1/GINF, 1 otherwise)");
  piranks->add_option("--base", pr_base, "generic case restricted by R1/R2");
  piranks->add_flag("--large-lambda", pr_big, "R3 with lambda > 1/2");
  piranks->add_option("--maxdeg", pr_max, "top degree")->check(CLI::Range(1, kPiRanksMaxDeg));
  out.add(piranks);
  piranks->callback([&] {
    LieCase c;
    c.id = parse_case_id(pr_case);
    c.ell = pr_ell >= 0 ? pr_ell : (c.id == CaseId::MU1 || c.id == CaseId::GINF ? 0 : 1);
    if (c.id == CaseId::R1 || c.id == CaseId::R2) c.base = parse_case_id(pr_base);
    c.r3_small_lambda = !pr_big;
    auto r = pi_ranks(c, pr_max);
    std::vector<long> ranks(r.begin() + 1, r.end());
    auto rows = degree_table("rank", r, 1);
    out.emit({{"case", to_string(c.id)}, {"label", c.to_string()}, {"ell", c.ell}, {"ranks", ranks}}, &rows);
  });

  // expected-ranks
  ShapeFlags sf_er;
  int er_max = 6;
  auto* expected = app.add_subcommand("expected-ranks", "rank table attached to a shape");
  sf_er.add(expected);
  expected->add_option("--maxdeg", er_max, "top degree")->check(CLI::Range(1, 12));
  out.add(expected);
  expected->callback([&] {
    Shape s = sf_er.get();
    auto r = expected_pi_ranks(s, er_max);
    std::vector<long> ranks(r.begin() + 1, r.end());
    auto rows = degree_table("rank", r, 1);
    out.emit({{"shape", to_json(s)}, {"case", case_for_shape(s).to_string()}, {"ranks", ranks}}, &rows);
  });

  // hilbert, relation-degrees
  std::string h_ring;
  long h_ell = 1;
  int h_max = 12;
  bool h_cmp = false;
  ShapeFlags sf_h;
  auto* hil = app.add_subcommand("hilbert", "Hilbert function of a cohomology ring");
  hil->add_option("--ring", h_ring, "mu1, bginf, a, b, c, d, r3a, r3b");
  hil->add_option("--ell", h_ell, "integer part l");
  hil->add_option("--maxdeg", h_max, "top weighted degree")->check(CLI::Range(0, 30));
  hil->add_flag("--compare-bginf", h_cmp, "fail unless dims stay below the BG-infinity ring");
  sf_h.add(hil, false);
  out.add(hil);
  auto pick_ring = [&](const ShapeFlags& sf, const std::string& name, long ell) {
    if (sf.given() == !name.empty()) throw UsageError("give either --ring or a shape");
    return sf.given() ? ring_for_shape(sf.get()) : ring_by_name(name, ell);
  };
  hil->callback([&] {
    auto ring = pick_ring(sf_h, h_ring, h_ell);
    auto dims = hilbert(ring, h_max);
    json j = {{"ring", ring.name}, {"dims", dims}};
    auto rows = degree_table("dim", dims);
    if (h_cmp) {
      auto inf = hilbert(bg_infinity_ring(), h_max);
      bool ok = true;
      for (int d = 0; d <= h_max; ++d) ok = ok && dims[d] <= inf[d];
      j["bginf_dims"] = inf;
      j["below_bginf"] = ok;
      if (!ok) rc = kFail;
    }
    out.emit(j, &rows);
  });

  std::string rd_ring;
  long rd_ell = 1;
  int rd_max = 12;
  ShapeFlags sf_rd;
  auto* reldeg = app.add_subcommand("relation-degrees", "degrees of a minimal relation set");
  reldeg->add_option("--ring", rd_ring, "mu1, bginf, a, b, c, d, r3a, r3b");
  reldeg->add_option("--ell", rd_ell, "integer part l");
  reldeg->add_option("--maxdeg", rd_max, "top weighted degree")->check(CLI::Range(0, 30));
  sf_rd.add(reldeg, false);
  out.add(reldeg);
  reldeg->callback([&] {
    auto ring = pick_ring(sf_rd, rd_ring, rd_ell);
    auto deg = minimal_relation_degrees(ring, rd_max);
    std::vector<std::vector<std::string>> rows = {{"degree"}};
    for (int d : deg) rows.push_back({std::to_string(d)});
    json gens = json::array();
    for (const auto& g : ring.gens) gens.push_back(g.to_string(ring.ring));
    out.emit({{"ring", ring.name}, {"degrees", deg}, {"generators", gens}}, &rows);
  });

  // kernel
  std::string kn_kind = "odd1", kn_src = "emended";
  long kn_k = 1;
  int kn_max = 10;
  auto* kernel = app.add_subcommand("kernel", "kernel of psi* against the stated ideal");
  kernel->add_option("--kind", kn_kind, "zero, odd1, odd2, even1, even2");
  kernel->add_option("--k", kn_k, "index k >= 1")->check(CLI::PositiveNumber);
  kernel->add_option("--source", kn_src, "verbatim, emended or derived table")
      ->check(CLI::IsMember({"verbatim", "emended", "derived"}));
  kernel->add_option("--maxdeg", kn_max, "top weighted degree")->check(CLI::Range(2, 16));
  out.add(kernel);
  kernel->callback([&] {
    PsiKind kind = parse_psi_kind(kn_kind);
    PsiSource src = parse_source(kn_src);
    auto rep = verify_kernel(psi_map(kind, kn_k, src), stated_kernel(kind, kn_k), kn_max);
    json mism = json::array();
    for (const auto& m : compare_with_derived(kind, kn_k, src))
      mism.push_back({{"variable", m.variable}, {"component", m.component}, {"table", m.table}, {"derived", m.derived}});
    std::vector<std::vector<std::string>> rows = {{"degree", "kernel", "ideal"}};
    for (size_t i = 0; i < rep.degrees.size(); ++i)
      rows.push_back({std::to_string(rep.degrees[i]), std::to_string(rep.kernel_dims[i]),
                      std::to_string(rep.ideal_dims[i])});
    if (!rep.ok) rc = kFail;
    out.emit({{"kind", to_string(kind)},
              {"k", kn_k},
              {"source", kn_src},
              {"ok", rep.ok},
              {"failures", rep.failures},
              {"deg2_kernel_dim", rep.deg2_kernel_dim},
              {"deg2_stated_dim", rep.deg2_stated_dim},
              {"degrees", rep.degrees},
              {"kernel_dims", rep.kernel_dims},
              {"ideal_dims", rep.ideal_dims},
              {"contained", rep.contained},
              {"table_vs_derived", mism}},
             &rows);
  });

  // induction-identity
  long ii_ell = 1;
  auto* induct = app.add_subcommand("induction-identity", "l b1 + b2 = -l^2 c1 + l c2 + c3");
  induct->add_option("--ell", ii_ell, "l >= 1")->check(CLI::PositiveNumber);
  out.add(induct);
  induct->callback([&] {
    auto r = induction_identity_check(ii_ell);
    if (!r.ok) rc = kFail;
    out.emit({{"ell", ii_ell}, {"ok", r.ok}, {"residual", r.residual.to_string(bg_ring())}});
  });

  // inflate-check
  ShapeFlags sf_inf;
  int inf_t = 3, inf_c = 1;
  std::string inf_b;
  bool inf_verbatim = false, inf_nohdr = false;
  auto* inflate = app.add_subcommand("inflate-check", "run an inflation table script");
  inflate->add_option("--table", inf_t, "3..15")->required()->check(CLI::Range(3, 15));
  inflate->add_option("--column", inf_c, "1 or 2")->required()->check(CLI::Range(1, 2));
  sf_inf.add(inflate);
  inflate->add_option("--b", inf_b, "b >= 0 as p/q")->required();
  inflate->add_flag("--verbatim", inf_verbatim, "use the printed formulas without emendation");
  inflate->add_flag("--ignore-header", inf_nohdr, "run even when the shape misses the column's lambda range");
  out.add(inflate);
  inflate->callback([&] {
    Shape s = sf_inf.get();
    Rational b = parse_rational(inf_b);
    auto rep = run_table(inf_t, inf_c, s, b, !inf_verbatim, !inf_nohdr);
    const auto& col = table_column(inf_t, inf_c);
    json steps = json::array();
    for (const auto& st : rep.steps) steps.push_back({{"step", st.label}, {"areas", to_json(st.areas)}});
    if (!rep.ok) rc = kFail;
    json cap = nullptr, limit = nullptr;
    // both need the header
    if (column_precondition(col, s).empty()) {
      if (auto c = derived_cap(col, s, !inf_verbatim)) cap = q(*c);
      auto lim = limit_check(inf_t, inf_c, s, !inf_verbatim);
      limit = {{"ok", lim.ok},
               {"target", q(lim.target)},
               {"value", lim.value ? json(q(*lim.value)) : json(nullptr)},
               {"final_area", lim.final_area.to_string()}};
    }
    out.emit({{"table", inf_t},
              {"column", inf_c},
              {"header", col.header},
              {"shape", to_json(s)},
              {"b", q(b)},
              {"ok", rep.ok},
              {"rejected", rep.rejected},
              {"failures", rep.failures},
              {"a", q(rep.a)},
              {"e", q(rep.e)},
              {"steps", steps},
              {"final", to_json(rep.final_areas)},
              {"b_cap", cap},
              {"limit", limit}});
  });

  // verify-all
  bool va_quick = false;
  auto* verify = app.add_subcommand("verify-all", "the acceptance suite");
  verify->add_flag("--quick", va_quick, "fewer random samples");
  out.add(verify);
  verify->callback([&] {
    json arr = json::array();
    for (const auto& r : run_acceptance(va_quick)) {
      if (!r.pass && !r.known_failure) rc = kFail;
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"known_failure", r.known_failure},
                     {"budget_seconds", r.budget},
                     {"details", r.details}});
    }
    out.emit({{"quick", va_quick}, {"criteria", arr}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kFail;
  }
  return rc;
}
