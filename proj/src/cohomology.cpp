#include "x3top/cohomology.hpp"

#include "x3top/toric.hpp"

#include <array>
#include <stdexcept>

namespace x3top {

namespace {

const std::array<const char*, 6> kDomainNames = {"X0", "Y0", "X1", "Y1", "Z", "T"};

CommPoly V(const char* n) { return var(bg_ring(), n); }
CommPoly operator*(long k, const CommPoly& p) { return Rational(k) * p; }

CommPoly prod_AB(long upto) {
  CommPoly p = V("T");
  for (long k = 1; k <= upto; ++k) p = p * A_k(k) * B_k(k);
  return p;
}

void need_ell(long ell) {
  if (ell < 1) throw std::invalid_argument("l must be at least 1");
}

// Linear forms on one component; ring has two variables (x, y) or one (a).
struct Lin {
  long x = 0, y = 0;
};

PsiComponent component(const std::string& label, bool a_comp, const std::array<Lin, 6>& rows) {
  PsiComponent c;
  c.label = label;
  c.ring = a_comp ? PolyRing::even({"a"}) : PolyRing::even({"x", "y"});
  int nv = c.ring.size();
  for (const Lin& l : rows) {
    CommPoly p = Rational(l.x) * CommPoly::var(nv, 0);
    if (!a_comp) p += Rational(l.y) * CommPoly::var(nv, 1);
    c.images.push_back(p);
  }
  return c;
}

std::string comp_label(long n, int i) {
  if (i == 0) return "a_" + std::to_string(n);
  return "(x_{" + std::to_string(n) + "," + std::to_string(i) + "},y_{" + std::to_string(n) + "," +
         std::to_string(i) + "})";
}

long psi_n(PsiKind kind, long k) {
  switch (kind) {
    case PsiKind::Zero: return 0;
    case PsiKind::Odd1:
    case PsiKind::Odd2: return 2 * k - 1;
    case PsiKind::Even1:
    case PsiKind::Even2: return 2 * k;
  }
  return 0;
}

std::vector<int> psi_tori(PsiKind kind) {
  switch (kind) {
    case PsiKind::Zero: return {};
    case PsiKind::Odd1:
    case PsiKind::Even1: return {1, 4, 5, 0};
    case PsiKind::Odd2:
    case PsiKind::Even2: return {2, 3};
  }
  return {};
}

// Rows X0..T, columns per torus in psi_tori order.
std::vector<std::array<Lin, 6>> table_columns(PsiKind kind, long k, bool emended) {
  const long K = k;
  switch (kind) {
    case PsiKind::Odd1:
      return {
          {Lin{-K, K}, Lin{1, -1}, Lin{0, 1 - K}, Lin{}, Lin{}, Lin{0, K}},
          {Lin{}, Lin{}, Lin{0, -K}, Lin{K, -(K + 1)}, Lin{1 - K, K}, Lin{0, K}},
          {Lin{}, Lin{}, Lin{1 - K, 0}, Lin{1, -1}, Lin{}, Lin{0, K}},
          {Lin{}, Lin{}, Lin{-K * K}, Lin{}, Lin{1}, Lin{K * K}},
      };
    case PsiKind::Odd2:
      return {
          {Lin{0, 1}, Lin{1, -1}, Lin{-K, 0}, Lin{}, Lin{}, Lin{0, K}},
          {Lin{-K, K + 1}, Lin{}, Lin{0, -K}, Lin{}, Lin{1, -1}, Lin{0, K}},
      };
    case PsiKind::Even1:
      return {
          {Lin{-1, 0}, Lin{0, 1}, Lin{-K, K}, Lin{}, Lin{}, Lin{K, 0}},
          {Lin{}, Lin{}, Lin{-K, 0}, Lin{1, -K}, Lin{-1, K + 1}, Lin{K, 0}},
          // printed -k x + k y; the identification table gives -x + k y
          {emended ? Lin{-1, K} : Lin{-K, K}, Lin{}, Lin{-K, 0}, Lin{}, Lin{0, 1}, Lin{K, 0}},
          {Lin{}, Lin{}, Lin{-K * (K + 1)}, Lin{1}, Lin{}, Lin{K * (K + 1)}},
      };
    case PsiKind::Even2:
      return {
          {Lin{0, K}, Lin{0, 1}, Lin{-(K + 1), 0}, Lin{}, Lin{}, Lin{K, 0}},
          {Lin{}, Lin{}, Lin{-(K + 1), K + 1}, Lin{0, 1}, Lin{}, Lin{K, 0}},
      };
    case PsiKind::Zero: break;
  }
  return {};
}

std::vector<std::array<Lin, 6>> derived_columns(PsiKind kind, long k) {
  long n = psi_n(kind, k);
  std::vector<std::array<Lin, 6>> out;
  for (int i : psi_tori(kind)) {
    std::array<Lin, 6> col{};
    if (i == 0) {
      GeneratorExpr a = ident_lookup(n, 0, 'a');
      for (int g = 0; g < 6; ++g) col[g] = Lin{a.c[g], 0};
    } else {
      GeneratorExpr x = ident_lookup(n, i, 'x'), y = ident_lookup(n, i, 'y');
      for (int g = 0; g < 6; ++g) col[g] = Lin{x.c[g], y.c[g]};
    }
    out.push_back(col);
  }
  return out;
}

void check_k(PsiKind kind, long k) {
  if (kind != PsiKind::Zero && k < 1) throw std::invalid_argument("k must be at least 1");
}

CommPoly substitute(const CommPoly& p, const std::vector<CommPoly>& images, int nv) {
  CommPoly out;
  for (const auto& [e, c] : p.terms()) {
    CommPoly t = CommPoly::constant(nv, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * pow(images.at(i), e[i]);
    out += t;
  }
  return out;
}

std::string lin_string(const Lin& l, bool a_comp) {
  PolyRing r = a_comp ? PolyRing::even({"a"}) : PolyRing::even({"x", "y"});
  CommPoly p = Rational(l.x) * CommPoly::var(r.size(), 0);
  if (!a_comp) p += Rational(l.y) * CommPoly::var(r.size(), 1);
  return p.to_string(r);
}

}  // namespace

const PolyRing& bg_ring() {
  static const PolyRing r = PolyRing::even({kDomainNames.begin(), kDomainNames.end()});
  return r;
}

CommPoly var(const PolyRing& r, const std::string& name) { return CommPoly::var(r.size(), r.index(name)); }

std::vector<CommPoly> ideal_I(const PolyRing& r) {
  auto v = [&](const char* n) { return var(r, n); };
  return {v("X0") * v("X1"), v("Y0") * v("Y1"), v("X0") * v("Y1"), v("Y0") * v("Z"), v("X1") * v("Z")};
}

CommPoly A_k(long k) {
  return k * (V("X0") + V("X1") + k * (V("Z") + V("Y0"))) + (k - 1) * (V("T") + k * V("Y1"));
}

CommPoly B_k(long k) {
  return k * (V("X0") + V("X1") - k * (V("Z") + V("Y0"))) + (k + 1) * (V("T") - k * V("Y1"));
}

char case_letter(LambdaRange r) {
  switch (r) {
    case LambdaRange::A: return 'a';
    case LambdaRange::B: return 'b';
    case LambdaRange::C: return 'c';
    case LambdaRange::D: return 'd';
  }
  return '?';
}

std::vector<CommPoly> ideal_I_lambda_ell(char kase, long l) {
  need_ell(l);
  CommPoly P = prod_AB(l - 1);
  CommPoly X0 = V("X0"), Y0 = V("Y0"), X1 = V("X1"), Y1 = V("Y1"), Z = V("Z"), T = V("T");
  switch (kase) {
    case 'a': return {P * (X0 + l * Y0), P * ((l - 1) * (T + l * Y1) + l * (X1 + l * Z))};
    case 'b': return {P * A_k(l)};
    case 'c': {
      CommPoly PA = P * A_k(l);
      return {PA * (X1 + T - l * Y0), PA * (l * X0 - (l * (l + 1)) * Y1 - (l * l) * Z + T)};
    }
    case 'd': return {prod_AB(l)};
  }
  throw std::invalid_argument(std::string("unknown case letter ") + kase);
}

QuotientRing bg_infinity_ring() { return {"BG_inf", bg_ring(), ideal_I()}; }

QuotientRing mu1_ring() {
  PolyRing r = PolyRing::even({"X0", "Y0", "X1", "Y1", "Z"});
  return {"mu=1", r, ideal_I(r)};
}

QuotientRing lambda_ring(char kase, long ell) {
  std::vector<CommPoly> g = ideal_I();
  for (auto& p : ideal_I_lambda_ell(kase, ell)) g.push_back(p);
  return {std::string("generic(") + kase + ",l=" + std::to_string(ell) + ")", bg_ring(), g};
}

QuotientRing r3_ring(char kase, long l) {
  if (l == 0) return {"R3(mu=1)", PolyRing::even({"X0", "Y0"}), {}};
  need_ell(l);
  if (kase != 'a' && kase != 'b') throw std::invalid_argument("R3 case must be a or b");
  PolyRing r = PolyRing::even({"X0", "Y0", "X1", "T"});
  auto v = [&](const char* n) { return var(r, n); };
  CommPoly X0 = v("X0"), Y0 = v("Y0"), X1 = v("X1"), T = v("T");
  auto A = [&](long k) { return k * (X0 + X1 + k * Y0) + (k - 1) * T; };
  auto B = [&](long k) { return k * (X0 + X1 - k * Y0) + (k + 1) * T; };
  CommPoly P = T;
  for (long k = 1; k < l; ++k) P = P * A(k) * B(k);
  std::vector<CommPoly> g = {X0 * X1};
  if (kase == 'a') {
    g.push_back(P * (X0 + l * Y0));
    g.push_back(P * ((l - 1) * T + l * X1));
  } else {
    CommPoly PA = P * A(l);
    g.push_back(PA * (X1 + T - l * Y0));
    g.push_back(PA * (l * X0 + T));
  }
  return {std::string("R3(") + kase + ",l=" + std::to_string(l) + ")", r, g};
}

QuotientRing ring_for_shape(const Shape& s) {
  switch (s.boundary()) {
    case Boundary::R3:
      if (s.mu() == 1) return r3_ring('a', 0);
      return r3_ring(s.lambda() <= Rational(1, 2) ? 'a' : 'b', s.ell());
    case Boundary::R1:
    case Boundary::R2: throw std::invalid_argument("no cohomology ring is tabulated on R1/R2");
    case Boundary::Generic: break;
  }
  if (s.mu() == 1) return mu1_ring();
  return lambda_ring(case_letter(s.range()), s.ell());
}

std::vector<long> hilbert(const QuotientRing& q, int maxdeg) {
  return graded_dim_quotient_comm(q.ring, q.gens, maxdeg);
}

std::vector<int> minimal_relation_degrees(const QuotientRing& q, int maxdeg) {
  std::vector<int> out;
  for (int d = 1; d <= maxdeg; ++d) {
    std::vector<CommPoly> lower, here;
    for (const auto& g : q.gens) {
      int gd = g.homogeneous_degree(q.ring);
      if (gd < 0) continue;
      if (gd < d) lower.push_back(g);
      else if (gd == d) here.push_back(g);
    }
    if (here.empty()) continue;
    DegreePiece piece(q.ring, d);
    SparseEchelon ech = ideal_piece(q.ring, lower, piece);
    for (const auto& g : here)
      if (ech.insert(piece.to_vec(g))) out.push_back(d);
  }
  return out;
}

const char* to_string(PsiKind k) {
  switch (k) {
    case PsiKind::Zero: return "zero";
    case PsiKind::Odd1: return "odd1";
    case PsiKind::Odd2: return "odd2";
    case PsiKind::Even1: return "even1";
    case PsiKind::Even2: return "even2";
  }
  return "?";
}

PsiKind parse_psi_kind(const std::string& s) {
  for (PsiKind k : {PsiKind::Zero, PsiKind::Odd1, PsiKind::Odd2, PsiKind::Even1, PsiKind::Even2})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown psi kind " + s);
}

std::vector<CommPoly> RingMap::apply(const CommPoly& p) const {
  std::vector<CommPoly> out;
  for (const auto& c : components) out.push_back(substitute(p, c.images, c.ring.size()));
  return out;
}

bool RingMap::kills(const CommPoly& p) const {
  for (const auto& img : apply(p))
    if (!img.is_zero()) return false;
  return true;
}

RingMap psi_map(PsiKind kind, long k, PsiSource src) {
  check_k(kind, k);
  RingMap m;
  if (kind == PsiKind::Zero) {
    m.name = "psi*_0";
    PsiComponent c;
    c.label = "(x0,y0,x1,y1,z)";
    c.ring = PolyRing::even({"x0", "y0", "x1", "y1", "z"});
    for (int i = 0; i < 5; ++i) c.images.push_back(CommPoly::var(5, i));
    c.images.push_back(CommPoly());
    m.components.push_back(c);
    return m;
  }
  long n = psi_n(kind, k);
  int j = kind == PsiKind::Odd1 || kind == PsiKind::Even1 ? 1 : 2;
  m.name = "psi*_{" + std::to_string(n) + "," + std::to_string(j) + "}";
  auto cols = src == PsiSource::Derived ? derived_columns(kind, k)
                                        : table_columns(kind, k, src == PsiSource::Emended);
  auto tori = psi_tori(kind);
  for (size_t c = 0; c < tori.size(); ++c)
    m.components.push_back(component(comp_label(n, tori[c]), tori[c] == 0, cols[c]));
  return m;
}

std::vector<CommPoly> stated_kernel(PsiKind kind, long k) {
  check_k(kind, k);
  CommPoly X0 = V("X0"), Y0 = V("Y0"), X1 = V("X1"), Y1 = V("Y1"), Z = V("Z"), T = V("T");
  switch (kind) {
    case PsiKind::Zero: return {T};
    case PsiKind::Odd1: return {X0 + k * Y0, k * (X1 + k * Z) + (k - 1) * (T + k * Y1)};
    case PsiKind::Odd2: return {Y1, k * Y0 + X1 + T, k * X0 + (k * k) * Z - T};
    case PsiKind::Even1: return {-k * Y0 + X1 + T, k * X0 - (k * (k + 1)) * Y1 - (k * k) * Z + T};
    case PsiKind::Even2: return {Z, X0 - k * Y0, k * X1 + (k + 1) * T - (k * (k + 1)) * Y1};
  }
  return {};
}

std::vector<TableMismatch> compare_with_derived(PsiKind kind, long k, PsiSource src) {
  check_k(kind, k);
  std::vector<TableMismatch> out;
  if (kind == PsiKind::Zero) return out;
  auto table = src == PsiSource::Derived ? derived_columns(kind, k)
                                         : table_columns(kind, k, src == PsiSource::Emended);
  auto derived = derived_columns(kind, k);
  auto tori = psi_tori(kind);
  long n = psi_n(kind, k);
  for (size_t c = 0; c < tori.size(); ++c)
    for (int g = 0; g < 6; ++g) {
      const Lin &a = table[c][g], &b = derived[c][g];
      if (a.x != b.x || a.y != b.y)
        out.push_back({kDomainNames[g], comp_label(n, tori[c]), lin_string(a, tori[c] == 0),
                       lin_string(b, tori[c] == 0)});
    }
  return out;
}

KernelReport verify_kernel(const RingMap& map, const std::vector<CommPoly>& stated, int maxdeg) {
  KernelReport rep;
  const PolyRing& R = bg_ring();
  for (const auto& g : stated)
    if (!map.kills(g)) {
      rep.ok = false;
      rep.failures.push_back("not killed: " + g.to_string(R));
    }
  for (int d = 2; d <= maxdeg; d += 2) {
    DegreePiece dom(R, d);
    std::vector<DegreePiece> cod;
    std::vector<int> offset;
    int total = 0;
    for (const auto& c : map.components) {
      cod.emplace_back(c.ring, d);
      offset.push_back(total);
      total += cod.back().size();
    }
    // kernel dimension = size - rank of the image matrix
    SparseEchelon img;
    for (int i = 0; i < dom.size(); ++i) {
      auto parts = map.apply(CommPoly::monomial(dom.monomial(i)));
      std::map<int, Rational> row;
      for (size_t c = 0; c < parts.size(); ++c)
        for (const auto& [j, v] : cod[c].to_vec(parts[c])) row[offset[c] + j] += v;
      img.insert(sparse_from_map(row));
    }
    long kdim = dom.size() - img.rank();
    SparseEchelon id = ideal_piece(R, stated, dom);
    long idim = id.rank();
    rep.degrees.push_back(d);
    rep.kernel_dims.push_back(kdim);
    rep.ideal_dims.push_back(idim);
    if (idim > kdim) rep.contained = false;
    if (d == 2) {
      rep.deg2_kernel_dim = kdim;
      rep.deg2_stated_dim = idim;
      if (kdim != idim) {
        rep.ok = false;
        rep.failures.push_back("degree-2 kernel has dimension " + std::to_string(kdim) + ", stated span " +
                               std::to_string(idim));
      }
    }
  }
  if (!rep.contained) {
    rep.ok = false;
    rep.failures.push_back("stated ideal exceeds the kernel");
  }
  return rep;
}

IdentityCheck induction_identity_check(long ell) { return induction_identity_check(ell, stated_kernel(PsiKind::Even2, ell).at(2)); }

IdentityCheck induction_identity_check(long ell, const CommPoly& c3) {
  need_ell(ell);
  auto b = stated_kernel(PsiKind::Even1, ell);
  auto c = stated_kernel(PsiKind::Even2, ell);
  CommPoly lhs = ell * b[0] + b[1];
  CommPoly rhs = -(ell * ell) * c[0] + ell * c[1] + c3;
  IdentityCheck r;
  r.residual = lhs - rhs;
  r.ok = r.residual.is_zero();
  return r;
}

std::vector<CommPoly> ideal_product(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b) {
  std::vector<CommPoly> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      CommPoly p = x * y;
      if (!p.is_zero()) out.push_back(p);
    }
  return out;
}

std::vector<CommPoly> ideal_intersection(const PolyRing& r, const std::vector<CommPoly>& a,
                                         const std::vector<CommPoly>& b, int maxdeg) {
  std::vector<CommPoly> gens;
  for (int d = 1; d <= maxdeg; ++d) {
    DegreePiece piece(r, d);
    const int N = piece.size();
    if (N == 0) continue;
    SparseEchelon ea = ideal_piece(r, a, piece), eb = ideal_piece(r, b, piece);
    // Zassenhaus: rows (u,u) for u in A_d and (v,0) for v in B_d.
    SparseEchelon z;
    for (const auto& [p, row] : ea.rows()) {
      SparseVec v = row;
      for (const auto& [j, c] : row) v.emplace_back(N + j, c);
      z.insert(v);
    }
    for (const auto& [p, row] : eb.rows()) z.insert(row);
    SparseEchelon have = ideal_piece(r, gens, piece);
    for (const auto& [p, row] : z.rows()) {
      if (p < N) continue;
      SparseVec v;
      for (const auto& [j, c] : row) v.emplace_back(j - N, c);
      if (have.insert(v)) gens.push_back(piece.from_vec(v));
    }
  }
  return gens;
}

std::vector<long> ideal_dims(const PolyRing& r, const std::vector<CommPoly>& gens, int maxdeg) {
  std::vector<long> out;
  for (int d = 0; d <= maxdeg; ++d) out.push_back(ideal_piece(r, gens, DegreePiece(r, d)).rank());
  return out;
}

}  // namespace x3top
