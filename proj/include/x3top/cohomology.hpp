#pragma once

#include "x3top/commpoly.hpp"
#include "x3top/homology.hpp"

#include <string>
#include <vector>

namespace x3top {

struct QuotientRing {
  std::string name;
  PolyRing ring;
  std::vector<CommPoly> gens;
};

// Q[X0,Y0,X1,Y1,Z,T], all weight 2.
const PolyRing& bg_ring();
// Variable of a ring by name, as a polynomial.
CommPoly var(const PolyRing& r, const std::string& name);

// <X0X1, Y0Y1, X0Y1, Y0Z, X1Z> in any ring containing those variables.
std::vector<CommPoly> ideal_I(const PolyRing& r = bg_ring());
CommPoly A_k(long k);  // k(X0+X1+k(Z+Y0)) + (k-1)(T+kY1)
CommPoly B_k(long k);  // k(X0+X1-k(Z+Y0)) + (k+1)(T-kY1)
// kase in 'a'..'d'; l >= 1.
std::vector<CommPoly> ideal_I_lambda_ell(char kase, long ell);
char case_letter(LambdaRange r);

QuotientRing bg_infinity_ring();
QuotientRing mu1_ring();
QuotientRing lambda_ring(char kase, long ell);
// kase 'a' (lambda <= 1/2) or 'b'; l = 0 gives Q[X0,Y0].
QuotientRing r3_ring(char kase, long ell);
// Ring attached to a shape: mu = 1, generic or R3 (R1/R2 throw).
QuotientRing ring_for_shape(const Shape& s);

// dims[d] for weighted degrees 0..maxdeg.
std::vector<long> hilbert(const QuotientRing& q, int maxdeg);
// Weighted degrees of a minimal homogeneous generating set of the ideal, ascending.
std::vector<int> minimal_relation_degrees(const QuotientRing& q, int maxdeg);

enum class PsiKind { Zero, Odd1, Odd2, Even1, Even2 };
const char* to_string(PsiKind k);
PsiKind parse_psi_kind(const std::string& s);
enum class PsiSource { Verbatim, Emended, Derived };

struct PsiComponent {
  std::string label;
  PolyRing ring;
  std::vector<CommPoly> images;  // image of X0, Y0, X1, Y1, Z, T
};

struct RingMap {
  std::string name;
  std::vector<PsiComponent> components;
  std::vector<CommPoly> apply(const CommPoly& p) const;  // p in bg_ring()
  bool kills(const CommPoly& p) const;
};

// k >= 1 for the indexed kinds (ignored for Zero).
RingMap psi_map(PsiKind kind, long k, PsiSource src = PsiSource::Emended);
std::vector<CommPoly> stated_kernel(PsiKind kind, long k);

struct TableMismatch {
  std::string variable, component, table, derived;
};
// Entries where the given table differs from the map derived from the identification table.
std::vector<TableMismatch> compare_with_derived(PsiKind kind, long k, PsiSource src);

struct KernelReport {
  bool ok = true;
  std::vector<std::string> failures;
  long deg2_kernel_dim = 0, deg2_stated_dim = 0;
  std::vector<int> degrees;  // weighted degrees checked
  std::vector<long> kernel_dims, ideal_dims;
  bool contained = true;  // stated ideal inside the kernel in every checked degree
};

KernelReport verify_kernel(const RingMap& map, const std::vector<CommPoly>& stated, int maxdeg = 10);

struct IdentityCheck {
  bool ok = false;
  CommPoly residual;  // lhs - rhs
};
// l*b1 + b2 == -l^2 c1 + l c2 + c3 with b = ker psi*_{2l,1}, c = ker psi*_{2l,2}.
IdentityCheck induction_identity_check(long ell);
IdentityCheck induction_identity_check(long ell, const CommPoly& c3_override);

std::vector<CommPoly> ideal_product(const std::vector<CommPoly>& a, const std::vector<CommPoly>& b);
// Minimal generators of (a) ∩ (b) through weighted degree maxdeg.
std::vector<CommPoly> ideal_intersection(const PolyRing& r, const std::vector<CommPoly>& a,
                                         const std::vector<CommPoly>& b, int maxdeg);
// Dimension of the ideal in each weighted degree 0..maxdeg.
std::vector<long> ideal_dims(const PolyRing& r, const std::vector<CommPoly>& gens, int maxdeg);

}  // namespace x3top
