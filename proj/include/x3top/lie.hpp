#pragma once

#include "x3top/homology.hpp"
#include "x3top/ncalg.hpp"

#include <string>
#include <vector>

namespace x3top {

enum class CaseId { MU1, S1, S2, S3a, S3b, S4a, S4b, R1, R2, R3, GINF };

const char* to_string(CaseId c);
CaseId parse_case_id(const std::string& s);  // throws std::invalid_argument

// A case with its integer part l; R1/R2 also record the generic case they restrict.
struct LieCase {
  CaseId id = CaseId::MU1;
  long ell = 0;
  CaseId base = CaseId::MU1;  // meaningful for R1/R2 only
  bool r3_small_lambda = true;  // R3: lambda <= 1/2
  std::string to_string() const;
  friend bool operator==(const LieCase&, const LieCase&) = default;
};

struct BracketTerm {
  long coeff;
  std::string a, b;
};

struct BracketRelation {
  std::vector<BracketTerm> terms;  // sum coeff*[a,b] = 0
  std::string to_string() const;
};

struct LiePresentation {
  std::vector<NcGenerator> generators;
  std::vector<BracketRelation> relations;
  std::vector<NcGenerator> central_even_generators;

  int index(const std::string& name) const;  // throws on unknown generator
  // Relations as elements of the free associative algebra (graded commutators).
  std::vector<NcElement> nc_relations() const;
  // Removes a generator and every relation mentioning it.
  LiePresentation without(const std::string& name) const;
};

// Throws std::invalid_argument when (case, l) is inconsistent.
LiePresentation presentation_for(const LieCase& c);
LiePresentation presentation_for(CaseId id, long ell);

constexpr int kPiRanksMaxDeg = 7;

// Enveloping algebra dims h'_0..h'_maxdeg (without the central generators).
std::vector<long> enveloping_dims(const LiePresentation& p, int maxdeg, const CancelCheck& cancel = {});
// ranks[n] for n = 1..maxdeg (index 0 unused). Throws PbwError on inconsistent presentations.
std::vector<long> pi_ranks(const LiePresentation& p, int maxdeg, const CancelCheck& cancel = {});
std::vector<long> pi_ranks(const LieCase& c, int maxdeg, const CancelCheck& cancel = {});

LieCase case_for_shape(const Shape& s);
// Rank table for a generic shape (or mu = 1), indexed 1..maxdeg.
std::vector<long> expected_pi_ranks(const Shape& s, int maxdeg);

}  // namespace x3top
