#pragma once

#include <string>
#include <vector>

#include "ramacert/graph.hpp"
#include "ramacert/hecke.hpp"
#include "ramacert/spectral.hpp"
#include "ramacert/zeta.hpp"

namespace ramacert {

// Finite shadow of the automorphic decomposition: the multiplicity of each
// Hecke module equals the multiplicity of its characteristic polynomial in
// Z_X(u)^{-1}.
struct DecompositionEntry {
  hecke::ModuleDescriptor module;
  int multiplicity = 0;
};

struct Decomposition {
  std::vector<DecompositionEntry> entries;
  // Sum of multiplicity * deg(char poly) over entries; must equal |E|.
  int total_degree() const;
};

Decomposition decompose(const Bigraph& x, const ZetaFactorization& fact,
                        const SpectralData& sd);

// True iff every module other than sph (the trivial representation's
// module) is tempered. St and ds are discrete series and always pass; nt
// never does for q1 > q2; principal series pass iff Re nu = 0.
bool conjecture_check(const Decomposition& dec);

enum class CertVerdict { Ramanujan, WeaklyRamanujanOnly, NotWeaklyRamanujan };
const char* to_string(CertVerdict v);

struct ConsistencyCheck {
  std::string name;
  bool pass = false;
};

struct CertifyOptions {
  bool exact = false;     // decide the spectral inequalities exactly
  double tol = 1e-9;      // relative tolerance for numeric verdicts
  int max_edges = 500;    // cap for the determinant zeta route
  // Self-test hook: deliberately flip one consistency result so the
  // InternalInconsistency path (CLI exit code 3) can be exercised.
  bool inject_inconsistency = false;
};

struct CertificationReport {
  Bigraph graph;
  int rank = 0;
  CertVerdict verdict = CertVerdict::NotWeaklyRamanujan;
  bool borderline = false;
  bool weakly_ramanujan = false;
  bool ramanujan_inequality = false;
  bool conjecture_holds = false;
  SpectralData spectral;
  ZetaPolynomial zeta;
  ZetaFactorization factorization;
  RHReport rh;
  Decomposition decomposition;
  std::vector<ConsistencyCheck> consistency;
};

// Runs the full pipeline and the consistency suite. Every consistency check
// is a theorem; a failure is a software defect and raises
// InternalInconsistency naming the failing check.
CertificationReport certify(const Bigraph& x, const CertifyOptions& opts = {});

// Stable-schema JSON rendering of the report; identical inputs yield
// byte-identical output.
std::string report_to_json(const CertificationReport& report, int indent = 2);

}  // namespace ramacert
