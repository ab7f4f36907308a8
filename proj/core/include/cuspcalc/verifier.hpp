#pragma once

#include <map>
#include <utility>

#include "cuspcalc/lattice.hpp"

namespace cuspcalc {

struct TheoremVerdict {
  enum class Status { pass, fail, not_applicable };
  Status status = Status::not_applicable;
  std::string detail;

  bool ok() const { return status != Status::fail; }
  std::string to_string() const;
};

struct CuspSummary {
  int h = 0;
  int eta = 0;
  int omega = 0;
  Int delta;
  std::vector<int> eta_per_stage;
  CresVerdict cres;
};

struct ZariskiSummary {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::map<std::string, Rat> negative_part;
  std::vector<std::pair<std::string, Rat>> h_dot;  // H.E per component of D
  Rat h_squared;
};

struct Report {
  CurveSpec spec;
  Int genus;
  Int c_prime_sq;
  Int d_sq;
  Int kkd_value;
  Int bound_rhs;  // 7 - 3n
  bool kappa_flag = false;
  std::vector<CuspSummary> cusps;
  ZariskiSummary zariski;
  StructureVerdicts structure;  // meaningful when zariski.applicable
  TheoremVerdict theorem1;
  TheoremVerdict prop_n;
  TheoremVerdict theorem2;

  bool all_pass() const;
};

/// Built-in curves: the tricuspidal quartic, the four-cusp quintic and
/// the unicuspidal family x^d = y^{d-1} z for d = 3..12.
std::vector<CurveSpec> catalog();

/// Full pipeline: resolve every cusp, build the lattice, run the
/// decomposition and every verdict.  Throws on invalid input.
Report analyze(const CurveSpec& spec);

/// n >= 3 implies (C')^2 <= 7-3n; also rejects n > 8.
TheoremVerdict check_theorem1(const Report& r);

/// K(K+D) and D^2 double-entry identities from resolution bookkeeping.
TheoremVerdict check_prop_n(const Report& r);

/// n = 3 and (C')^2 = -2 forces the tricuspidal quartic.
TheoremVerdict check_theorem2(const Report& r, const CurveSpec& spec);

}  // namespace cuspcalc
