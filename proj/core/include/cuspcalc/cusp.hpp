#pragma once

#include <string>
#include <vector>

#include "cuspcalc/chain.hpp"

namespace cuspcalc {

/// Multiplicity sequence of one cusp, trailing 1's omitted.
/// Valid when non-empty, non-increasing and every entry >= 2.
struct CuspSpec {
  std::vector<Int> multiplicities;

  friend bool operator==(const CuspSpec&, const CuspSpec&) = default;
  std::string to_string() const;
};

/// Enriques proximity data of the minimal embedded resolution.
/// Point indices are 0-based in blow-up order.
struct ProximityStructure {
  std::vector<Int> extended;           // multiplicities with trailing 1's
  std::vector<std::vector<int>> prox;  // prox[j]: earlier points j is proximate to

  int size() const { return static_cast<int>(extended.size()); }
  bool free_point(int j) const { return j > 0 && prox[j].size() == 1; }
  bool satellite(int j) const { return prox[j].size() == 2; }
};

/// Extends the sequence with 1's until every proximity equality
/// m_i = sum of multiplicities proximate to i closes.  Throws
/// std::invalid_argument when no consistent unibranch assignment exists.
ProximityStructure proximity_structure(const CuspSpec& spec);

/// The comb graph of one resolved cusp.
struct LocalResolution {
  ProximityStructure proximity;
  std::vector<Int> weights;                 // entry i is -E_i^2 (positive)
  std::vector<std::vector<int>> adjacency;  // exceptional components only
  int d0 = 0;                               // unique (-1)-component, meets C'
  int h = 0;
  std::vector<std::vector<int>> a_vertices;  // component indices of A_1..A_h
  std::vector<std::vector<int>> b_vertices;  // component indices of B_1..B_h
  std::vector<LinearChain> a_chains;
  std::vector<LinearChain> b_chains;
  std::vector<int> eta_per_stage;
  int omega = 0;
  int eta() const;
  int blowups() const { return proximity.size(); }
  Int delta;
  Int msum_sq;
};

/// Simulates the blow-ups and extracts the comb data.
LocalResolution resolve_cusp(const CuspSpec& spec);

struct CresVerdict {
  bool pass = true;
  int failing_stage = -1;  // 1-based when failing
  std::string detail;
};

/// Checks A_i = tw(eta_i) * adjoint(B_i) and adjoint(A_i) = [B_i, eta_i+1]
/// at every stage.
CresVerdict check_cres(const LocalResolution& res);

/// Sum of m_i (m_i - 1) / 2 over the extended sequence.
Int delta_invariant(const CuspSpec& spec);

}  // namespace cuspcalc
