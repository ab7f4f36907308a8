#pragma once

#include <string>
#include <vector>

#include "cuspcalc/cusp.hpp"

namespace cuspcalc {

/// A rational cuspidal plane curve given by its degree and the
/// multiplicity sequence of each cusp.
struct CurveSpec {
  std::string name;
  Int degree = 0;
  std::vector<CuspSpec> cusps;

  int n() const { return static_cast<int>(cusps.size()); }
  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

}  // namespace cuspcalc
