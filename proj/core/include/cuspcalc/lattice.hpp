#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspcalc/curve.hpp"

namespace cuspcalc {

/// Integer class in Pic(V) with basis (L, E_1, ..., E_N) and pairing
/// diag(1, -1, ..., -1).
using ClassVec = std::vector<Int>;
using QClassVec = std::vector<Rat>;

Int pair(const ClassVec& a, const ClassVec& b);
Rat pair(const QClassVec& a, const QClassVec& b);
QClassVec to_q_class(const ClassVec& v);

struct Component {
  std::string id;  // "C'" or "E<cusp>.<order>"
  ClassVec cls;
  int cusp = -1;         // -1 for C'
  int local_index = -1;  // blow-up order within the cusp, 0-based
};

/// Picard-lattice model of the blown-up surface V -> P^2 together with
/// the reduced SNC divisor D = sigma^{-1}(C).
struct SurfaceModel {
  Int degree;
  int n_blowups = 0;
  std::vector<Component> components;        // [0] is C'
  std::vector<std::vector<int>> adjacency;  // dual graph of D
  ClassVec canonical;
  std::vector<LocalResolution> resolutions;
  std::vector<int> d0_of_cusp;  // component index of each D_0

  int n_cusps() const { return static_cast<int>(resolutions.size()); }
  int degree_in_d(int comp) const { return static_cast<int>(adjacency[comp].size()); }
  Int self_intersection(int comp) const { return pair(components[comp].cls, components[comp].cls); }
  ClassVec d_class() const;          // class of the reduced divisor D
  ClassVec k_plus_d() const;
  Int c_prime_sq() const { return self_intersection(0); }
};

struct GenusError : std::runtime_error {
  Int genus;
  GenusError(const std::string& msg, Int g) : std::runtime_error(msg), genus(std::move(g)) {}
};

/// Assembles the lattice classes of C' and all exceptional components.
/// Throws GenusError unless sum of delta_k = (d-1)(d-2)/2.
SurfaceModel build_surface(const CurveSpec& curve, const std::vector<LocalResolution>& resolutions);

/// K(K+D), computed directly from the lattice classes.
Int kkd(const SurfaceModel& model);

struct Twig {
  std::vector<int> components;  // tip first, walking inward
  bool admissible = false;
};

/// All maximal rational twigs of the exceptional part of D, tip first.
std::vector<Twig> maximal_twigs(const SurfaceModel& model);

/// Rational coefficients on components of D; absent means zero.
struct QDivisor {
  std::map<int, Rat> coefficients;

  Rat at(int comp) const;
  bool floor_is_zero() const;  // throws if a coefficient >= 1 appears
};

/// Sum of the twig barks: the divisor with Bk(T) T_j = (K+D) T_j per twig.
QDivisor bark(const SurfaceModel& model);

struct ZariskiResult {
  QDivisor negative_part;
  QClassVec nef_class;  // H = K + D - N
  Rat h_squared;
};

struct NotPseudoEffective : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Zariski decomposition of K+D by iterative support growth.
ZariskiResult zariski(const SurfaceModel& model);

/// Exact leading-principal-minor test.
bool is_negative_definite(const std::vector<std::vector<Rat>>& gram);

/// D is connected with a branch vertex for every curve in scope; these
/// classifiers guard that precondition.
bool is_rod(const SurfaceModel& model);
bool is_rational_fork(const SurfaceModel& model);

struct StructureVerdicts {
  bool n_equals_bark = false;
  bool floor_zero = false;
  bool d_kd_minus_two = false;
  bool minus_one_condition = false;  // (D-E)E > 2 for every (-1)-component E of D
  Int bigenus;                       // K(K+D)
  Rat h_squared;
  bool h_sq_checked = false;  // only asserted when kappa-bar = 2 is known
  bool h_sq_positive = false;

  bool all_pass() const {
    return n_equals_bark && floor_zero && d_kd_minus_two && minus_one_condition &&
           (!h_sq_checked || h_sq_positive);
  }
};

StructureVerdicts structure_checks(const SurfaceModel& model, const ZariskiResult& z, bool kappa_two);

}  // namespace cuspcalc
