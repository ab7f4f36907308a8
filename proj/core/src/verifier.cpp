#include "cuspcalc/verifier.hpp"

#include <algorithm>

namespace cuspcalc {

std::string TheoremVerdict::to_string() const {
  switch (status) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "not applicable";
  }
}

bool Report::all_pass() const {
  for (const CuspSummary& c : cusps) {
    if (!c.cres.pass) return false;
  }
  if (zariski.applicable && !structure.all_pass()) return false;
  return theorem1.ok() && prop_n.ok() && theorem2.ok();
}

std::vector<CurveSpec> catalog() {
  std::vector<CurveSpec> out;
  CurveSpec quartic;
  quartic.name = "quartic";
  quartic.degree = 4;
  quartic.cusps = {CuspSpec{{2}}, CuspSpec{{2}}, CuspSpec{{2}}};
  out.push_back(std::move(quartic));

  CurveSpec quintic;
  quintic.name = "quintic4";
  quintic.degree = 5;
  quintic.cusps = {CuspSpec{{2, 2, 2}}, CuspSpec{{2}}, CuspSpec{{2}}, CuspSpec{{2}}};
  out.push_back(std::move(quintic));

  for (int d = 3; d <= 12; ++d) {
    CurveSpec c;
    c.name = "unicusp_" + std::to_string(d);
    c.degree = d;
    c.cusps = {CuspSpec{{Int(d - 1)}}};
    out.push_back(std::move(c));
  }
  return out;
}

Report analyze(const CurveSpec& spec) {
  if (spec.degree < 3) throw std::invalid_argument("degree must be at least 3");
  if (spec.cusps.empty()) throw std::invalid_argument("at least one cusp is required");

  Report r;
  r.spec = spec;
  const int n = spec.n();
  r.bound_rhs = 7 - 3 * Int(n);
  r.kappa_flag = n >= 3;

  std::vector<LocalResolution> resolutions;
  resolutions.reserve(spec.cusps.size());
  for (const CuspSpec& cusp : spec.cusps) resolutions.push_back(resolve_cusp(cusp));

  SurfaceModel model = build_surface(spec, resolutions);
  r.genus = 0;
  r.c_prime_sq = model.c_prime_sq();
  r.d_sq = pair(model.d_class(), model.d_class());
  r.kkd_value = kkd(model);

  for (const LocalResolution& res : resolutions) {
    CuspSummary c;
    c.h = res.h;
    c.eta = res.eta();
    c.omega = res.omega;
    c.delta = res.delta;
    c.eta_per_stage = res.eta_per_stage;
    c.cres = check_cres(res);
    r.cusps.push_back(std::move(c));
  }

  try {
    ZariskiResult z = zariski(model);
    r.zariski.applicable = true;
    for (const auto& [comp, q] : z.negative_part.coefficients) {
      r.zariski.negative_part[model.components[static_cast<std::size_t>(comp)].id] = q;
    }
    for (const Component& comp : model.components) {
      r.zariski.h_dot.emplace_back(comp.id, pair(z.nef_class, to_q_class(comp.cls)));
    }
    r.zariski.h_squared = z.h_squared;
    r.structure = structure_checks(model, z, r.kappa_flag);
  } catch (const NotPseudoEffective& e) {
    r.zariski.applicable = false;
    r.zariski.reason = e.what();
  }

  r.theorem1 = check_theorem1(r);
  r.prop_n = check_prop_n(r);
  r.theorem2 = check_theorem2(r, spec);
  return r;
}

TheoremVerdict check_theorem1(const Report& r) {
  TheoremVerdict v;
  const int n = r.spec.n();
  if (n > 8) {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "a rational cuspidal plane curve has at most 8 cusps";
    return v;
  }
  if (n < 3) {
    v.status = TheoremVerdict::Status::not_applicable;
    v.detail = "bound requires n >= 3";
    return v;
  }
  if (r.c_prime_sq <= r.bound_rhs) {
    v.status = TheoremVerdict::Status::pass;
    v.detail = "(C')^2 = " + r.c_prime_sq.str() + " <= " + r.bound_rhs.str();
  } else {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "(C')^2 = " + r.c_prime_sq.str() + " exceeds the bound " + r.bound_rhs.str() +
               "; no such curve exists";
  }
  return v;
}

TheoremVerdict check_prop_n(const Report& r) {
  TheoremVerdict v;
  const int n = r.spec.n();
  Int eta_sum = 0, omega_adjust = 0;
  for (const CuspSummary& c : r.cusps) {
    if (c.eta < 1 || std::any_of(c.eta_per_stage.begin(), c.eta_per_stage.end(), [](int e) { return e < 1; })) {
      v.status = TheoremVerdict::Status::fail;
      v.detail = "a stage without a sprouting blow-up";
      return v;
    }
    eta_sum += c.eta;
    omega_adjust += Int(c.omega) - 2;
  }
  Int kkd_rhs = 7 - 2 * Int(n) - r.c_prime_sq - eta_sum;
  Int dsq_rhs = r.c_prime_sq - omega_adjust;
  if (r.kkd_value != kkd_rhs) {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "K(K+D) = " + r.kkd_value.str() + " but bookkeeping gives " + kkd_rhs.str();
    return v;
  }
  if (r.d_sq != dsq_rhs) {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "D^2 = " + r.d_sq.str() + " but bookkeeping gives " + dsq_rhs.str();
    return v;
  }
  if (r.kappa_flag && r.kkd_value < 0) {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "K(K+D) = " + r.kkd_value.str() + " < 0 with kappa-bar = 2; no such curve exists";
    return v;
  }
  v.status = TheoremVerdict::Status::pass;
  v.detail = "K(K+D) = " + r.kkd_value.str() + ", D^2 = " + r.d_sq.str();
  return v;
}

TheoremVerdict check_theorem2(const Report& r, const CurveSpec& spec) {
  TheoremVerdict v;
  if (spec.n() != 3 || r.c_prime_sq != -2) {
    v.status = TheoremVerdict::Status::not_applicable;
    v.detail = "requires n = 3 and (C')^2 = -2";
    return v;
  }
  bool is_quartic = spec.degree == 4 &&
                    std::all_of(spec.cusps.begin(), spec.cusps.end(),
                                [](const CuspSpec& c) { return c == CuspSpec{{2}}; });
  if (!is_quartic) {
    v.status = TheoremVerdict::Status::fail;
    v.detail = "contradicts the quartic classification: spec describes no existing curve";
    return v;
  }
  for (const CuspSummary& c : r.cusps) {
    if (c.h != 1 || c.eta != 1) {
      v.status = TheoremVerdict::Status::fail;
      v.detail = "quartic cusp with h = " + std::to_string(c.h) + ", eta = " + std::to_string(c.eta);
      return v;
    }
  }
  v.status = TheoremVerdict::Status::pass;
  v.detail = "h_k = 1 and eta_k = 1 for every cusp";
  return v;
}

}  // namespace cuspcalc
