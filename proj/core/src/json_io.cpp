#include "cuspcalc/json_io.hpp"

namespace cuspcalc {

using nlohmann::json;

std::string rat_to_string(const Rat& q) {
  Int num = rat_num(q), den = rat_den(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + s + "'; expected p/q");
  }
}

json chain_to_json(const LinearChain& c) {
  json arr = json::array();
  for (const Int& w : c.weights()) arr.push_back(w.convert_to<long long>());
  return arr;
}

LinearChain chain_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain must be a JSON array of integers");
  std::vector<Int> weights;
  for (const auto& entry : j) {
    if (!entry.is_number_integer()) throw std::invalid_argument("chain entries must be integers");
    weights.emplace_back(entry.get<long long>());
  }
  return LinearChain(std::move(weights));
}

json curve_to_json(const CurveSpec& spec) {
  json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["degree"] = spec.degree.convert_to<long long>();
  json cusps = json::array();
  for (const CuspSpec& c : spec.cusps) {
    json seq = json::array();
    for (const Int& m : c.multiplicities) seq.push_back(m.convert_to<long long>());
    cusps.push_back(std::move(seq));
  }
  j["cusps"] = std::move(cusps);
  return j;
}

CurveSpec curve_from_json(const json& j) {
  CurveSpec spec;
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();
  if (!j.contains("degree") || !j.at("degree").is_number_integer()) {
    throw std::invalid_argument("curve spec needs an integer \"degree\"");
  }
  spec.degree = j.at("degree").get<long long>();
  if (!j.contains("cusps") || !j.at("cusps").is_array()) {
    throw std::invalid_argument("curve spec needs a \"cusps\" array");
  }
  for (const auto& seq : j.at("cusps")) {
    if (!seq.is_array()) throw std::invalid_argument("each cusp must be an array of integers");
    CuspSpec c;
    for (const auto& m : seq) {
      if (!m.is_number_integer()) throw std::invalid_argument("cusp multiplicities must be integers");
      c.multiplicities.emplace_back(m.get<long long>());
    }
    spec.cusps.push_back(std::move(c));
  }
  return spec;
}

json report_to_json(const Report& r) {
  json j = curve_to_json(r.spec);
  j["genus"] = r.genus.convert_to<long long>();
  j["c_prime_sq"] = r.c_prime_sq.convert_to<long long>();
  j["d_sq"] = r.d_sq.convert_to<long long>();
  j["kkd"] = r.kkd_value.convert_to<long long>();
  j["bound_rhs"] = r.bound_rhs.convert_to<long long>();
  j["kappa_flag"] = r.kappa_flag;

  json cusps = json::array();
  for (const CuspSummary& c : r.cusps) {
    json jc;
    jc["h"] = c.h;
    jc["eta"] = c.eta;
    jc["omega"] = c.omega;
    jc["delta"] = c.delta.convert_to<long long>();
    jc["eta_per_stage"] = c.eta_per_stage;
    jc["cres_pass"] = c.cres.pass;
    if (!c.cres.pass) jc["cres_detail"] = c.cres.detail;
    cusps.push_back(std::move(jc));
  }
  j["per_cusp"] = std::move(cusps);

  json z;
  z["applicable"] = r.zariski.applicable;
  if (r.zariski.applicable) {
    json n = json::object();
    for (const auto& [id, q] : r.zariski.negative_part) n[id] = rat_to_string(q);
    z["negative_part"] = std::move(n);
    json h = json::object();
    for (const auto& [id, q] : r.zariski.h_dot) h[id] = rat_to_string(q);
    z["h_dot"] = std::move(h);
    z["h_squared"] = rat_to_string(r.zariski.h_squared);
    json s;
    s["n_equals_bark"] = r.structure.n_equals_bark;
    s["floor_zero"] = r.structure.floor_zero;
    s["d_kd_minus_two"] = r.structure.d_kd_minus_two;
    s["minus_one_condition"] = r.structure.minus_one_condition;
    s["bigenus"] = r.structure.bigenus.convert_to<long long>();
    if (r.structure.h_sq_checked) s["h_sq_positive"] = r.structure.h_sq_positive;
    z["structure"] = std::move(s);
  } else {
    z["reason"] = r.zariski.reason;
  }
  j["zariski"] = std::move(z);

  json verdicts;
  verdicts["theorem1"] = {{"status", r.theorem1.to_string()}, {"detail", r.theorem1.detail}};
  verdicts["prop_n"] = {{"status", r.prop_n.to_string()}, {"detail", r.prop_n.detail}};
  verdicts["theorem2"] = {{"status", r.theorem2.to_string()}, {"detail", r.theorem2.detail}};
  j["verdicts"] = std::move(verdicts);
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace cuspcalc
