#include <doctest.h>

#include "cuspcalc/lattice.hpp"

using namespace cuspcalc;

namespace {

SurfaceModel make_model(Int degree, std::vector<CuspSpec> cusps, std::string name = "") {
  CurveSpec spec;
  spec.name = std::move(name);
  spec.degree = std::move(degree);
  spec.cusps = std::move(cusps);
  std::vector<LocalResolution> resolutions;
  for (const CuspSpec& c : spec.cusps) resolutions.push_back(resolve_cusp(c));
  return build_surface(spec, resolutions);
}

int find_component(const SurfaceModel& m, const std::string& id) {
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    if (m.components[i].id == id) return static_cast<int>(i);
  }
  FAIL("no component ", id);
  return -1;
}

void check_adjunction(const SurfaceModel& m) {
  ClassVec kd = m.k_plus_d();
  for (std::size_t c = 0; c < m.components.size(); ++c) {
    const ClassVec& cls = m.components[c].cls;
    CHECK(pair(m.canonical, cls) == -2 - m.self_intersection(static_cast<int>(c)));
    CHECK(pair(kd, cls) == m.degree_in_d(static_cast<int>(c)) - 2);
  }
  CHECK(pair(m.d_class(), kd) == -2);
}

}  // namespace

TEST_CASE("lattice pairing") {
  CHECK(pair(ClassVec{1, 0, 0}, ClassVec{1, 0, 0}) == 1);
  CHECK(pair(ClassVec{0, 1, 0}, ClassVec{0, 1, 0}) == -1);
  CHECK(pair(ClassVec{0, 1, 0}, ClassVec{0, 0, 1}) == 0);
  CHECK(pair(ClassVec{2, 1, 1}, ClassVec{3, 1, 2}) == 3);
  CHECK(pair(to_q_class({2, 1, 1}), to_q_class({3, 1, 2})) == 3);
  CHECK_THROWS_AS(pair(ClassVec{1}, ClassVec{1, 0}), std::invalid_argument);
}

TEST_CASE("tricuspidal quartic model") {
  SurfaceModel m = make_model(4, {CuspSpec{{2}}, CuspSpec{{2}}, CuspSpec{{2}}});
  CHECK(m.n_blowups == 9);
  CHECK(m.components.size() == 10);
  CHECK(m.c_prime_sq() == -2);
  CHECK(pair(m.d_class(), m.d_class()) == -2);
  CHECK(kkd(m) == 0);
  CHECK(m.degree_in_d(0) == 3);
  CHECK(m.d0_of_cusp == std::vector<int>{3, 6, 9});
  check_adjunction(m);
  CHECK_FALSE(is_rod(m));
  CHECK_FALSE(is_rational_fork(m));

  auto twigs = maximal_twigs(m);
  REQUIRE(twigs.size() == 6);
  for (const Twig& t : twigs) {
    REQUIRE(t.components.size() == 1);
    CHECK(t.admissible);
  }

  QDivisor bk = bark(m);
  for (int k = 0; k < 3; ++k) {
    CHECK(bk.at(find_component(m, "E" + std::to_string(k + 1) + ".1")) == Rat(1, 3));
    CHECK(bk.at(find_component(m, "E" + std::to_string(k + 1) + ".2")) == Rat(1, 2));
    CHECK(bk.at(m.d0_of_cusp[static_cast<std::size_t>(k)]) == 0);
  }
  CHECK(bk.at(0) == 0);
  CHECK(bk.floor_is_zero());

  ZariskiResult z = zariski(m);
  CHECK(z.h_squared == Rat(1, 2));
  CHECK(pair(z.nef_class, to_q_class(m.components[0].cls)) == 1);
  CHECK(pair(z.nef_class, to_q_class(m.components[static_cast<std::size_t>(m.d0_of_cusp[0])].cls)) == Rat(1, 6));
  CHECK(pair(z.nef_class, to_q_class(m.components[1].cls)) == 0);

  StructureVerdicts v = structure_checks(m, z, true);
  CHECK(v.n_equals_bark);
  CHECK(v.floor_zero);
  CHECK(v.d_kd_minus_two);
  CHECK(v.minus_one_condition);
  CHECK(v.bigenus == 0);
  CHECK(v.h_sq_checked);
  CHECK(v.h_sq_positive);
  CHECK(v.all_pass());
}

TEST_CASE("four-cusp quintic model") {
  SurfaceModel m = make_model(5, {CuspSpec{{2, 2, 2}}, CuspSpec{{2}}, CuspSpec{{2}}, CuspSpec{{2}}});
  CHECK(m.n_blowups == 14);
  CHECK(m.c_prime_sq() == -7);
  CHECK(pair(m.d_class(), m.d_class()) == -7);
  CHECK(kkd(m) == 0);
  check_adjunction(m);

  auto twigs = maximal_twigs(m);
  REQUIRE(twigs.size() == 8);

  QDivisor bk = bark(m);
  CHECK(bk.at(find_component(m, "E1.1")) == Rat(5, 7));
  CHECK(bk.at(find_component(m, "E1.2")) == Rat(3, 7));
  CHECK(bk.at(find_component(m, "E1.3")) == Rat(1, 7));
  CHECK(bk.at(find_component(m, "E1.4")) == Rat(1, 2));
  CHECK(bk.at(find_component(m, "E2.1")) == Rat(1, 3));
  CHECK(bk.floor_is_zero());

  ZariskiResult z = zariski(m);
  CHECK(z.h_squared == Rat(12, 7));
  StructureVerdicts v = structure_checks(m, z, true);
  CHECK(v.all_pass());
}

TEST_CASE("unicuspidal quartic model") {
  SurfaceModel m = make_model(4, {CuspSpec{{3}}});
  CHECK(m.c_prime_sq() == 4);
  CHECK(kkd(m) == 0);
  check_adjunction(m);

  auto twigs = maximal_twigs(m);
  REQUIRE(twigs.size() == 2);
  std::vector<std::vector<Int>> weights;
  for (const Twig& t : twigs) {
    std::vector<Int> w;
    for (int c : t.components) w.push_back(-m.self_intersection(c));
    weights.push_back(std::move(w));
  }
  CHECK(weights[0] == std::vector<Int>{4});
  CHECK(weights[1] == std::vector<Int>{2, 2});

  QDivisor bk = bark(m);
  CHECK(bk.at(find_component(m, "E1.1")) == Rat(1, 4));
  CHECK(bk.at(find_component(m, "E1.2")) == Rat(2, 3));
  CHECK(bk.at(find_component(m, "E1.3")) == Rat(1, 3));

  CHECK_THROWS_AS(zariski(m), NotPseudoEffective);
}

TEST_CASE("unicuspidal family invariants") {
  for (int d = 3; d <= 9; ++d) {
    SurfaceModel m = make_model(d, {CuspSpec{{Int(d - 1)}}});
    CHECK(m.c_prime_sq() == d);
    CHECK(kkd(m) == 4 - d);
    check_adjunction(m);
    CHECK_THROWS_AS(zariski(m), NotPseudoEffective);
  }
}

TEST_CASE("bicuspidal quartic model") {
  SurfaceModel m = make_model(4, {CuspSpec{{2, 2}}, CuspSpec{{2}}});
  CHECK(m.c_prime_sq() == 0);
  CHECK(pair(m.d_class(), m.d_class()) == 0);
  CHECK(kkd(m) == 0);
  check_adjunction(m);
}

TEST_CASE("genus obstruction") {
  CHECK_THROWS_AS(make_model(4, {CuspSpec{{2}}}), GenusError);
  try {
    make_model(4, {CuspSpec{{2}}});
  } catch (const GenusError& e) {
    CHECK(e.genus == 2);
  }
}

TEST_CASE("negative definiteness") {
  using M = std::vector<std::vector<Rat>>;
  CHECK(is_negative_definite(M{}));
  CHECK(is_negative_definite(M{{-2}}));
  CHECK_FALSE(is_negative_definite(M{{0}}));
  CHECK_FALSE(is_negative_definite(M{{2}}));
  CHECK(is_negative_definite(M{{-2, 1}, {1, -2}}));
  CHECK_FALSE(is_negative_definite(M{{-1, 1}, {1, -1}}));
  CHECK_FALSE(is_negative_definite(M{{-2, 1, 0}, {1, -1, 1}, {0, 1, -2}}));
  CHECK_THROWS_AS(is_negative_definite(M{{-2, 1}, {0, -2}}), std::invalid_argument);
}

TEST_CASE("rod classification") {
  SurfaceModel line = make_model(1, {});
  CHECK(is_rod(line));
  CHECK(maximal_twigs(line).empty());
  CHECK_THROWS(bark(line));
}

TEST_CASE("floor guard") {
  QDivisor d;
  d.coefficients[1] = Rat(1, 2);
  CHECK(d.floor_is_zero());
  d.coefficients[2] = Rat(-1, 3);
  CHECK_FALSE(d.floor_is_zero());
  d.coefficients[2] = Rat(3, 2);
  CHECK_THROWS(d.floor_is_zero());
}
