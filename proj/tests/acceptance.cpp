// Acceptance gate: one line per criterion, exit 1 if any fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cuspcalc/verifier.hpp"
#include "oracles.hpp"

using namespace cuspcalc;

namespace {

struct Criterion {
  std::string name;
  std::function<void()> body;
};

std::string failure;

void expect(bool ok, const std::string& what) {
  if (!ok && failure.empty()) failure = what;
}

void criterion_quartic() {
  Report r = analyze(catalog()[0]);
  expect(r.c_prime_sq == -2, "(C')^2 != -2");
  expect(r.bound_rhs == -2, "bound != 7-3*3");
  expect(r.kkd_value == 0, "K(K+D) != 0");
  for (const CuspSummary& c : r.cusps) {
    expect(c.h == 1 && c.eta == 1, "cusp with h or eta != 1");
  }
  expect(r.zariski.applicable, "no Zariski decomposition");
  expect(r.structure.n_equals_bark, "N != Bk(D)");
  for (int k = 1; k <= 3; ++k) {
    std::string a = "E" + std::to_string(k) + ".1";
    std::string b = "E" + std::to_string(k) + ".2";
    expect(r.zariski.negative_part.at(a) == Rat(1, 3), "N coefficient on " + a + " != 1/3");
    expect(r.zariski.negative_part.at(b) == Rat(1, 2), "N coefficient on " + b + " != 1/2");
  }
  expect(r.zariski.negative_part.size() == 6, "N supported outside the A/B components");
  expect(r.zariski.h_squared == Rat(1, 2), "H^2 != 1/2");
}

void criterion_quintic() {
  Report r = analyze(catalog()[1]);
  expect(r.c_prime_sq == -7, "(C')^2 != -7");
  expect(r.theorem1.status == TheoremVerdict::Status::pass, "Theorem 1 check failed");
  expect(r.bound_rhs == -5, "bound != -5");
  expect(r.kkd_value == 0, "K(K+D) != 0");
  expect(r.prop_n.status == TheoremVerdict::Status::pass, "Prop. 3.2 identity failed");
}

void criterion_unicuspidal() {
  for (int d = 3; d <= 12; ++d) {
    CurveSpec spec;
    spec.degree = d;
    spec.cusps = {CuspSpec{{Int(d - 1)}}};
    Report r = analyze(spec);
    expect(r.c_prime_sq == d, "(C')^2 != d at d = " + std::to_string(d));
  }
}

void criterion_double_entry() {
  for (const CurveSpec& spec : catalog()) {
    Report r = analyze(spec);
    Int eta_sum = 0, omega_adjust = 0;
    for (const CuspSummary& c : r.cusps) {
      eta_sum += c.eta;
      omega_adjust += Int(c.omega) - 2;
    }
    expect(r.kkd_value == 7 - 2 * Int(spec.n()) - r.c_prime_sq - eta_sum,
           spec.name + ": K(K+D) disagrees with resolution bookkeeping");
    expect(r.d_sq == r.c_prime_sq - omega_adjust, spec.name + ": D^2 disagrees with resolution bookkeeping");
    expect(r.prop_n.ok(), spec.name + ": Prop. verdict failed");
  }
}

void criterion_cres() {
  for (const CurveSpec& spec : catalog()) {
    for (const CuspSpec& cusp : spec.cusps) {
      CresVerdict v = check_cres(resolve_cusp(cusp));
      expect(v.pass, spec.name + " cusp " + cusp.to_string() + ": " + v.detail);
    }
  }
  std::mt19937 rng(331);
  for (int trial = 0; trial < 120; ++trial) {
    CuspSpec cusp = testing::random_cusp(rng);
    CresVerdict v = check_cres(resolve_cusp(cusp));
    expect(v.pass, "random cusp " + cusp.to_string() + ": " + v.detail);
  }
}

void criterion_chain_algebra() {
  std::mt19937 rng(997);
  for (int trial = 0; trial < 1200; ++trial) {
    LinearChain a = testing::random_admissible(rng);
    Int d = discriminant(a);
    Int d_head = discriminant(head_removed(a));

    expect(d == discriminant(transpose(a)), "Lemma 2.1(i) failed on " + a.to_string());
    if (a.size() >= 2) {
      expect(d_head * discriminant(tail_removed(a)) - d * discriminant(head_removed(tail_removed(a))) == 1,
             "Lemma 2.1(ii) failed on " + a.to_string());
    }
    expect(gcd(d, d_head) == 1 && d > d_head && d_head > 0, "Lemma 2.1(iii) failed on " + a.to_string());

    LinearChain b = inverse_inductance(1 - inductance(a));
    expect(discriminant(b) == d && inductance(transpose(a)) + inductance(transpose(b)) == 1,
           "Lemma 2.2(i) failed on " + a.to_string());

    LinearChain adj = adjoint(a);
    expect(adjoint(adj) == a && transpose(adj) == adjoint(transpose(a)) && discriminant(adj) == d &&
               d == discriminant(head_removed(adj)) + discriminant(tail_removed(a)),
           "Lemma 2.2(ii) failed on " + a.to_string());

    std::uniform_int_distribution<int> n_dist(1, 4);
    int n = n_dist(rng);
    expect(adjoint(appended(a, n + 1)) == star(tw(n), adj), "Lemma 2.3(i) failed on " + a.to_string());
    LinearChain twined;
    for (auto it = a.weights().rbegin(); it != a.weights().rend(); ++it) {
      LinearChain t = tw((*it - 1).convert_to<std::size_t>());
      twined = twined.empty() ? t : star(twined, t);
    }
    expect(adj == twined, "Lemma 2.3(ii) failed on " + a.to_string());

    LinearChain c = testing::random_admissible(rng);
    expect(star(star(a, b), c) == star(a, star(b, c)), "star associativity failed");
  }
}

void criterion_inverse_oracle() {
  auto by_inductance = testing::enumerate_admissible(30);
  for (Int q = 2; q <= 30; ++q) {
    for (Int p = 1; p < q; ++p) {
      if (gcd(p, q) != 1) continue;
      Rat e(p, q);
      auto it = by_inductance.find(e);
      if (it == by_inductance.end() || it->second.size() != 1) {
        expect(false, "enumeration does not find a unique chain for " + e.str());
        return;
      }
      expect(it->second.front() == inverse_inductance(e), "inverse_inductance mismatch at " + e.str());
    }
  }
}

void criterion_structural() {
  for (const CurveSpec& spec : catalog()) {
    std::vector<LocalResolution> resolutions;
    for (const CuspSpec& cusp : spec.cusps) resolutions.push_back(resolve_cusp(cusp));
    SurfaceModel m = build_surface(spec, resolutions);

    expect(static_cast<int>(m.components.size()) == 1 + m.n_blowups,
           spec.name + ": component count != 1 + #blow-ups");
    expect(pair(m.d_class(), m.k_plus_d()) == -2, spec.name + ": D(K+D) != -2");
    for (std::size_t c = 0; c < m.components.size(); ++c) {
      expect(pair(m.canonical, m.components[c].cls) == -2 - m.self_intersection(static_cast<int>(c)),
             spec.name + ": adjunction fails on " + m.components[c].id);
    }

    try {
      ZariskiResult z = zariski(m);
      expect(z.negative_part.floor_is_zero(), spec.name + ": floor(N) != 0");
      for (std::size_t c = 0; c < m.components.size(); ++c) {
        Rat he = pair(z.nef_class, to_q_class(m.components[c].cls));
        expect(he >= 0, spec.name + ": H." + m.components[c].id + " < 0");
        if (z.negative_part.at(static_cast<int>(c)) != 0) {
          expect(he == 0, spec.name + ": H." + m.components[c].id + " != 0 on Supp N");
        }
      }
      if (spec.n() >= 3) expect(z.h_squared > 0, spec.name + ": H^2 <= 0");
    } catch (const NotPseudoEffective&) {
      expect(spec.n() < 3, spec.name + ": K+D unexpectedly not pseudo-effective");
    }
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 tricuspidal quartic invariants", criterion_quartic},
      {"2 four-cusp quintic invariants", criterion_quintic},
      {"3 unicuspidal family (C')^2 = d", criterion_unicuspidal},
      {"4 double-entry K(K+D) and D^2", criterion_double_entry},
      {"5 stage identities on catalog and random cusps", criterion_cres},
      {"6 chain-algebra property suite", criterion_chain_algebra},
      {"7 inverse-inductance enumeration oracle", criterion_inverse_oracle},
      {"8 structural suite on catalog", criterion_structural},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    failure.clear();
    try {
      c.body();
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    if (failure.empty()) {
      std::cout << "PASS " << c.name << "\n";
    } else {
      std::cout << "FAIL " << c.name << ": " << failure << "\n";
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
