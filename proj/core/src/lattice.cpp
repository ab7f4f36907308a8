#include "cuspcalc/lattice.hpp"

#include <algorithm>
#include <deque>

namespace cuspcalc {

Int pair(const ClassVec& a, const ClassVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pair: classes live in different lattices");
  Int out = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) out -= a[i] * b[i];
  return out;
}

Rat pair(const QClassVec& a, const QClassVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pair: classes live in different lattices");
  Rat out = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) out -= a[i] * b[i];
  return out;
}

QClassVec to_q_class(const ClassVec& v) {
  QClassVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

namespace {

// Solve M x = rhs by Gaussian elimination with pivoting; M square,
// assumed nonsingular (the caller has checked definiteness).
std::vector<Rat> solve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("solve: singular system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

std::vector<std::vector<Rat>> gram_of(const SurfaceModel& model, const std::vector<int>& comps) {
  std::vector<std::vector<Rat>> g(comps.size(), std::vector<Rat>(comps.size()));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = 0; j < comps.size(); ++j) {
      g[i][j] = Rat(pair(model.components[comps[i]].cls, model.components[comps[j]].cls));
    }
  }
  return g;
}

}  // namespace

ClassVec SurfaceModel::d_class() const {
  ClassVec d(static_cast<std::size_t>(n_blowups) + 1, 0);
  for (const Component& c : components) {
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += c.cls[i];
  }
  return d;
}

ClassVec SurfaceModel::k_plus_d() const {
  ClassVec out = d_class();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += canonical[i];
  return out;
}

SurfaceModel build_surface(const CurveSpec& curve, const std::vector<LocalResolution>& resolutions) {
  if (curve.degree < 1) throw std::invalid_argument("degree must be positive");
  Int genus = (curve.degree - 1) * (curve.degree - 2) / 2;
  for (const LocalResolution& r : resolutions) genus -= r.delta;
  if (genus != 0) {
    throw GenusError("curve is not rational: genus = " + genus.str(), genus);
  }

  SurfaceModel model;
  model.degree = curve.degree;
  model.resolutions = resolutions;
  for (const LocalResolution& r : resolutions) model.n_blowups += r.blowups();
  const std::size_t rank = static_cast<std::size_t>(model.n_blowups) + 1;

  model.canonical.assign(rank, 1);
  model.canonical[0] = -3;

  // C' first, then the exceptional components cusp by cusp in blow-up
  // order.  Total-transform bookkeeping: the strict transform of the
  // i-th exceptional curve loses every center proximate to i.
  Component cprime;
  cprime.id = "C'";
  cprime.cls.assign(rank, 0);
  cprime.cls[0] = curve.degree;
  model.components.push_back(std::move(cprime));

  int offset = 0;
  for (std::size_t k = 0; k < resolutions.size(); ++k) {
    const LocalResolution& r = resolutions[k];
    const int s = r.blowups();
    for (int i = 0; i < s; ++i) {
      model.components[0].cls[static_cast<std::size_t>(offset + i) + 1] = -r.proximity.extended[i];
      Component e;
      e.id = "E" + std::to_string(k + 1) + "." + std::to_string(i + 1);
      e.cusp = static_cast<int>(k);
      e.local_index = i;
      e.cls.assign(rank, 0);
      e.cls[static_cast<std::size_t>(offset + i) + 1] = 1;
      model.components.push_back(std::move(e));
    }
    for (int j = 0; j < s; ++j) {
      for (int i : r.proximity.prox[j]) {
        model.components[static_cast<std::size_t>(1 + offset + i)].cls[static_cast<std::size_t>(offset + j) + 1] -= 1;
      }
    }
    model.d0_of_cusp.push_back(1 + offset + r.d0);
    offset += s;
  }
  for (const Int& m : model.components[0].cls) {
    if (&m != &model.components[0].cls[0] && m > 0) {
      throw std::logic_error("C' class has a positive exceptional coefficient");
    }
  }

  // Dual graph of D: local combs glued to C' at each D_0.
  model.adjacency.assign(model.components.size(), {});
  offset = 0;
  for (std::size_t k = 0; k < resolutions.size(); ++k) {
    const LocalResolution& r = resolutions[k];
    for (int i = 0; i < r.blowups(); ++i) {
      for (int j : r.adjacency[i]) {
        if (j > i) {
          model.adjacency[static_cast<std::size_t>(1 + offset + i)].push_back(1 + offset + j);
          model.adjacency[static_cast<std::size_t>(1 + offset + j)].push_back(1 + offset + i);
        }
      }
    }
    model.adjacency[0].push_back(model.d0_of_cusp[k]);
    model.adjacency[static_cast<std::size_t>(model.d0_of_cusp[k])].push_back(0);
    offset += r.blowups();
  }

  // The lattice pairing must reproduce the assembled graph exactly.
  for (std::size_t i = 0; i < model.components.size(); ++i) {
    for (std::size_t j = i + 1; j < model.components.size(); ++j) {
      Int p = pair(model.components[i].cls, model.components[j].cls);
      const auto& adj = model.adjacency[i];
      Int expected = std::find(adj.begin(), adj.end(), static_cast<int>(j)) != adj.end() ? 1 : 0;
      if (p != expected) {
        throw std::logic_error("intersection mismatch between " + model.components[i].id + " and " +
                               model.components[j].id + ": lattice " + p.str() + ", graph " + expected.str());
      }
    }
  }
  return model;
}

Int kkd(const SurfaceModel& model) {
  return pair(model.canonical, model.k_plus_d());
}

std::vector<Twig> maximal_twigs(const SurfaceModel& model) {
  std::vector<Twig> out;
  // Twigs of the exceptional part: C' is never reported as a twig
  // component (for n <= 2 it would not be contractible anyway).
  for (std::size_t tip = 1; tip < model.components.size(); ++tip) {
    if (model.degree_in_d(static_cast<int>(tip)) != 1) continue;
    Twig t;
    int prev = -1;
    int v = static_cast<int>(tip);
    while (v != 0 && model.degree_in_d(v) <= 2) {
      t.components.push_back(v);
      int next = -1;
      for (int w : model.adjacency[v]) {
        if (w != prev) next = w;
      }
      prev = v;
      if (next < 0) break;  // D itself is a rod
      v = next;
    }
    t.admissible = std::all_of(t.components.begin(), t.components.end(),
                               [&](int c) { return model.self_intersection(c) < -1; });
    out.push_back(std::move(t));
  }
  return out;
}

Rat QDivisor::at(int comp) const {
  auto it = coefficients.find(comp);
  return it == coefficients.end() ? Rat(0) : it->second;
}

bool QDivisor::floor_is_zero() const {
  for (const auto& [comp, q] : coefficients) {
    if (q >= 1) {
      throw std::runtime_error("divisor coefficient " + std::string(q.str()) + " >= 1 on component " +
                               std::to_string(comp) + "; refusing to floor silently");
    }
    if (q < 0) return false;
  }
  return true;
}

QDivisor bark(const SurfaceModel& model) {
  if (is_rod(model) || is_rational_fork(model)) {
    throw std::runtime_error("D is a rational rod or fork; twig barks do not determine Bk(D)");
  }
  QDivisor bk;
  ClassVec kd = model.k_plus_d();
  for (const Twig& t : maximal_twigs(model)) {
    auto gram = gram_of(model, t.components);
    if (!is_negative_definite(gram)) {
      std::string ids;
      for (int c : t.components) ids += (ids.empty() ? "" : "+") + model.components[c].id;
      throw std::runtime_error("twig " + ids + " is not contractible");
    }
    std::vector<Rat> rhs;
    for (int c : t.components) rhs.emplace_back(pair(kd, model.components[c].cls));
    std::vector<Rat> coeff = solve(gram, rhs);
    for (std::size_t i = 0; i < t.components.size(); ++i) bk.coefficients[t.components[i]] = coeff[i];
  }
  return bk;
}

ZariskiResult zariski(const SurfaceModel& model) {
  const ClassVec kd = model.k_plus_d();
  std::vector<int> support;
  std::vector<Rat> coeff;
  for (;;) {
    // (K+D-N) E for every component E of D.
    std::vector<int> add;
    for (std::size_t c = 0; c < model.components.size(); ++c) {
      if (std::find(support.begin(), support.end(), static_cast<int>(c)) != support.end()) continue;
      Rat excess(pair(kd, model.components[c].cls));
      for (std::size_t i = 0; i < support.size(); ++i) {
        excess -= coeff[i] * Rat(pair(model.components[support[i]].cls, model.components[c].cls));
      }
      if (excess < 0) add.push_back(static_cast<int>(c));
    }
    if (add.empty()) break;
    support.insert(support.end(), add.begin(), add.end());
    auto gram = gram_of(model, support);
    if (!is_negative_definite(gram)) {
      throw NotPseudoEffective("K+D is not pseudo-effective relative to D (support Gram matrix not negative definite)");
    }
    std::vector<Rat> rhs;
    for (int c : support) rhs.emplace_back(pair(kd, model.components[c].cls));
    coeff = solve(gram, rhs);
  }

  ZariskiResult z;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (coeff[i] != 0) z.negative_part.coefficients[support[i]] = coeff[i];
  }
  z.nef_class = to_q_class(kd);
  for (std::size_t i = 0; i < support.size(); ++i) {
    const ClassVec& cls = model.components[support[i]].cls;
    for (std::size_t k = 0; k < cls.size(); ++k) z.nef_class[k] -= coeff[i] * Rat(cls[k]);
  }
  z.h_squared = pair(z.nef_class, z.nef_class);
  return z;
}

bool is_negative_definite(const std::vector<std::vector<Rat>>& gram) {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw std::invalid_argument("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
    }
  }
  Rat sign = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rat>> lead(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = gram[i][j];
    }
    sign = -sign;
    if (sign * determinant(std::move(lead)) <= 0) return false;
  }
  return true;
}

bool is_rod(const SurfaceModel& model) {
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    if (model.degree_in_d(static_cast<int>(c)) > 2) return false;
  }
  return true;
}

bool is_rational_fork(const SurfaceModel& model) {
  int branch = -1;
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    int deg = model.degree_in_d(static_cast<int>(c));
    if (deg > 3) return false;
    if (deg == 3) {
      if (branch >= 0) return false;  // two branch vertices
      branch = static_cast<int>(c);
    }
  }
  if (branch < 0) return false;
  std::vector<Twig> twigs = maximal_twigs(model);
  if (twigs.size() != 3) return false;
  ClassVec kd = model.k_plus_d();
  Rat excess(pair(kd, model.components[branch].cls));
  for (const Twig& t : twigs) {
    if (!t.admissible) return false;
    auto gram = gram_of(model, t.components);
    if (!is_negative_definite(gram)) return false;
    std::vector<Rat> rhs;
    for (int c : t.components) rhs.emplace_back(pair(kd, model.components[c].cls));
    std::vector<Rat> coeff = solve(gram, rhs);
    for (std::size_t i = 0; i < t.components.size(); ++i) {
      excess -= coeff[i] * Rat(pair(model.components[t.components[i]].cls, model.components[branch].cls));
    }
  }
  return excess < 0;
}

StructureVerdicts structure_checks(const SurfaceModel& model, const ZariskiResult& z, bool kappa_two) {
  StructureVerdicts v;
  QDivisor bk = bark(model);

  v.n_equals_bark = true;
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    if (z.negative_part.at(static_cast<int>(c)) != bk.at(static_cast<int>(c))) v.n_equals_bark = false;
  }
  v.floor_zero = z.negative_part.floor_is_zero();
  v.d_kd_minus_two = pair(model.d_class(), model.k_plus_d()) == -2;

  v.minus_one_condition = true;
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    if (model.self_intersection(static_cast<int>(c)) == -1 && model.degree_in_d(static_cast<int>(c)) <= 2) {
      v.minus_one_condition = false;
    }
  }

  v.bigenus = kkd(model);
  v.h_squared = z.h_squared;
  v.h_sq_checked = kappa_two;
  v.h_sq_positive = z.h_squared > 0;
  return v;
}

}  // namespace cuspcalc
