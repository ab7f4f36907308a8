#include "cuspcalc/cusp.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cuspcalc {

std::string CuspSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (i) out += ",";
    out += multiplicities[i].str();
  }
  return out + ")";
}

ProximityStructure proximity_structure(const CuspSpec& spec) {
  const auto& m = spec.multiplicities;
  if (m.empty()) throw std::invalid_argument("cusp spec is empty");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 2) {
      throw std::invalid_argument("cusp " + spec.to_string() + ": entries must be >= 2");
    }
    if (i > 0 && m[i] > m[i - 1]) {
      throw std::invalid_argument("cusp " + spec.to_string() + ": sequence must be non-increasing");
    }
  }

  ProximityStructure ps;
  ps.extended = m;
  ps.prox.resize(m.size());

  // Close the proximity equality of every point in order, appending 1's
  // when a block runs past the end of the sequence.  The sequence is
  // closed once the last point is a satellite of multiplicity 1.
  for (int i = 0;; ++i) {
    if (i + 1 >= static_cast<int>(ps.extended.size()) && i > 0) {
      if (ps.extended[i] == 1 && ps.prox[i].size() == 2) break;
      if (ps.extended[i] == 1) {
        throw std::invalid_argument("cusp " + spec.to_string() +
                                    ": no consistent unibranch proximity assignment (sequence ends on a free point)");
      }
    }
    Int sum = 0;
    int j = i + 1;
    while (sum < ps.extended[i]) {
      if (j == static_cast<int>(ps.extended.size())) {
        ps.extended.push_back(1);
        ps.prox.emplace_back();
      }
      sum += ps.extended[j];
      if (sum > ps.extended[i]) {
        throw std::invalid_argument("cusp " + spec.to_string() +
                                    ": no consistent unibranch proximity assignment (block of point " +
                                    std::to_string(i + 1) + " overshoots)");
      }
      ps.prox[j].push_back(i);
      ++j;
    }
  }

  for (int j = 1; j < ps.size(); ++j) {
    if (ps.prox[j].size() > 2) {
      throw std::invalid_argument("cusp " + spec.to_string() + ": point " + std::to_string(j + 1) +
                                  " is proximate to more than two points (not unibranch)");
    }
    // Consecutive blocks put j-1 in prox[j] and list an optional earlier
    // owner first.
    if (ps.prox[j].back() != j - 1) {
      throw std::invalid_argument("cusp " + spec.to_string() + ": point " + std::to_string(j + 1) +
                                  " is not proximate to its predecessor");
    }
  }
  return ps;
}

namespace {

// Component indices of the tree (exceptional curves 0..s-1, C' = s)
// reachable from `start` with `removed` deleted.
std::vector<int> component_of(const std::vector<std::vector<int>>& tree, int start, int removed) {
  std::vector<int> seen;
  std::vector<bool> visited(tree.size(), false);
  visited[removed] = true;
  std::deque<int> queue = {start};
  visited[start] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    seen.push_back(v);
    for (int w : tree[v]) {
      if (!visited[w]) {
        visited[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<int> path_between(const std::vector<std::vector<int>>& tree, int from, int to) {
  std::vector<int> parent(tree.size(), -1);
  std::deque<int> queue = {from};
  parent[from] = from;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : tree[v]) {
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int LocalResolution::eta() const {
  int total = 0;
  for (int e : eta_per_stage) total += e;
  return total;
}

LocalResolution resolve_cusp(const CuspSpec& spec) {
  LocalResolution res;
  res.proximity = proximity_structure(spec);
  const ProximityStructure& ps = res.proximity;
  const int s = ps.size();

  res.weights.assign(s, 1);
  for (int j = 0; j < s; ++j) {
    for (int i : ps.prox[j]) res.weights[i] += 1;
  }
  if (res.weights[s - 1] != 1) {
    throw std::logic_error("last exceptional component is not a (-1)-curve");
  }

  // E_i and E_j stay adjacent unless a later center separates them.
  res.adjacency.assign(s, {});
  for (int j = 1; j < s; ++j) {
    for (int i : ps.prox[j]) {
      bool separated = false;
      for (int k = j + 1; k < s && !separated; ++k) {
        const auto& pk = ps.prox[k];
        separated = std::find(pk.begin(), pk.end(), i) != pk.end() &&
                    std::find(pk.begin(), pk.end(), j) != pk.end();
      }
      if (!separated) {
        res.adjacency[i].push_back(j);
        res.adjacency[j].push_back(i);
      }
    }
  }
  res.d0 = s - 1;

  if (!ps.satellite(s - 1)) {
    throw std::logic_error("cusp " + spec.to_string() + ": final blow-up is not a satellite point");
  }

  // The blow-up at the cusp itself counts as subdivisional.
  res.omega = 1;
  for (int j = 1; j < s; ++j) {
    if (ps.satellite(j)) res.omega += 1;
  }

  // A stage ends where a satellite run ends.
  std::vector<int> stage_end;
  for (int j = 1; j < s; ++j) {
    if (ps.satellite(j) && (j == s - 1 || ps.free_point(j + 1))) stage_end.push_back(j);
  }
  res.h = static_cast<int>(stage_end.size());
  for (int i = 0; i < res.h; ++i) {
    int begin = (i == 0) ? 1 : stage_end[i - 1] + 1;
    int eta_i = 0;
    for (int j = begin; j <= stage_end[i]; ++j) {
      if (ps.free_point(j)) eta_i += 1;
    }
    res.eta_per_stage.push_back(eta_i);
  }

  // Tree on the exceptional components plus C' (vertex s) hanging on D_0.
  std::vector<std::vector<int>> tree = res.adjacency;
  tree.emplace_back();
  tree[res.d0].push_back(s);
  tree[s].push_back(res.d0);

  for (int v = 0; v < s; ++v) {
    std::size_t expected = (v == res.d0 || std::binary_search(stage_end.begin(), stage_end.end() - 1, v)) ? 3 : 2;
    if (tree[v].size() > expected) {
      throw std::logic_error("cusp " + spec.to_string() + ": dual graph is not a comb at component " +
                             std::to_string(v + 1));
    }
  }

  for (int i = 0; i < res.h; ++i) {
    int from = (i == 0) ? 0 : stage_end[i - 1];
    int to = stage_end[i];
    int next = (i + 1 < res.h) ? stage_end[i + 1] : s;  // next spine vertex or C'

    std::vector<int> path = path_between(tree, from, to);
    path.pop_back();
    res.a_vertices.push_back(path);

    std::vector<int> b;
    std::vector<bool> claimed(tree.size(), false);
    for (int v : component_of(tree, from, to)) claimed[v] = true;
    for (int v : component_of(tree, next, to)) claimed[v] = true;
    int attach = -1;
    for (int w : tree[to]) {
      if (!claimed[w]) {
        if (attach >= 0) {
          throw std::logic_error("cusp " + spec.to_string() + ": ambiguous tooth at stage " +
                                 std::to_string(i + 1));
        }
        attach = w;
      }
    }
    if (attach < 0) {
      throw std::logic_error("cusp " + spec.to_string() + ": empty tooth at stage " + std::to_string(i + 1));
    }
    // Orient the tooth with the spine-adjacent component first.
    for (int v = attach, prev = to; v >= 0;) {
      b.push_back(v);
      int step = -1;
      for (int w : tree[v]) {
        if (w != prev) step = w;
      }
      prev = v;
      v = step;
    }
    res.b_vertices.push_back(b);
  }

  auto to_chain = [&](const std::vector<int>& vs) {
    std::vector<Int> w;
    w.reserve(vs.size());
    for (int v : vs) w.push_back(res.weights[v]);
    return LinearChain(std::move(w));
  };
  for (int i = 0; i < res.h; ++i) {
    res.a_chains.push_back(to_chain(res.a_vertices[i]));
    res.b_chains.push_back(to_chain(res.b_vertices[i]));
  }

  res.delta = 0;
  res.msum_sq = 0;
  for (const Int& mi : ps.extended) {
    res.delta += mi * (mi - 1) / 2;
    res.msum_sq += mi * mi;
  }
  return res;
}

CresVerdict check_cres(const LocalResolution& res) {
  for (int i = 0; i < res.h; ++i) {
    const LinearChain& a = res.a_chains[i];
    const LinearChain& b = res.b_chains[i];
    int eta_i = res.eta_per_stage[i];
    CresVerdict fail;
    fail.pass = false;
    fail.failing_stage = i + 1;
    if (eta_i < 1 || !b.admissible() || !a.admissible()) {
      fail.detail = "stage " + std::to_string(i + 1) + ": degenerate stage data";
      return fail;
    }
    if (a != star(tw(eta_i), adjoint(b))) {
      fail.detail = "stage " + std::to_string(i + 1) + ": A = " + a.to_string() +
                    " != tw(eta) * adjoint(B) = " + star(tw(eta_i), adjoint(b)).to_string();
      return fail;
    }
    if (adjoint(a) != appended(b, eta_i + 1)) {
      fail.detail = "stage " + std::to_string(i + 1) + ": adjoint(A) = " + adjoint(a).to_string() +
                    " != [B, eta+1] = " + appended(b, eta_i + 1).to_string();
      return fail;
    }
  }
  return CresVerdict{};
}

Int delta_invariant(const CuspSpec& spec) {
  ProximityStructure ps = proximity_structure(spec);
  Int delta = 0;
  for (const Int& mi : ps.extended) delta += mi * (mi - 1) / 2;
  return delta;
}

}  // namespace cuspcalc
