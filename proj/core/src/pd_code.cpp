#include "knotgrid/pd_code.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knotgrid {

namespace {

int wrap(int label, int n) { return (label - 1) % n + 1; }

int successor(int edge, int n) { return edge % n + 1; }

// Over-strand direction at a crossing (a,b,c,d): true when it runs b -> d.
// The only ambiguous case (both b->d and d->b look consecutive) is the
// one-crossing kink, where the direction not already used by the
// under-strand transition a -> c wins.
bool over_runs_forward(const std::array<int, 4>& t, int n) {
  bool fwd = t[3] == successor(t[1], n);
  bool bwd = t[1] == successor(t[3], n);
  if (fwd && bwd) return !(t[1] == t[0] && t[3] == t[2]);
  if (!fwd && !bwd) throw std::invalid_argument("pd code: over-strand labels not consecutive");
  return fwd;
}

}  // namespace

PDCode torus_knot_pd(int q) {
  if (q < 3 || q % 2 == 0) {
    throw std::invalid_argument(
        q % 2 == 0 ? "torus_knot_pd: even braid parameter yields a 2-component link"
                   : "torus_knot_pd: braid parameter must be at least 3");
  }
  PDCode pd;
  const int n = 2 * q;
  pd.crossings.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    pd.crossings.push_back({wrap(2 * i + 1, n), wrap(2 * i + q + 1, n),
                            wrap(2 * i + 2, n), wrap(2 * i + q + 2, n)});
  }
  return pd;
}

PDDiagnostics validate_pd(const PDCode& pd) {
  PDDiagnostics diag;
  auto fail = [&diag](const std::string& what) {
    diag.pass = false;
    diag.violations.push_back(what);
  };

  if (pd.crossings.empty()) return diag;  // crossingless unknot
  const int n = pd.edge_count();

  std::map<int, int> count;
  for (const auto& t : pd.crossings)
    for (int e : t) count[e] += 1;
  for (int e = 1; e <= n; ++e) {
    if (count.find(e) == count.end() || count[e] != 2) {
      fail("label multiplicity: label " + std::to_string(e) +
           " appears " + std::to_string(count[e]) + " times, expected 2");
      return diag;
    }
  }
  if (static_cast<int>(count.size()) != n) {
    fail("label multiplicity: labels outside 1.." + std::to_string(n));
    return diag;
  }

  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& t = pd.crossings[i];
    if (t[2] != successor(t[0], n)) {
      fail("under-strand successor: crossing " + std::to_string(i) +
           " exits at " + std::to_string(t[2]) + ", expected " +
           std::to_string(successor(t[0], n)));
      return diag;
    }
  }

  // Single component: every transition e -> e+1 along the traversal must be
  // realized by exactly one crossing passage (one under, one over per
  // crossing). A split link leaves some transition uncovered.
  std::vector<int> covered(static_cast<std::size_t>(n) + 1, 0);
  try {
    for (const auto& t : pd.crossings) {
      covered[static_cast<std::size_t>(t[0])] += 1;
      covered[static_cast<std::size_t>(over_runs_forward(t, n) ? t[1] : t[3])] += 1;
    }
  } catch (const std::invalid_argument& e) {
    fail(std::string("component closure: ") + e.what());
    return diag;
  }
  for (int e = 1; e <= n; ++e) {
    if (covered[static_cast<std::size_t>(e)] != 1) {
      fail("component closure: transition " + std::to_string(e) + " -> " +
           std::to_string(successor(e, n)) +
           " realized " + std::to_string(covered[static_cast<std::size_t>(e)]) +
           " times; diagram is not a single closed component");
      return diag;
    }
  }
  return diag;
}

std::vector<int> crossing_signs(const PDCode& pd) {
  PDDiagnostics diag = validate_pd(pd);
  if (!diag.pass) {
    throw std::invalid_argument("crossing_signs: invalid pd code: " + diag.violations.front());
  }
  const int n = pd.edge_count();
  std::vector<int> signs;
  signs.reserve(pd.crossings.size());
  for (const auto& t : pd.crossings) {
    signs.push_back(over_runs_forward(t, n) ? -1 : +1);
  }
  return signs;
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (int s : crossing_signs(pd)) w += s;
  return w;
}

DiagramFaces trace_faces(const PDCode& pd) {
  const int c = static_cast<int>(pd.crossings.size());
  if (c == 0) throw std::invalid_argument("trace_faces: crossingless diagram has no crossings");
  PDDiagnostics diag = validate_pd(pd);
  if (!diag.pass) {
    throw std::invalid_argument("trace_faces: invalid pd code: " + diag.violations.front());
  }

  // slots[e] = the at most two darts carrying edge e
  std::map<int, std::vector<std::pair<int, int>>> slots;
  for (int ci = 0; ci < c; ++ci)
    for (int p = 0; p < 4; ++p) {
      slots[pd.crossings[static_cast<std::size_t>(ci)][static_cast<std::size_t>(p)]].push_back({ci, p});
    }

  auto other_slot = [&](int ci, int p) {
    const auto& s = slots[pd.crossings[static_cast<std::size_t>(ci)][static_cast<std::size_t>(p)]];
    return (s[0] == std::pair<int, int>{ci, p}) ? s[1] : s[0];
  };

  auto dart = [](int ci, int p) { return static_cast<std::size_t>(ci) * 4 + static_cast<std::size_t>(p); };

  DiagramFaces out;
  out.face_of_dart.assign(static_cast<std::size_t>(c) * 4, -1);
  for (int ci = 0; ci < c; ++ci) {
    for (int p = 0; p < 4; ++p) {
      if (out.face_of_dart[dart(ci, p)] != -1) continue;
      std::vector<std::pair<int, int>> face;
      int fi = static_cast<int>(out.faces.size());
      std::pair<int, int> cur{ci, p};
      while (out.face_of_dart[dart(cur.first, cur.second)] == -1) {
        out.face_of_dart[dart(cur.first, cur.second)] = fi;
        face.push_back(cur);
        auto [oc, op] = other_slot(cur.first, cur.second);
        cur = {oc, (op + 1) % 4};
      }
      out.faces.push_back(std::move(face));
    }
  }

  if (static_cast<int>(out.faces.size()) != c + 2) {
    throw std::invalid_argument("trace_faces: face count " + std::to_string(out.faces.size()) +
                                " does not match a planar knot diagram (expected " +
                                std::to_string(c + 2) + ")");
  }

  // Checkerboard coloring: corners p and p+1 around any crossing lie in
  // faces of opposite colors. Propagate until fixed, then verify.
  out.color.assign(out.faces.size(), -1);
  out.color[static_cast<std::size_t>(out.face_at(0, 0))] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ci = 0; ci < c; ++ci) {
      for (int p = 0; p < 4; ++p) {
        int u = out.face_at(ci, p);
        int v = out.face_at(ci, (p + 1) % 4);
        int& cu = out.color[static_cast<std::size_t>(u)];
        int& cv = out.color[static_cast<std::size_t>(v)];
        if (cu != -1 && cv == -1) { cv = 1 - cu; changed = true; }
        if (cv != -1 && cu == -1) { cu = 1 - cv; changed = true; }
      }
    }
  }
  for (int ci = 0; ci < c; ++ci) {
    for (int p = 0; p < 4; ++p) {
      int cu = out.color[static_cast<std::size_t>(out.face_at(ci, p))];
      int cv = out.color[static_cast<std::size_t>(out.face_at(ci, (p + 1) % 4))];
      if (cu == -1 || cu == cv) {
        throw std::invalid_argument("trace_faces: diagram is not checkerboard colorable");
      }
    }
  }
  return out;
}

}  // namespace knotgrid
