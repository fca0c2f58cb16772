#pragma once

#include "presentations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace twobridge {

// Edges are 0-based internally; e lists the four edges counterclockwise starting
// at the incoming under edge. sign = +1 iff e[3] is the incoming over edge.
struct PDCrossing {
  std::array<int, 4> e;
  int sign;
  friend bool operator==(const PDCrossing &a, const PDCrossing &b) { return a.e == b.e && a.sign == b.sign; }
};

struct OrientedPD {
  std::vector<PDCrossing> crossings;
  int num_edges = 0;
  std::vector<std::vector<int>> components; // edges in traversal order
  int free_loops = 0;                       // crossingless unknotted components

  int component_count() const { return static_cast<int>(components.size()) + free_loops; }
  friend bool operator==(const OrientedPD &a, const OrientedPD &b) {
    return a.crossings == b.crossings && a.num_edges == b.num_edges && a.components == b.components && a.free_loops == b.free_loops;
  }
};

enum class OrientationPolicy {
  first_seen,        // each component oriented as first traversed
  reverse_second,    // as first_seen with the second component reversed
  band_antiparallel, // strands 2 and 3 at the right end run in opposite directions
};

using IntMatrix = std::vector<std::vector<Int>>;

struct SeifertData {
  int circles = 0;
  int crossings = 0;
  int components = 0;
  IntMatrix V; // size crossings - circles + 1
};

namespace detail {

enum : int { NE = 0, NW = 1, SW = 2, SE = 3 }; // counterclockwise

inline int opp(int arm) { return (arm + 2) % 4; }

struct Plat {
  std::vector<int> tau;  // over strand runs SW-NE when positive
  std::vector<int> conn; // arm c*4+a -> arm
  int loops = 0;
  std::array<int, 2> right_ends{-1, -1}; // arms at positions 2 and 3 before closure, -1 if none
};

// Open strand ends are arms (>= 0) or left-cap tokens (< 0). A token class collects
// the arms attached along one crossingless path.
inline Plat build_plat(const std::vector<Int> &entries) {
  if (entries.empty()) throw domain_error("plat: empty continued fraction");
  Plat P;
  std::vector<int> parent{0, 1};
  std::vector<std::vector<int>> attached(2);
  auto find = [&](int t) {
    while (parent[t] != t) t = parent[t] = parent[parent[t]];
    return t;
  };
  auto connect = [&](int a, int b) {
    P.conn[a] = b;
    P.conn[b] = a;
  };
  auto attach = [&](int open, int arm) {
    if (open >= 0)
      connect(open, arm);
    else
      attached[find(-open - 1)].push_back(arm);
  };
  auto join = [&](int u, int v) {
    if (u >= 0 && v >= 0) return connect(u, v);
    if (u >= 0) std::swap(u, v);
    if (v >= 0) return attach(u, v);
    int a = find(-u - 1), b = find(-v - 1);
    if (a == b) {
      ++P.loops;
      return;
    }
    parent[a] = b;
    attached[b].insert(attached[b].end(), attached[a].begin(), attached[a].end());
    attached[a].clear();
  };
  std::array<int, 5> open{0, -1, -1, -2, -2};
  std::size_t total = 0;
  for (auto &a : entries) {
    if (boost::multiprecision::abs(a) > 100000) throw domain_error("plat: twist region too large");
    total += boost::multiprecision::abs(a).convert_to<std::size_t>();
  }
  P.conn.assign(4 * total, -1);
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const int k = j % 2 == 0 ? 2 : 3;
    const int s = (entries[j] > 0 ? 1 : -1) * (j % 2 == 0 ? 1 : -1);
    const long count = boost::multiprecision::abs(entries[j]).convert_to<long>();
    for (long r = 0; r < count; ++r) {
      const int c = static_cast<int>(P.tau.size());
      P.tau.push_back(s);
      attach(open[k], 4 * c + NW);
      attach(open[k + 1], 4 * c + SW);
      open[k] = 4 * c + NE;
      open[k + 1] = 4 * c + SE;
    }
  }
  P.right_ends = {open[2], open[3]};
  // the closure never caps the pair twisted last
  if (entries.size() % 2) {
    join(open[1], open[2]);
    join(open[3], open[4]);
  } else {
    join(open[2], open[3]);
    join(open[1], open[4]);
  }
  for (int t = 0; t < 2; ++t) {
    if (find(t) != t) continue;
    if (attached[t].size() == 2)
      connect(attached[t][0], attached[t][1]);
    else if (!attached[t].empty())
      throw invariant_violation("plat: dangling strand");
  }
  for (int v : P.conn)
    if (v < 0) throw invariant_violation("plat: unconnected arm");
  return P;
}

// Per-crossing arm roles; arms indexed counterclockwise.
struct ArmRoles {
  int ui, oi, uo, oo, eps;
};

struct ArmDiagram {
  std::vector<ArmRoles> x;
  std::vector<int> conn; // arm -> arm
  int loops = 0;
};

inline ArmDiagram arms_of(const OrientedPD &pd) {
  ArmDiagram D;
  D.loops = pd.free_loops;
  const int n = static_cast<int>(pd.crossings.size());
  D.conn.assign(4 * n, -1);
  std::vector<std::vector<int>> where(pd.num_edges);
  for (int c = 0; c < n; ++c) {
    const auto &X = pd.crossings[c];
    D.x.push_back(X.sign > 0 ? ArmRoles{0, 3, 2, 1, 1} : ArmRoles{0, 1, 2, 3, -1});
    for (int k = 0; k < 4; ++k) {
      if (X.e[k] < 0 || X.e[k] >= pd.num_edges) throw domain_error("PD: edge out of range");
      where[X.e[k]].push_back(4 * c + k);
    }
  }
  for (auto &w : where) {
    if (w.size() != 2) throw domain_error("PD: every edge must occur exactly twice");
    D.conn[w[0]] = w[1];
    D.conn[w[1]] = w[0];
  }
  return D;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Fraction-free Gaussian elimination.
inline Int bareiss_det(IntMatrix M) {
  const std::size_t n = M.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && M[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

} // namespace detail

inline OrientedPD build_plat_diagram(const std::vector<Int> &entries, OrientationPolicy orient = OrientationPolicy::first_seen) {
  using namespace detail;
  const Plat P = build_plat(entries);
  const int n = static_cast<int>(P.tau.size());
  OrientedPD pd;
  pd.free_loops = P.loops;
  // components as sequences of (crossing, in-arm)
  std::vector<std::vector<std::pair<int, int>>> comps;
  std::vector<char> seen(4 * n, 0);
  for (int c = 0; c < n; ++c)
    for (int a : {NW, SW}) {
      if (seen[4 * c + a]) continue;
      std::vector<std::pair<int, int>> comp;
      int cur = 4 * c + a;
      while (!seen[cur]) {
        int x = cur / 4, arm = cur % 4;
        seen[cur] = seen[4 * x + opp(arm)] = 1;
        comp.push_back({x, arm});
        cur = P.conn[4 * x + opp(arm)];
      }
      comps.push_back(std::move(comp));
    }
  auto comp_of_arm = [&](int arm) {
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (auto [x, a] : comps[i])
        if (4 * x + a == arm || 4 * x + opp(a) == arm) return static_cast<int>(i);
    return -1;
  };
  auto reverse_comp = [&](std::size_t i) {
    auto &comp = comps[i];
    std::vector<std::pair<int, int>> r;
    for (auto it = comp.rbegin(); it != comp.rend(); ++it) r.push_back({it->first, opp(it->second)});
    comp = std::move(r);
  };
  if (orient == OrientationPolicy::reverse_second && comps.size() > 1) reverse_comp(1);
  if (orient == OrientationPolicy::band_antiparallel && P.right_ends[0] >= 0 && P.right_ends[1] >= 0) {
    auto outgoing = [&](int arm) {
      int i = comp_of_arm(arm);
      for (auto [x, a] : comps[i])
        if (4 * x + a == arm) return false;
      return true;
    };
    if (outgoing(P.right_ends[0]) == outgoing(P.right_ends[1])) {
      int i = comp_of_arm(P.right_ends[0]), j = comp_of_arm(P.right_ends[1]);
      if (i == j) throw invariant_violation("band strands lie on one component");
      reverse_comp(static_cast<std::size_t>(j));
    }
  }
  std::vector<int> arm_edge(4 * n, -1);
  int base = 0;
  for (auto &comp : comps) {
    const int L = static_cast<int>(comp.size());
    std::vector<int> edges;
    for (int i = 0; i < L; ++i) {
      auto [x, a] = comp[i];
      arm_edge[4 * x + a] = base + i;
      arm_edge[4 * x + opp(a)] = base + (i + 1) % L;
      edges.push_back(base + i);
    }
    pd.components.push_back(std::move(edges));
    base += L;
  }
  pd.num_edges = base;
  std::vector<std::vector<int>> ins(n);
  for (auto &comp : comps)
    for (auto [x, a] : comp) ins[x].push_back(a);
  for (int c = 0; c < n; ++c) {
    auto isover = [&](int a) { return P.tau[c] > 0 ? (a == NE || a == SW) : (a == NW || a == SE); };
    int ui = isover(ins[c][0]) ? ins[c][1] : ins[c][0];
    int oi = isover(ins[c][0]) ? ins[c][0] : ins[c][1];
    PDCrossing X;
    for (int k = 0; k < 4; ++k) X.e[k] = arm_edge[4 * c + (ui + k) % 4];
    X.sign = oi == (ui + 3) % 4 ? 1 : -1;
    pd.crossings.push_back(X);
  }
  return pd;
}

inline OrientedPD knot_diagram(const I1Presentation &p) { return build_plat_diagram(knot_entries(p)); }

// The butterfly plat oriented as the boundary of the band: anti-parallel through -b.
inline OrientedPD build_lhat_diagram(const I1Presentation &p);

// A crossing whose over strand lies on a component of at most two edges gets an explicit
// trailing sign, since the numbering alone cannot orient that strand.
inline std::string to_pd_text(const OrientedPD &pd) {
  std::vector<std::size_t> len(pd.num_edges, 0);
  for (auto &c : pd.components)
    for (int e : c) len[e] = c.size();
  std::ostringstream os;
  for (auto &X : pd.crossings) {
    os << "X " << X.e[0] + 1 << " " << X.e[1] + 1 << " " << X.e[2] + 1 << " " << X.e[3] + 1;
    if (len[X.e[1]] <= 2) os << (X.sign > 0 ? " +1" : " -1");
    os << "\n";
  }
  if (pd.free_loops) os << "loops " << pd.free_loops << "\n";
  return os.str();
}

// Edges 1..E numbered consecutively along each component; orientation follows numbering.
inline OrientedPD parse_pd(const std::string &text) {
  OrientedPD pd;
  std::vector<std::array<int, 4>> xs;
  std::vector<int> signs; // 0 when not given
  std::istringstream in(text);
  std::string line;
  int lineno = 0, maxe = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "loops") {
      if (!(ls >> pd.free_loops) || pd.free_loops < 0) throw domain_error("PD line " + std::to_string(lineno) + ": bad loop count");
      continue;
    }
    std::array<int, 4> e;
    if (kw != "X" || !(ls >> e[0] >> e[1] >> e[2] >> e[3])) throw domain_error("PD line " + std::to_string(lineno) + ": expected X e1 e2 e3 e4 [+1|-1]");
    int sign = 0;
    if (std::string tok; ls >> tok) {
      if (tok != "+1" && tok != "-1") throw domain_error("PD line " + std::to_string(lineno) + ": sign must be +1 or -1");
      sign = tok == "+1" ? 1 : -1;
    }
    signs.push_back(sign);
    for (int &v : e) {
      if (v < 1) throw domain_error("PD line " + std::to_string(lineno) + ": edges are numbered from 1");
      maxe = std::max(maxe, v);
      --v;
    }
    xs.push_back(e);
  }
  pd.num_edges = maxe;
  detail::UnionFind uf(maxe);
  std::vector<int> count(maxe, 0);
  for (auto &e : xs) {
    uf.unite(e[0], e[2]);
    uf.unite(e[1], e[3]);
    for (int v : e) ++count[v];
  }
  for (int v = 0; v < maxe; ++v)
    if (count[v] != 2) throw domain_error("PD: edge " + std::to_string(v + 1) + " must occur exactly twice");
  std::map<int, std::pair<int, int>> range;
  for (int v = 0; v < maxe; ++v) {
    auto [it, fresh] = range.try_emplace(uf.find(v), v, v);
    if (!fresh) it->second.second = v;
  }
  std::vector<int> lo(maxe), hi(maxe);
  for (auto &[r, lh] : range) {
    for (int v = lh.first; v <= lh.second; ++v)
      if (uf.find(v) != r) throw domain_error("PD: component edges must be numbered consecutively");
    std::vector<int> comp;
    for (int v = lh.first; v <= lh.second; ++v) {
      lo[v] = lh.first;
      hi[v] = lh.second;
      comp.push_back(v);
    }
    pd.components.push_back(std::move(comp));
  }
  std::sort(pd.components.begin(), pd.components.end());
  auto next = [&](int v) { return v == hi[v] ? lo[v] : v + 1; };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto &e = xs[i];
    if (next(e[0]) != e[2]) throw domain_error("PD: under strand does not follow the edge numbering");
    bool fwd = next(e[3]) == e[1], bwd = next(e[1]) == e[3];
    if (!fwd && !bwd) throw domain_error("PD: over strand does not follow the edge numbering");
    int sign = fwd && bwd ? signs[i] : (fwd ? 1 : -1);
    if (sign == 0) throw domain_error("PD: crossing " + std::to_string(i + 1) + " needs an explicit sign");
    if (signs[i] != 0 && signs[i] != sign) throw domain_error("PD: crossing " + std::to_string(i + 1) + " sign contradicts the numbering");
    pd.crossings.push_back({e, sign});
  }
  return pd;
}

inline SeifertData seifert_matrix(const OrientedPD &pd) {
  using namespace detail;
  SeifertData S;
  const int n = static_cast<int>(pd.crossings.size());
  S.crossings = n;
  S.components = pd.component_count();
  if (n == 0) {
    if (pd.free_loops != 1) throw domain_error("seifert_matrix: split diagram");
    S.circles = 1;
    return S;
  }
  if (pd.free_loops) throw domain_error("seifert_matrix: split diagram");
  const ArmDiagram D = arms_of(pd);

  // faces: leave along dart, turn to the clockwise-next arm
  std::vector<int> face(4 * n, -1);
  int nf = 0;
  for (int d = 0; d < 4 * n; ++d) {
    if (face[d] >= 0) continue;
    for (int cur = d; face[cur] < 0;) {
      face[cur] = nf;
      int y = D.conn[cur];
      cur = 4 * (y / 4) + (y % 4 + 3) % 4;
    }
    ++nf;
  }
  if (nf != n + 2) throw domain_error("seifert_matrix: split diagram");

  // Seifert circles: per visit, the crossing and the side (0 left, 1 right) its band lies on
  struct Circle {
    std::vector<std::pair<int, int>> visits;
    std::vector<int> darts;
  };
  std::vector<Circle> circ;
  std::vector<int> dart_circ(4 * n, -1);
  for (int c = 0; c < n; ++c)
    for (int start : {4 * c + D.x[c].oo, 4 * c + D.x[c].uo}) {
      if (dart_circ[start] >= 0) continue;
      Circle C;
      const int id = static_cast<int>(circ.size());
      for (int cur = start; dart_circ[cur] < 0;) {
        dart_circ[cur] = id;
        C.darts.push_back(cur);
        int y = D.conn[cur], Y = y / 4, j = y % 4;
        dart_circ[y] = id;
        const ArmRoles &r = D.x[Y];
        int out, side;
        if (j == r.ui) {
          out = r.oo;
          side = r.eps > 0 ? 0 : 1;
        } else {
          out = r.uo;
          side = r.eps > 0 ? 1 : 0;
        }
        C.visits.push_back({Y, side});
        cur = 4 * Y + out;
      }
      circ.push_back(std::move(C));
    }
  S.circles = static_cast<int>(circ.size());

  // hole corners: I(c) = 2c, O(c) = 2c+1; copies: circle*2 + side
  UnionFind holes(2 * n);
  std::map<int, std::vector<int>> copies;
  for (std::size_t ci = 0; ci < circ.size(); ++ci)
    for (auto [x, s] : circ[ci].visits) copies[2 * static_cast<int>(ci) + s].push_back(x);
  for (auto &[cp, lst] : copies)
    for (std::size_t k = 0; k < lst.size(); ++k) holes.unite(2 * lst[k] + 1, 2 * lst[(k + 1) % lst.size()]);

  UnionFind pieces(2 * S.circles);
  std::vector<std::vector<int>> copies_at(n);
  for (auto &[cp, lst] : copies)
    for (int x : lst) copies_at[x].push_back(cp);
  for (int x = 0; x < n; ++x) {
    if (copies_at[x].size() != 2) throw invariant_violation("seifert: crossing not shared by two circle copies");
    pieces.unite(copies_at[x][0], copies_at[x][1]);
  }
  std::vector<int> piece_order;
  std::map<int, std::vector<int>> piece_holes;
  for (int x = 0; x < n; ++x)
    for (int k : {0, 1}) {
      int h = holes.find(2 * x + k), pc = pieces.find(copies_at[x][0]);
      auto [it, fresh] = piece_holes.try_emplace(pc);
      if (fresh) piece_order.push_back(pc);
      if (std::find(it->second.begin(), it->second.end(), h) == it->second.end()) it->second.push_back(h);
    }
  std::map<int, int> idx;
  for (int pc : piece_order) {
    auto &hs = piece_holes[pc];
    for (std::size_t k = 1; k < hs.size(); ++k) idx.emplace(hs[k], static_cast<int>(idx.size()));
  }
  const int m = static_cast<int>(idx.size());
  if (m != n - S.circles + 1) throw invariant_violation("seifert: basis has wrong rank");
  IntMatrix V2(m, std::vector<Int>(m, 0)); // twice the form
  auto add = [&](int a, int b, long v) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia != idx.end() && ib != idx.end()) V2[ia->second][ib->second] += v;
  };
  for (int x = 0; x < n; ++x) {
    int I = holes.find(2 * x), O = holes.find(2 * x + 1), e = D.x[x].eps;
    if (e > 0)
      add(I, O, 2);
    else
      add(O, I, -2);
    add(I, I, -e);
    add(O, O, -e);
  }

  // circles with bands on both sides bound a disk pushed off the surface
  for (std::size_t ci = 0; ci < circ.size(); ++ci) {
    const int cid = static_cast<int>(ci);
    if (!copies.count(2 * cid) || !copies.count(2 * cid + 1)) continue;
    std::vector<std::vector<int>> adj(nf);
    for (int d = 0; d < 4 * n; ++d)
      if (dart_circ[d] != cid) {
        adj[face[d]].push_back(face[D.conn[d]]);
      }
    std::vector<char> reach(nf, 0);
    std::vector<int> st{0};
    reach[0] = 1;
    while (!st.empty()) {
      int f = st.back();
      st.pop_back();
      for (int g : adj[f])
        if (!reach[g]) reach[g] = 1, st.push_back(g);
    }
    const int inf_side = reach[face[circ[ci].darts[0]]] ? 0 : 1;
    const int disk_side = 1 - inf_side;
    const bool up = disk_side == 0;
    const auto &vis = circ[ci].visits;
    const int L = static_cast<int>(vis.size());
    std::map<int, int> pos;
    for (int k = 0; k < L; ++k) pos[vis[k].first] = k;
    struct Chord {
      int h, p, q;
    };
    auto chords = [&](int s) {
      std::vector<Chord> out;
      const auto &lst = copies[2 * cid + s];
      for (std::size_t k = 0; k < lst.size(); ++k) {
        int a = lst[k], b = lst[(k + 1) % lst.size()];
        int h = holes.find(2 * a + 1);
        out.push_back(s == 0 ? Chord{h, pos[a], pos[b]} : Chord{h, pos[b], pos[a]});
      }
      return out;
    };
    auto inarc = [&](int p1, int p2, int q) {
      int a = ((q - p1) % L + L) % L, b = ((p2 - p1) % L + L) % L;
      return 0 < a && a < b;
    };
    for (const Chord &u : chords(disk_side))
      for (const Chord &w : chords(inf_side)) {
        if (!idx.count(u.h) || !idx.count(w.h)) continue;
        bool a1 = inarc(u.p, u.q, w.p), a2 = inarc(u.p, u.q, w.q);
        int ig = a1 == a2 ? 0 : (a1 ? 1 : -1);
        if (!ig) continue;
        if (up)
          V2[idx[w.h]][idx[u.h]] += -2 * ig;
        else
          V2[idx[u.h]][idx[w.h]] += 2 * ig;
      }
  }
  // orientation of the surface chosen so the Conway polynomial obeys the standard skein sign
  S.V.assign(m, std::vector<Int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (V2[i][j] % 2 != 0) throw invariant_violation("seifert: half-integral entry");
      S.V[i][j] = -V2[i][j] / 2;
    }
  return S;
}

// P(u) = det(u V - V^T) as a polynomial in u, by evaluation at u = 0..m and interpolation
inline LaurentPoly seifert_poly(const IntMatrix &V) {
  const std::size_t m = V.size();
  if (m == 0) return LaurentPoly(1);
  std::vector<Rational> xs, dd;
  for (std::size_t u = 0; u <= m; ++u) {
    IntMatrix M(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) M[i][j] = Int(u) * V[i][j] - V[j][i];
    xs.emplace_back(static_cast<long>(u));
    dd.emplace_back(detail::bareiss_det(std::move(M)));
  }
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t i = m; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  std::vector<Rational> coef(m + 1, 0), basis{1};
  for (std::size_t k = 0; k <= m; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coef[i] += dd[k] * basis[i];
    std::vector<Rational> nb(basis.size() + 1, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      nb[i + 1] += basis[i];
      nb[i] -= basis[i] * xs[k];
    }
    basis = std::move(nb);
  }
  LaurentPoly P;
  for (std::size_t k = 0; k <= m; ++k) {
    if (boost::multiprecision::denominator(coef[k]) != 1) throw invariant_violation("seifert_poly: non-integral coefficient");
    P.add_term(static_cast<long>(k), boost::multiprecision::numerator(coef[k]));
  }
  return P;
}

// det(V - t V^T)
inline LaurentPoly alexander_from_seifert(const IntMatrix &V) {
  LaurentPoly P = seifert_poly(V);
  return V.size() % 2 ? -P : P;
}

// det(x V - x^-1 V^T) = x^-m P(x^2), rewritten in z = x - x^-1
inline ZPoly conway_from_seifert(const IntMatrix &V) {
  const long m = static_cast<long>(V.size());
  LaurentPoly inx;
  const LaurentPoly P = seifert_poly(V);
  for (auto &[k, c] : P.terms()) inx.add_term(2 * k - m, c);
  const LaurentPoly w = LaurentPoly::var(1) - LaurentPoly::var(-1);
  LaurentPoly z;
  while (!inx.is_zero()) {
    long d = inx.max_exp();
    if (d < 0) throw invariant_violation("conway: not a polynomial in z");
    Int c = inx.coeff(d);
    z.add_term(d, c);
    inx -= LaurentPoly(c) * w.pow(static_cast<unsigned>(d));
  }
  return ZPoly(z);
}

inline ZPoly conway_polynomial(const OrientedPD &pd) {
  if (pd.crossings.empty() && pd.free_loops > 1) return ZPoly(); // split unlink
  return conway_from_seifert(seifert_matrix(pd).V);
}

inline Int determinant(const OrientedPD &pd) {
  if (pd.crossings.empty() && pd.free_loops > 1) return 0;
  const IntMatrix &V = seifert_matrix(pd).V;
  IntMatrix M = V;
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = 0; j < V.size(); ++j) M[i][j] = V[i][j] + V[j][i];
  return boost::multiprecision::abs(detail::bareiss_det(std::move(M)));
}

inline Int linking_number(const OrientedPD &pd) {
  if (pd.component_count() != 2) throw domain_error("linking_number: need exactly two components");
  std::vector<int> comp(pd.num_edges, -1);
  for (std::size_t i = 0; i < pd.components.size(); ++i)
    for (int e : pd.components[i]) comp[e] = static_cast<int>(i);
  long s = 0;
  for (auto &X : pd.crossings)
    if (comp[X.e[0]] != comp[X.e[1]]) s += X.sign;
  if (s % 2) throw invariant_violation("linking_number: odd crossing sum");
  return s / 2;
}

inline OrientedPD build_lhat_diagram(const I1Presentation &p) {
  OrientedPD pd = build_plat_diagram(butterfly_entries(p), OrientationPolicy::band_antiparallel);
  if (pd.component_count() != 2) throw invariant_violation("butterfly link of " + p.str() + " is not a 2-component link");
  if (linking_number(pd) != 0) throw invariant_violation("butterfly link of " + p.str() + " has non-zero linking number");
  return pd;
}

} // namespace twobridge
