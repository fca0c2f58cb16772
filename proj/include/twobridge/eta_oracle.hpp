#pragma once

#include "presentations.hpp"

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace twobridge {

// Fundamental domain of the infinite cyclic cover of the complement of the unknotted
// component, cut along a lift of its spanning disk. Slots 1..m sit on both edges;
// top:k and bottom:k are identified by the deck translation.
enum class Edge { top, bottom };

struct StripEnd {
  Edge edge;
  int slot;
  friend bool operator==(const StripEnd &a, const StripEnd &b) { return a.edge == b.edge && a.slot == b.slot; }
  friend bool operator<(const StripEnd &a, const StripEnd &b) {
    return a.slot != b.slot ? a.slot < b.slot : a.edge < b.edge;
  }
};

struct StripArc {
  std::array<StripEnd, 2> ends; // listed order
};

struct StripCrossing {
  int over, under;
  int sign; // with both arcs run from first listed end to second
  int box;  // twist box index (1-based), 0 outside boxes
  friend bool operator==(const StripCrossing &a, const StripCrossing &b) {
    return a.over == b.over && a.under == b.under && a.sign == b.sign && a.box == b.box;
  }
};

struct StripDiagram {
  int slots = 0;
  std::vector<StripArc> arcs;
  std::vector<StripCrossing> crossings;
  int initial_arc = 0;
  int initial_dir = 1; // +1: run first listed end -> second

  friend bool operator==(const StripDiagram &a, const StripDiagram &b) {
    if (a.slots != b.slots || a.initial_arc != b.initial_arc || a.initial_dir != b.initial_dir) return false;
    if (a.arcs.size() != b.arcs.size() || a.crossings != b.crossings) return false;
    for (std::size_t i = 0; i < a.arcs.size(); ++i)
      if (!(a.arcs[i].ends[0] == b.arcs[i].ends[0]) || !(a.arcs[i].ends[1] == b.arcs[i].ends[1])) return false;
    return true;
  }
};

namespace detail {

inline int sgn(long v) { return (v > 0) - (v < 0); }

// top end first; two ends on one edge are listed left to right
inline std::array<StripEnd, 2> listed_order(StripEnd a, StripEnd b) {
  if (a.edge != b.edge) return a.edge == Edge::top ? std::array{a, b} : std::array{b, a};
  return a.slot < b.slot ? std::array{a, b} : std::array{b, a};
}

inline void validate(const StripDiagram &d) {
  if (d.slots < 1) throw domain_error("strip: slots must be positive");
  if (static_cast<int>(d.arcs.size()) != d.slots) throw domain_error("strip: need exactly one arc per slot pair");
  std::map<StripEnd, int> used;
  for (std::size_t i = 0; i < d.arcs.size(); ++i)
    for (auto &e : d.arcs[i].ends) {
      if (e.slot < 1 || e.slot > d.slots) throw domain_error("strip: slot out of range on arc " + std::to_string(i));
      if (!used.emplace(e, static_cast<int>(i)).second)
        throw domain_error("strip: slot " + std::to_string(e.slot) + " used twice on one edge");
    }
  int n = static_cast<int>(d.arcs.size());
  for (auto &c : d.crossings)
    if (c.over < 0 || c.over >= n || c.under < 0 || c.under >= n || (c.sign != 1 && c.sign != -1))
      throw domain_error("strip: bad crossing");
  if (d.initial_arc < 0 || d.initial_arc >= n || (d.initial_dir != 1 && d.initial_dir != -1))
    throw domain_error("strip: bad start");
}

} // namespace detail

// Layout: the rail (label 0) enters top-right, runs left along the middle of the strip.
// The walk then climbs |alpha_i|/2 arcs per group; the last arc of group i (label sigma_i)
// runs along the rail through box i, twisting 2|c_i| times. A final group returns to label 1.
// Arc j runs from slot j to slot j+1; an arc joining opposite edges passes over the rail once.
inline StripDiagram build_strip(const I1Presentation &pres) {
  std::vector<long> label{0};
  std::vector<int> box_of{0};
  long cur = 0;
  for (std::size_t i = 0; i < pres.n(); ++i) {
    int s = detail::sgn(pres.alphas()[i]);
    long k = std::labs(pres.alphas()[i]) / 2;
    for (long j = 1; j <= k; ++j) {
      cur += s;
      label.push_back(cur);
      box_of.push_back(j == k ? static_cast<int>(i + 1) : 0);
    }
  }
  while (cur != 1) {
    cur += cur < 1 ? 1 : -1;
    label.push_back(cur);
    box_of.push_back(0);
  }
  const int m = static_cast<int>(label.size());
  StripDiagram d;
  d.slots = m;
  std::vector<int> dir(m);
  for (int j = 0; j < m; ++j) {
    long in = label[j] - label[(j + m - 1) % m], out = label[(j + 1) % m] - label[j];
    StripEnd start{in > 0 ? Edge::bottom : Edge::top, j == 0 ? m : j};
    StripEnd end{out > 0 ? Edge::top : Edge::bottom, j + 1};
    auto lst = detail::listed_order(start, end);
    d.arcs.push_back({lst});
    dir[j] = lst[0] == start ? 1 : -1;
  }
  d.initial_arc = 0;
  d.initial_dir = dir[0];

  // listed horizontal direction along the rail: +1 rightward
  const int rail_listed_x = dir[0] > 0 ? -1 : 1;
  auto cross2 = [](std::array<int, 2> a, std::array<int, 2> b) { return a[0] * b[1] - a[1] * b[0]; };
  for (int j = 1; j < m; ++j) {
    const StripArc &a = d.arcs[j];
    if (box_of[j]) {
      std::size_t i = box_of[j] - 1;
      int h = -detail::sgn(pres.cs()[i]); // box twist handedness
      int arc_listed_x = dir[j]; // arc travels left to right along the rail
      int s = arc_listed_x == rail_listed_x ? h : -h;
      for (long k = 0; k < 2 * std::labs(pres.cs()[i]); ++k)
        d.crossings.push_back(k % 2 == 0 ? StripCrossing{0, j, s, box_of[j]} : StripCrossing{j, 0, s, box_of[j]});
    }
    if (a.ends[0].edge != a.ends[1].edge) {
      // listed from the top edge down, over the rail
      int s = cross2({0, -1}, {rail_listed_x, 0});
      d.crossings.push_back({j, 0, s > 0 ? 1 : -1, 0});
    }
  }
  detail::validate(d);
  return d;
}

inline std::string print_strip(const StripDiagram &d) {
  auto end = [](const StripEnd &e) { return std::string(e.edge == Edge::top ? "top:" : "bottom:") + std::to_string(e.slot); };
  std::ostringstream os;
  os << "slots " << d.slots << "\n";
  for (std::size_t i = 0; i < d.arcs.size(); ++i) os << "arc " << i << " " << end(d.arcs[i].ends[0]) << " " << end(d.arcs[i].ends[1]) << "\n";
  for (auto &c : d.crossings) {
    os << "cross " << c.over << " " << c.under << " " << (c.sign > 0 ? "+1" : "-1");
    if (c.box) os << " box " << c.box;
    os << "\n";
  }
  os << "start " << d.initial_arc << " " << (d.initial_dir > 0 ? "+1" : "-1") << "\n";
  return os.str();
}

inline StripDiagram parse_strip(const std::string &text) {
  StripDiagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_slots = false, have_start = false;
  std::map<int, StripArc> arcs;
  auto fail = [&](const std::string &why) -> void { throw domain_error("strip line " + std::to_string(lineno) + ": " + why); };
  auto parse_end = [&](const std::string &tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) fail("expected edge:slot, got '" + tok + "'");
    std::string e = tok.substr(0, colon);
    if (e != "top" && e != "bottom") fail("unknown edge '" + e + "'");
    int slot = 0;
    try {
      slot = std::stoi(tok.substr(colon + 1));
    } catch (const std::exception &) {
      fail("bad slot in '" + tok + "'");
    }
    return StripEnd{e == "top" ? Edge::top : Edge::bottom, slot};
  };
  std::map<StripEnd, int> used;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "slots") {
      if (!(ls >> d.slots) || d.slots < 1) fail("bad slot count");
      have_slots = true;
    } else if (kw == "arc") {
      int id;
      std::string a, b;
      if (!(ls >> id >> a >> b)) fail("expected: arc <id> <edge>:<slot> <edge>:<slot>");
      StripArc arc{{parse_end(a), parse_end(b)}};
      for (auto &e : arc.ends) {
        if (have_slots && (e.slot < 1 || e.slot > d.slots)) fail("slot out of range");
        if (!used.emplace(e, id).second) fail("slot " + std::to_string(e.slot) + " used twice on one edge");
      }
      if (!arcs.emplace(id, arc).second) fail("duplicate arc id " + std::to_string(id));
    } else if (kw == "cross") {
      StripCrossing c{0, 0, 0, 0};
      if (!(ls >> c.over >> c.under >> c.sign) || (c.sign != 1 && c.sign != -1)) fail("expected: cross <over> <under> <+1|-1>");
      std::string extra;
      if (ls >> extra) {
        if (extra != "box" || !(ls >> c.box) || c.box < 1) fail("expected: box <index>");
      }
      d.crossings.push_back(c);
    } else if (kw == "start") {
      if (!(ls >> d.initial_arc >> d.initial_dir) || (d.initial_dir != 1 && d.initial_dir != -1)) fail("expected: start <id> <+1|-1>");
      have_start = true;
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!have_slots) throw domain_error("strip: missing slots line");
  if (!have_start) throw domain_error("strip: missing start line");
  int k = 0;
  for (auto &[id, arc] : arcs) {
    if (id != k++) throw domain_error("strip: arc ids must be 0..n-1");
    d.arcs.push_back(arc);
  }
  for (auto &c : d.crossings)
    if (c.over >= k || c.under >= k || c.over < 0 || c.under < 0)
      throw domain_error("strip: crossing references missing arc");
  if (static_cast<int>(used.size()) != 2 * d.slots) throw domain_error("strip: unmatched slot");
  detail::validate(d);
  return d;
}

struct LabeledStrip {
  StripDiagram diagram;
  std::vector<long> label;
  std::vector<int> dir; // +1 when run in listed order
};

// Walk from the initial arc; crossing into an arc at the lower edge raises the label.
inline LabeledStrip label_strip(const StripDiagram &d) {
  detail::validate(d);
  const int n = static_cast<int>(d.arcs.size());
  std::map<StripEnd, std::pair<int, int>> at;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2; ++k) at[d.arcs[i].ends[k]] = {i, k};
  LabeledStrip out{d, std::vector<long>(n, 0), std::vector<int>(n, 0)};
  int arc = d.initial_arc, dir = d.initial_dir;
  long lab = 0;
  out.dir[arc] = dir;
  int seen = 1;
  for (int steps = 0; steps <= n; ++steps) {
    StripEnd a = d.arcs[arc].ends[dir > 0 ? 1 : 0];
    StripEnd b{a.edge == Edge::top ? Edge::bottom : Edge::top, a.slot};
    auto it = at.find(b);
    if (it == at.end()) throw domain_error("strip: walk leaves the diagram");
    lab += b.edge == Edge::bottom ? 1 : -1;
    arc = it->second.first;
    dir = it->second.second == 0 ? 1 : -1;
    if (arc == d.initial_arc) {
      if (dir != d.initial_dir || lab != 0) throw domain_error("strip: walk does not close up");
      if (seen != n) throw domain_error("strip: walk closes before visiting every arc");
      return out;
    }
    if (out.dir[arc] != 0) throw domain_error("strip: walk revisits an arc");
    out.dir[arc] = dir;
    out.label[arc] = lab;
    ++seen;
  }
  throw domain_error("strip: walk never closes");
}

struct CensusEntry {
  int over, under;
  long d;
  int eps;
  int box;
};

inline std::vector<CensusEntry> strip_census(const LabeledStrip &s) {
  std::vector<CensusEntry> out;
  for (auto &c : s.diagram.crossings) {
    int eps = c.sign * s.dir[c.over] * s.dir[c.under];
    out.push_back({c.over, c.under, s.label[c.over] - s.label[c.under], eps, c.box});
  }
  return out;
}

// eta = sum_{d != 0} eps t^d, shifted so eta(1) = 0
inline LaurentPoly eta_from_strip(const LabeledStrip &s) {
  LaurentPoly e;
  for (auto &c : strip_census(s))
    if (c.d != 0) e.add_term(c.d, Int(c.eps));
  Int one = e.at_one();
  e.add_term(0, Int(-one));
  return e;
}

} // namespace twobridge
