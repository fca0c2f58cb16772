#pragma once

#include "presentations.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace twobridge {

// sum c_i (t^sigma_i + t^-sigma_i) - 2 sum c_i
inline LaurentPoly butterfly_polynomial(const I1Presentation &p) {
  LaurentPoly r;
  Int total = 0;
  for (std::size_t i = 0; i < p.n(); ++i) {
    Int c(p.cs()[i]);
    r.add_term(p.sigmas()[i], c);
    r.add_term(-p.sigmas()[i], c);
    total += c;
  }
  r.add_term(0, Int(-2 * total));
  return r;
}

struct AxisLinking {
  Int lk_K, lk_aK;
};

inline AxisLinking axis_linking(const I1Presentation &p) {
  AxisLinking r{0, 0};
  for (std::size_t i = 0; i < p.n(); ++i) {
    r.lk_K += Int(p.eps()[i] - 1) * p.alphas()[i];
    r.lk_aK += Int(p.eps()[i]) * p.alphas()[i];
  }
  return r;
}

// b = 0: the butterfly link of K_n is isotopic to that of K_{n-1}
inline std::optional<I1Presentation> reduce_if_b_zero(const I1Presentation &p) {
  if (p.b() != 0 || p.n() < 2) return std::nullopt;
  std::vector<long> a(p.alphas().begin(), p.alphas().end() - 1), c(p.cs().begin(), p.cs().end() - 1);
  return I1Presentation(a, c);
}

enum class SliceVerdict { NotEquivariantlySlice, Inconclusive };
enum class Knot { K, aK };

struct AxisLinkWitness {
  Int value;
  Knot which;
};
struct ReducedAxisLinkWitness {
  int depth;
  Int value;
  Knot which;
};
struct NullityWitness {
  Int p2;
};

struct SliceObstructionCertificate {
  SliceVerdict verdict = SliceVerdict::Inconclusive;
  std::variant<std::monostate, AxisLinkWitness, ReducedAxisLinkWitness, NullityWitness> witness;
  std::vector<I1Presentation> trace;
};

inline SliceObstructionCertificate equivariant_slice_obstruction(const I1Presentation &pres) {
  SliceObstructionCertificate cert;
  std::optional<I1Presentation> cur = pres;
  for (int depth = 0; cur; ++depth) {
    if (depth > 2) throw invariant_violation("slice obstruction: reduction deeper than 2 at " + pres.str());
    cert.trace.push_back(*cur);
    AxisLinking lk = axis_linking(*cur);
    std::optional<std::pair<Int, Knot>> hit;
    if (lk.lk_K != 0)
      hit = {lk.lk_K, Knot::K};
    else if (lk.lk_aK != 0)
      hit = {lk.lk_aK, Knot::aK};
    if (hit) {
      cert.verdict = SliceVerdict::NotEquivariantlySlice;
      if (depth == 0)
        cert.witness = AxisLinkWitness{hit->first, hit->second};
      else
        cert.witness = ReducedAxisLinkWitness{depth, hit->first, hit->second};
      return cert;
    }
    // both vanish, so b = lk_aK - lk_K = 0
    cur = reduce_if_b_zero(*cur);
  }
  return cert;
}

struct NullityReport {
  Fraction butterfly;   // p''/q''
  Int h1_order;         // |p''|
  int nullity;          // 1 + dim H_1(Sigma; Q)
  Fraction reversed;    // p'/q' from the reversed knot list, sign-aligned with p
};

inline NullityReport nullity_obstruction(const I1Presentation &pres) {
  NullityReport r;
  r.butterfly = butterfly_fraction(pres);
  r.h1_order = boost::multiprecision::abs(r.butterfly.p);
  r.nullity = r.butterfly.p != 0 ? 1 : 2;

  const std::vector<Int> fwd = knot_entries(pres);
  const std::vector<Int> rev(fwd.rbegin(), fwd.rend());
  const Fraction k = eval_cf(fwd);
  Fraction kr = eval_cf(rev);
  // write p'/q' with the same numerator sign as p/q
  Int p1 = kr.p, q1 = kr.q;
  if ((p1 < 0) != (k.p < 0)) {
    p1 = -p1;
    q1 = -q1;
  }
  r.reversed.p = p1;
  r.reversed.q = q1;
  const Int ap = boost::multiprecision::abs(k.p);
  if (p1 != k.p || mod_pos(k.q * q1 + 1, ap) != 0)
    throw invariant_violation("reversal identity fails for " + pres.str());

  // p''/q'' against -b + q'/p': same numerator, denominators inverse mod p''
  Fraction alt = Fraction(-pres.b()) + Fraction(q1, p1);
  const std::vector<Int> bf = butterfly_entries(pres);
  if (alt != eval_cf(std::vector<Int>(bf.rbegin(), bf.rend())))
    throw invariant_violation("butterfly reversal mismatch for " + pres.str());
  Int pa = alt.p, qa = alt.q;
  if ((pa < 0) != (r.butterfly.p < 0)) {
    pa = -pa;
    qa = -qa;
  }
  if (pa != r.butterfly.p || (r.h1_order > 1 && mod_pos(r.butterfly.q * qa - 1, r.h1_order) != 0))
    throw invariant_violation("p''/q'' identity fails for " + pres.str());
  if (r.butterfly.p == 0 || r.butterfly.p % 2 != 0)
    throw invariant_violation("butterfly numerator must be even and non-zero for " + pres.str());
  return r;
}

inline const char *to_string(SliceVerdict v) {
  return v == SliceVerdict::NotEquivariantlySlice ? "NotEquivariantlySlice" : "Inconclusive";
}
inline const char *to_string(Knot k) { return k == Knot::K ? "K" : "aK"; }

} // namespace twobridge
