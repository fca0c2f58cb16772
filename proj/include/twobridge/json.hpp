#pragma once

// JSON views of certificates and reports (nlohmann::json).

#include "eta_oracle.hpp"
#include "moth.hpp"

#include <nlohmann/json.hpp>

#include <limits>

namespace twobridge {

inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

// integers as JSON numbers when they fit in 64 bits, else decimal strings
inline json jnum(const Int &v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) return v.convert_to<long long>();
  return v.str();
}

inline json to_json(const SliceObstructionCertificate &c) {
  json w;
  std::visit(
      [&](auto &&v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AxisLinkWitness>)
          w = {{"kind", "AxisLink"}, {"value", jnum(v.value)}, {"which", to_string(v.which)}};
        else if constexpr (std::is_same_v<T, ReducedAxisLinkWitness>)
          w = {{"kind", "ReducedAxisLink"}, {"depth", v.depth}, {"value", jnum(v.value)}, {"which", to_string(v.which)}};
        else if constexpr (std::is_same_v<T, NullityWitness>)
          w = {{"kind", "Nullity"}, {"p2", jnum(v.p2)}};
        else
          w = nullptr;
      },
      c.witness);
  json trace = json::array();
  for (auto &p : c.trace) trace.push_back(p.str());
  return {{"verdict", to_string(c.verdict)}, {"witness", w}, {"trace", trace}};
}

inline json to_json(const NullityReport &r) {
  return {{"butterfly_fraction", r.butterfly.str()},
          {"h1_order", jnum(r.h1_order)},
          {"nullity", r.nullity},
          {"reversed_fraction", r.reversed.str()}};
}

inline json to_json(const OrderCertificate &c) {
  return {{"verdict", to_string(c.verdict)},
          {"conway_lhat", c.conway_lhat.str()},
          {"det_lhat", jnum(c.determinant_lhat)},
          {"moth_num", c.moth.num().str()},
          {"moth_den", c.moth.den().str()}};
}

// Every invariant of one presentation, recomputed from scratch.
inline json presentation_report(const I1Presentation &p) {
  const AxisLinking lk = axis_linking(p);
  const LaurentPoly eta = butterfly_polynomial(p);
  const LaurentPoly eta_strip = eta_from_strip(label_strip(build_strip(p)));
  if (eta != eta_strip) throw invariant_violation("strip oracle disagrees with the closed form for " + p.str());
  if (!lp_is_eta_admissible(eta)) throw invariant_violation("butterfly polynomial not admissible for " + p.str());
  if (lk.lk_aK - lk.lk_K != p.b()) throw invariant_violation("axis linking numbers inconsistent for " + p.str());
  const OrientedPD knot = knot_diagram(p);
  const Int det_knot = determinant(knot);
  if (det_knot != boost::multiprecision::abs(knot_fraction(p).p)) throw invariant_violation("knot determinant mismatch for " + p.str());
  const SliceObstructionCertificate slice = equivariant_slice_obstruction(p);
  const OrderCertificate order = order_certificate(p);
  return {{"presentation", p.str()},
          {"knot_fraction", knot_fraction(p).str()},
          {"butterfly_polynomial", eta.str()},
          {"axis_linking", {{"K", jnum(lk.lk_K)}, {"aK", jnum(lk.lk_aK)}}},
          {"slice_certificate", to_json(slice)},
          {"nullity", to_json(nullity_obstruction(p))},
          {"conway_knot", conway_polynomial(knot).str()},
          {"det_knot", jnum(det_knot)},
          {"conway_lhat", order.conway_lhat.str()},
          {"moth", {{"num", order.moth.num().str()}, {"den", order.moth.den().str()}}},
          {"order_certificate", to_json(order)}};
}

} // namespace twobridge
