#pragma once

#include "butterfly.hpp"
#include "diagrams.hpp"

namespace twobridge {

// Conway(L^_b)(z) / (z Conway(K)(z)) with z^2 -> 2 - t - 1/t
inline RationalFn moth_from_conway(const ZPoly &lhat, const ZPoly &knot) {
  if (!lhat.only_odd()) throw invariant_violation("moth: link Conway polynomial has an even power");
  if (!knot.only_even()) throw invariant_violation("moth: knot Conway polynomial has an odd power");
  ZPoly over_z(lhat.shifted(-1));
  return rf_make(z_to_t(over_z), z_to_t(knot));
}

inline RationalFn moth_polynomial(const I1Presentation &p) {
  return moth_from_conway(conway_polynomial(build_lhat_diagram(p)), conway_polynomial(knot_diagram(p)));
}

enum class OrderVerdict { InfiniteOrder, Inconclusive };

inline const char *to_string(OrderVerdict v) { return v == OrderVerdict::InfiniteOrder ? "InfiniteOrder" : "Inconclusive"; }

struct OrderCertificate {
  OrderVerdict verdict = OrderVerdict::Inconclusive;
  ZPoly conway_lhat;
  Int determinant_lhat = 0;
  RationalFn moth;
};

// A finite H_1 of the double branched cover (det != 0) forces a non-zero Conway polynomial.
inline OrderCertificate certify_order(ZPoly conway_lhat, Int det_lhat, RationalFn moth) {
  OrderCertificate c{OrderVerdict::Inconclusive, std::move(conway_lhat), std::move(det_lhat), std::move(moth)};
  if (c.determinant_lhat != 0 && !c.conway_lhat.is_zero()) c.verdict = OrderVerdict::InfiniteOrder;
  return c;
}

inline OrderCertificate order_certificate(const I1Presentation &p) {
  const OrientedPD lhat = build_lhat_diagram(p);
  const SeifertData S = seifert_matrix(lhat);
  ZPoly nab = conway_from_seifert(S.V);
  IntMatrix M = S.V;
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) M[i][j] = S.V[i][j] + S.V[j][i];
  Int det = boost::multiprecision::abs(detail::bareiss_det(std::move(M)));
  const Int p2 = boost::multiprecision::abs(butterfly_fraction(p).p);
  if (det != p2) throw invariant_violation("det(L^_b) = " + det.str() + " but |p''| = " + p2.str() + " for " + p.str());
  RationalFn moth = moth_from_conway(nab, conway_polynomial(knot_diagram(p)));
  return certify_order(std::move(nab), std::move(det), std::move(moth));
}

} // namespace twobridge
