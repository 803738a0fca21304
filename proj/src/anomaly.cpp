#include "ecy/anomaly.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

namespace ecy::anomaly {

using liealg::Family;
using liealg::RepKind;

Int gs_base_check(const lattice::BaseSurface& base) {
  const Int n_tensor = base.h11 - 1;
  return (9 - n_tensor) - base.canonical_squared();
}

AnomalyReport anomaly_check(const fibers::GeometrySetup& setup, const fibers::PointCounts& c,
                            const spectrum::MatterSpectrum& sp) {
  AnomalyReport a;
  a.gs_base_residual = gs_base_check(setup.base);
  const auto& G = sp.group;
  if (!setup.sigma1 || G.family == Family::Trivial) {
    a.pass = a.gs_base_residual == 0;
    return a;
  }
  a.applicable = true;
  for (const auto& e : sp.entries) a.counts[e.rep.rep] += e.multiplicity;

  if (sp.rho_hat) {
    if (!sp.Bhat) throw TableError(fmt::format("{}: B-hat missing", liealg::group_label(G)));
    const Rational n_hat = a.counts[*sp.rho_hat];
    if (n_hat != *sp.Bhat)
      throw TableError(fmt::format("{}: {} count {} differs from B-hat {}", liealg::group_label(G),
                                   liealg::rep_name(*sp.rho_hat), to_string(n_hat), *sp.Bhat));
  }

  Rational x = 0, y = 0, z = 0;
  for (const auto& [rep, n] : a.counts) {
    const auto t = liealg::trace_indices(G, rep);
    x += n * t.x;
    y += n * t.y;
    z += n * t.z;
  }
  const auto adj = liealg::trace_indices(G, RepKind::Adjoint);
  a.quad_residual = x - adj.x + 6 * c.KS;
  a.quartic_sq_residual = y - adj.y - 3 * c.SS;
  if (adj.has_independent_quartic) a.quartic_indep_residual = z - adj.z;
  a.pass = a.quad_residual == 0 && a.quartic_sq_residual == 0 &&
           (!a.quartic_indep_residual || *a.quartic_indep_residual == 0) && a.gs_base_residual == 0;
  return a;
}

}  // namespace ecy::anomaly
