#pragma once

#include "ecy/fibers.hpp"
#include "ecy/spectrum.hpp"

#include <map>
#include <optional>

namespace ecy::anomaly {

using lattice::Int;

struct AnomalyReport {
  bool applicable = false;  // false for the trivial group and the smooth model
  Rational quad_residual = 0;
  Rational quartic_sq_residual = 0;
  std::optional<Rational> quartic_indep_residual;
  Int gs_base_residual = 0;
  // hypermultiplet counts per representation, adjoint included
  std::map<liealg::RepKind, Rational> counts;
  bool pass = true;

  bool operator==(const AnomalyReport&) const = default;
};

Int gs_base_check(const lattice::BaseSurface& base);

AnomalyReport anomaly_check(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
                            const spectrum::MatterSpectrum& spectrum);

}  // namespace ecy::anomaly
