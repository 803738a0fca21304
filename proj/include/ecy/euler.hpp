#pragma once

#include "ecy/fibers.hpp"
#include "ecy/rational.hpp"

namespace ecy::euler {

using lattice::Int;

// each term is a contribution to chi_top / 2
struct EulerBreakdown {
  Rational term_P1, term_P2, term_sigma1, term_sigma0_smooth, term_cusps;
  Int chi_top = 0;
  Int r_value = 0;

  Rational half_chi() const { return term_P1 + term_P2 + term_sigma1 + term_sigma0_smooth + term_cusps; }
  bool operator==(const EulerBreakdown&) const = default;
};

// the row standing in for the smooth Weierstrass model: m = 0, no Sigma1
const fibers::FiberRecord& smooth_record();

Int cusp_count(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
               const fibers::FiberRecord& record);

Rational sigma0_smooth_chi(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
                           const fibers::FiberRecord& record, Int C);

EulerBreakdown euler_breakdown(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
                               const fibers::FiberRecord& record);

Int chi_top(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
            const fibers::FiberRecord& record);

// sum of the right-hand sides of the rearranged contributions, without forming chi_top
Rational r_from_contributions(const fibers::PointCounts& counts, const fibers::FiberRecord& record);

// R = chi_top / 2 + 30 K^2, checked against r_from_contributions
Int r_geometric(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
                const fibers::FiberRecord& record);

// requires Sigma0.Sigma1 = 0; 6 m (m - 2) (g - 1) / (12 - m) for J-regular rows, 0 for J-pole rows
Int isolated_curve_r(const fibers::GeometrySetup& setup);

}  // namespace ecy::euler
