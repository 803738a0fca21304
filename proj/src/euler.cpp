#include "ecy/euler.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

namespace ecy::euler {

using fibers::FiberRecord;
using fibers::GeometrySetup;
using fibers::PointCounts;

const FiberRecord& smooth_record() {
  static const FiberRecord rec = [] {
    FiberRecord r;
    r.m = 0;
    r.group = liealg::GroupId::trivial();
    return r;
  }();
  return rec;
}

namespace {

Int mu_or_zero(const FiberRecord& rec, int j, Int B) {
  if (rec.mu[j]) return *rec.mu[j];
  if (B != 0) throw ValidityError(Violation::NonMinimal, fmt::format("{}: mu{} is undefined", rec.label(), j + 1));
  return 0;
}

Int eps_or_zero(const FiberRecord& rec, int j, Int B) {
  if (rec.eps[j]) return *rec.eps[j];
  if (B != 0) throw ValidityError(Violation::NonMinimal, fmt::format("{}: eps{} is undefined", rec.label(), j + 1));
  return 0;
}

Int chi_or_zero(const FiberRecord& rec, int j, Int B) {
  const auto& p = rec.chi[j];
  if (p.chi) return *p.chi;
  if (B != 0)
    throw ValidityError(p.exclusion == fibers::Exclusion::NSR ? Violation::NoSmallResolution : Violation::NonMinimal,
                        fmt::format("{}: fiber over P{} is excluded ({})", rec.label(), j + 1, p.label));
  return 0;
}

}  // namespace

Int cusp_count(const GeometrySetup&, const PointCounts& c, const FiberRecord& rec) {
  const Int C = 24 * c.K2 + (4 * rec.mu_g + 6 * rec.mu_f) * c.KS - mu_or_zero(rec, 0, c.B1) * c.B1 -
                mu_or_zero(rec, 1, c.B2) * c.B2 + rec.mu_f * rec.mu_g * c.SS;
  if (C < 0) throw ValidityError(Violation::Negative, fmt::format("cusp count C = {} is negative", C));
  return C;
}

Rational sigma0_smooth_chi(const GeometrySetup&, const PointCounts& c, const FiberRecord& rec, Int C) {
  const Int m = rec.m;
  const Int s0s1 = -12 * c.KS - m * c.SS;
  return Rational(-11 * 12 * c.K2 + m * c.KS + 2 * m * s0s1 + m * m * c.SS + eps_or_zero(rec, 0, c.B1) * c.B1 +
                  eps_or_zero(rec, 1, c.B2) * c.B2 + C);
}

EulerBreakdown euler_breakdown(const GeometrySetup& setup, const PointCounts& c, const FiberRecord& rec) {
  EulerBreakdown e;
  const Int C = cusp_count(setup, c, rec);
  const Rational half(1, 2);
  e.term_P1 = half * chi_or_zero(rec, 0, c.B1) * c.B1;
  e.term_P2 = half * chi_or_zero(rec, 1, c.B2) * c.B2;
  e.term_sigma1 = Rational(rec.m) * (Rational(1 - c.g) - half * c.B1 - half * c.B2);
  e.term_sigma0_smooth = half * sigma0_smooth_chi(setup, c, rec, C);
  e.term_cusps = Rational(C);
  const Rational chi = 2 * e.half_chi();
  if (!is_integer(chi)) throw TableError(fmt::format("chi_top = {} is not an integer", to_string(chi)));
  e.chi_top = to_int(chi);
  const Rational r = e.half_chi() + 30 * c.K2;
  if (!is_integer(r)) throw TableError(fmt::format("R = {} is not an integer", to_string(r)));
  e.r_value = to_int(r);
  return e;
}

Int chi_top(const GeometrySetup& setup, const PointCounts& c, const FiberRecord& rec) {
  return euler_breakdown(setup, c, rec).chi_top;
}

Rational r_from_contributions(const PointCounts& c, const FiberRecord& rec) {
  const Rational half(1, 2);
  const Int m = rec.m;
  const Int mu1 = mu_or_zero(rec, 0, c.B1), mu2 = mu_or_zero(rec, 1, c.B2);
  const Int cusp_part = (4 * rec.mu_g + 6 * rec.mu_f) * c.KS - mu1 * c.B1 - mu2 * c.B2 + rec.mu_f * rec.mu_g * c.SS;
  const Int s0s1 = -12 * c.KS - m * c.SS;
  Rational r = half * chi_or_zero(rec, 0, c.B1) * c.B1 + half * chi_or_zero(rec, 1, c.B2) * c.B2;
  r += Rational((c.g - 1) * -m) - half * m * c.B1 - half * m * c.B2;
  r += half * m * c.KS + half * m * m * c.SS + Rational(m * s0s1) + half * eps_or_zero(rec, 0, c.B1) * c.B1 +
       half * eps_or_zero(rec, 1, c.B2) * c.B2 + half * cusp_part;
  r += Rational(cusp_part);
  return r;
}

Int r_geometric(const GeometrySetup& setup, const PointCounts& c, const FiberRecord& rec) {
  const auto e = euler_breakdown(setup, c, rec);
  const Rational second = r_from_contributions(c, rec);
  if (second != e.r_value)
    throw TableError(fmt::format("{}: R from chi_top is {}, from the contributions {}", rec.label(), e.r_value,
                                 to_string(second)));
  return e.r_value;
}

Int isolated_curve_r(const GeometrySetup& setup) {
  if (!setup.sigma1) throw ConfigError("isolated-curve formula needs Sigma1");
  const auto& S = *setup.sigma1;
  const auto rec = fibers::record_for(setup.fiber);
  const Int KS = lattice::intersect(setup.base.canonical, S);
  const Int SS = lattice::intersect(S, S);
  if (-12 * KS - rec.m * SS != 0)
    throw ConfigError(fmt::format("{}: Sigma0.Sigma1 = {} is not zero", rec.label(), -12 * KS - rec.m * SS));
  const Int g = lattice::arithmetic_genus(setup.base, S);
  if (!fibers::j_regular(setup.fiber)) {
    if (g != 1)
      throw ValidityError(Violation::Negative, fmt::format("{}: isolated curve with J-pole has genus {}", rec.label(), g));
    return 0;
  }
  const Rational r = make_rational(6 * rec.m * (rec.m - 2) * (g - 1), 12 - rec.m);
  if (!is_integer(r)) throw TableError(fmt::format("{}: isolated-curve R = {}", rec.label(), to_string(r)));
  return to_int(r);
}

}  // namespace ecy::euler
