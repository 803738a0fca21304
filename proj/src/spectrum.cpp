#include "ecy/spectrum.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace ecy::spectrum {

using fibers::Exclusion;
using liealg::Family;
using liealg::RepKind;

const char* source_name(Source s) {
  switch (s) {
    case Source::Adjoint: return "adjoint";
    case Source::Cover: return "cover";
    case Source::P1: return "P1";
    case Source::P2: return "P2";
  }
  return "?";
}

Source source_from_name(const std::string& s) {
  for (auto src : {Source::Adjoint, Source::Cover, Source::P1, Source::P2})
    if (s == source_name(src)) return src;
  throw ConfigError("unknown spectrum source " + s);
}

MatterSpectrum build_spectrum(const fibers::GeometrySetup& setup, const fibers::PointCounts& c) {
  MatterSpectrum sp;
  if (!setup.sigma1) return sp;
  const auto rec = fibers::record_for(setup.fiber);
  sp.group = rec.group;
  sp.rho_hat = rec.rho_hat;
  sp.Bhat = c.Bhat;
  const auto& G = rec.group;
  if (G.family != Family::Trivial)
    sp.entries.push_back({liealg::instance(G, RepKind::Adjoint), Rational(c.g), Source::Adjoint});
  for (const auto& t : rec.rho0)
    sp.entries.push_back({liealg::instance(G, t.rep), Rational(t.multiplicity * (c.gprime - c.g)), Source::Cover});
  const Int B[2] = {c.B1, c.B2};
  for (int j = 0; j < 2; ++j) {
    const auto& s = rec.rho[j];
    if (!s.present) continue;
    if (s.exclusion != Exclusion::None) {
      if (B[j] != 0)
        throw ValidityError(s.exclusion == Exclusion::NSR ? Violation::NoSmallResolution : Violation::NonMinimal,
                            fmt::format("{}: matter at P{} is excluded ({})", rec.label(), j + 1,
                                        fibers::exclusion_name(s.exclusion)));
      continue;
    }
    const Source src = j == 0 ? Source::P1 : Source::P2;
    const bool branch = j == 0 && rec.d >= 2;
    if (s.reps.empty()) {
      if (G.family != Family::Trivial)
        sp.entries.push_back({liealg::instance(G, RepKind::TrivialRep), Rational(B[j]), src});
      continue;
    }
    for (const auto& t : s.reps) {
      auto inst = liealg::instance(G, t.rep, branch);
      if (inst.delta != s.delta)
        throw TableError(fmt::format("{}: stored delta {} disagrees with {} ({})", rec.label(), to_string(s.delta),
                                     to_string(inst.delta), liealg::rep_name(t.rep)));
      sp.entries.push_back({inst, s.delta * t.multiplicity * B[j], src});
    }
  }
  return sp;
}

Int r_representation(const MatterSpectrum& sp, const fibers::PointCounts&) {
  Rational r = 0;
  for (const auto& e : sp.entries) {
    if (e.multiplicity < 0) throw TableError("negative multiplicity in the spectrum");
    r += e.multiplicity * e.rep.charged();
  }
  r -= liealg::group_dim(sp.group) - liealg::group_rank(sp.group);
  if (sp.group.family == Family::Trivial) r = 0;
  if (!is_integer(r)) throw TableError(fmt::format("R from the spectrum is {}", to_string(r)));
  return to_int(r);
}

Rational r_from_table_c(const fibers::FiberRecord& rec, const fibers::PointCounts& c) {
  Rational r = Rational((c.g - 1) * rec.dim_minus_rank) + rec.rloc0 * (c.gprime - c.g);
  const Int B[2] = {c.B1, c.B2};
  for (int j = 0; j < 2; ++j)
    if (B[j] != 0) {
      if (!rec.rloc[j]) throw TableError(fmt::format("{}: rloc{} missing", rec.label(), j + 1));
      r += *rec.rloc[j] * B[j];
    }
  return r;
}

Int h_charged(Int r, const liealg::GroupId& group) {
  return r + liealg::group_dim(group) - liealg::group_rank(group);
}

PredictionReport physics_prediction_check(const fibers::GeometrySetup& setup, const fibers::PointCounts& c, Int r) {
  PredictionReport p;
  if (!setup.sigma1) return p;
  const auto rec = fibers::record_for(setup.fiber);
  const auto& G = rec.group;
  if (G.family == Family::Trivial) return p;
  const Int dr = rec.dim_minus_rank;
  p.actual = h_charged(r, G);
  if (rec.d == 1 && c.B1 == 0 && c.B2 == 0) {
    p.applicable = true;
    p.case_name = "isolated";
    p.predicted = c.g * dr;
  } else if (rec.d >= 2 && c.B2 == 0) {
    p.applicable = true;
    p.case_name = "non-simply-laced";
    Rational pred = Rational(c.g * dr) + rec.rloc0 * (c.gprime - c.g);
    // Sp(k) with half-fundamentals at the branch points
    if (G.family == Family::Sp && rec.rho_hat) pred += Rational(1, 2) * c.B1 * (2 * G.param);
    p.predicted = to_int(pred);
  } else if (G.family == Family::SU && rec.fiber.kodaira == fibers::Kodaira::I && c.B1 == 0) {
    p.applicable = true;
    p.case_name = "SU(N-1) to SU(N)";
    const Int N = G.param;
    p.predicted = c.g * (N * N - N) + c.B2 * N;
  } else {
    return p;
  }
  p.pass = p.predicted == p.actual;
  return p;
}

}  // namespace ecy::spectrum
