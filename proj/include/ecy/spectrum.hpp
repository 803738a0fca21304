#pragma once

#include "ecy/fibers.hpp"
#include "ecy/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecy::spectrum {

using lattice::Int;

enum class Source { Adjoint, Cover, P1, P2 };
const char* source_name(Source s);
Source source_from_name(const std::string& s);

struct SpectrumEntry {
  liealg::RepInstance rep;
  Rational multiplicity;
  Source source = Source::Adjoint;

  bool operator==(const SpectrumEntry&) const = default;
};

struct MatterSpectrum {
  liealg::GroupId group;
  std::vector<SpectrumEntry> entries;
  // cover bookkeeping, kept out of R
  std::optional<liealg::RepKind> rho_hat;
  std::optional<Int> Bhat;

  bool operator==(const MatterSpectrum&) const = default;
};

MatterSpectrum build_spectrum(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts);

// sum of multiplicity * charged dimension, minus the adjoint once
Int r_representation(const MatterSpectrum& spectrum, const fibers::PointCounts& counts);

// closed form from the per-point rloc columns
Rational r_from_table_c(const fibers::FiberRecord& record, const fibers::PointCounts& counts);

Int h_charged(Int r, const liealg::GroupId& group);

struct PredictionReport {
  bool applicable = false;
  std::string case_name;
  Int predicted = 0;
  Int actual = 0;
  bool pass = true;

  bool operator==(const PredictionReport&) const = default;
};

PredictionReport physics_prediction_check(const fibers::GeometrySetup& setup, const fibers::PointCounts& counts,
                                          Int r);

}  // namespace ecy::spectrum
