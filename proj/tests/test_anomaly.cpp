#include "ecy/anomaly.hpp"
#include "ecy/error.hpp"
#include "ecy/euler.hpp"

#include <doctest.h>

using namespace ecy;
using namespace ecy::anomaly;
using fibers::GeometrySetup;
using liealg::RepKind;

namespace {

struct Checked {
  GeometrySetup setup;
  fibers::PointCounts counts;
  spectrum::MatterSpectrum spectrum;
  AnomalyReport report;
};

Checked check_on(const lattice::BaseSurface& b, std::vector<Int> sigma, const char* symbol, const char* mono = "none") {
  GeometrySetup s{b, b.divisor(std::move(sigma)), fibers::parse_fiber(symbol, mono)};
  auto c = fibers::point_counts(s);
  c.C = euler::cusp_count(s, c, fibers::record_for(s.fiber));
  auto sp = spectrum::build_spectrum(s, c);
  auto rep = anomaly_check(s, c, sp);
  return {s, c, sp, rep};
}

}  // namespace

TEST_CASE("SU(5) on a line in P2") {
  const auto r = check_on(lattice::builtin_base("P2"), {1}, "I5").report;
  CHECK(r.applicable);
  CHECK(r.counts.at(RepKind::Adjoint) == 0);
  CHECK(r.counts.at(RepKind::Lambda2) == 3);
  CHECK(r.counts.at(RepKind::Fund) == 19);
  // fund x = 1, Lambda2 x = n - 2, adj x = 2n; -6 K.Sigma = 18
  CHECK(19 + 3 * 3 - 10 - 18 == 0);
  CHECK(r.quad_residual == 0);
  CHECK(r.quartic_sq_residual == 0);
  REQUIRE(r.quartic_indep_residual);
  CHECK(*r.quartic_indep_residual == 0);
  CHECK(r.gs_base_residual == 0);
  CHECK(r.pass);
}

TEST_CASE("Sp(2) on a line in P2") {
  const auto r = check_on(lattice::builtin_base("P2"), {1}, "I4", "Z2").report;
  CHECK(r.counts.at(RepKind::Lambda2Traceless) == 2);
  CHECK(r.counts.at(RepKind::Fund) == 20);
  CHECK(r.quad_residual == 0);
  CHECK(r.quartic_sq_residual == 0);
  REQUIRE(r.quartic_indep_residual);
  CHECK(*r.quartic_indep_residual == 0);
  CHECK(r.pass);
}

TEST_CASE("Sp(1) on a line in P2") {
  const auto r = check_on(lattice::builtin_base("P2"), {1}, "IV", "Z2").report;
  CHECK(r.counts.at(RepKind::Fund) == 22);
  CHECK(r.quad_residual == 0);
  CHECK(r.quartic_sq_residual == 0);
  CHECK(!r.quartic_indep_residual);
  CHECK(r.pass);
}

TEST_CASE("tampered spectrum fails") {
  auto c = check_on(lattice::builtin_base("P2"), {1}, "I5");
  for (auto& e : c.spectrum.entries)
    if (e.source == spectrum::Source::P2) e.multiplicity += 1;
  const auto r = anomaly_check(c.setup, c.counts, c.spectrum);
  CHECK(r.quad_residual == 1);
  CHECK(!r.pass);
}

TEST_CASE("trivial entries do not change residuals") {
  auto c = check_on(lattice::builtin_base("Fn", 1), {1, 2}, "I6");
  const auto before = c.report;
  spectrum::SpectrumEntry extra{liealg::instance(c.spectrum.group, RepKind::TrivialRep), 17, spectrum::Source::P2};
  c.spectrum.entries.push_back(extra);
  const auto after = anomaly_check(c.setup, c.counts, c.spectrum);
  CHECK(after.quad_residual == before.quad_residual);
  CHECK(after.quartic_sq_residual == before.quartic_sq_residual);
  CHECK(after.quartic_indep_residual == before.quartic_indep_residual);
  CHECK(after.pass);
}

TEST_CASE("Green-Schwarz base relation") {
  CHECK(gs_base_check(lattice::builtin_base("P2")) == 0);
  CHECK(gs_base_check(lattice::builtin_base("Fn", 1)) == 0);
  for (int n = 0; n <= 5; ++n) CHECK(gs_base_check(lattice::builtin_base("Fn", n)) == 0);
  const auto wrong = lattice::load_base({{"form", {{-1, 1}, {1, 0}}}, {"canonical", {-2, -3}}, {"h11", 3}});
  CHECK(gs_base_check(wrong) == -1);
}

TEST_CASE("anomaly sweep") {
  std::vector<lattice::BaseSurface> bases{lattice::builtin_base("P2")};
  for (int n = 0; n <= 3; ++n) bases.push_back(lattice::builtin_base("Fn", n));
  int valid = 0;
  for (const auto& rec : fibers::all_records(12, 5, 16))
    for (const auto& b : bases) {
      const int rank = b.lattice->rank();
      for (int i = 1; i < (rank == 1 ? 5 : 25); ++i) {
        std::vector<Int> v = rank == 1 ? std::vector<Int>{i} : std::vector<Int>{i / 5, i % 5};
        GeometrySetup s{b, b.divisor(v), rec.fiber};
        try {
          auto c = fibers::point_counts(s);
          c.C = euler::cusp_count(s, c, rec);
          const auto r = anomaly_check(s, c, spectrum::build_spectrum(s, c));
          CAPTURE(rec.label());
          CHECK(r.quad_residual == 0);
          CHECK(r.quartic_sq_residual == 0);
          CHECK(r.quartic_indep_residual.has_value() == liealg::has_independent_quartic(rec.group));
          if (r.quartic_indep_residual) CHECK(*r.quartic_indep_residual == 0);
          CHECK(r.gs_base_residual == 0);
          CHECK(r.applicable == (rec.group.family != liealg::Family::Trivial));
          CHECK(r.pass);
          ++valid;
        } catch (const ValidityError&) {
        }
      }
    }
  CHECK(valid > 500);
}

TEST_CASE("not applicable without a gauge group") {
  const auto b = lattice::builtin_base("P2");
  GeometrySetup s{b, std::nullopt, {}};
  const auto c = fibers::point_counts(s);
  const auto r = anomaly_check(s, c, spectrum::build_spectrum(s, c));
  CHECK(!r.applicable);
}
