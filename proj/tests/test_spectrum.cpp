#include "ecy/error.hpp"
#include "ecy/euler.hpp"
#include "ecy/spectrum.hpp"

#include <doctest.h>

using namespace ecy;
using namespace ecy::spectrum;
using fibers::GeometrySetup;
using fibers::parse_fiber;
using liealg::RepKind;

namespace {

struct Built {
  GeometrySetup setup;
  fibers::PointCounts counts;
  MatterSpectrum spectrum;
};

Built build(const lattice::BaseSurface& b, std::vector<Int> sigma, const char* symbol, const char* mono = "none") {
  GeometrySetup s{b, b.divisor(std::move(sigma)), parse_fiber(symbol, mono)};
  auto c = fibers::point_counts(s);
  c.C = euler::cusp_count(s, c, fibers::record_for(s.fiber));
  return {s, c, build_spectrum(s, c)};
}

Rational multiplicity(const MatterSpectrum& sp, RepKind r, Source src) {
  Rational total = 0;
  for (const auto& e : sp.entries)
    if (e.rep.rep == r && e.source == src) total += e.multiplicity;
  return total;
}

lattice::BaseSurface abstract_base(Int ss, Int ks) {
  return lattice::load_base({{"form", {{ss, 1}, {1, 1}}}, {"canonical", {0, ks}}, {"h11", 2}});
}

}  // namespace

TEST_CASE("P2, H, I5") {
  const auto b = build(lattice::builtin_base("P2"), {1}, "I5");
  const auto& sp = b.spectrum;
  CHECK(sp.group == liealg::GroupId::su(5));
  CHECK(multiplicity(sp, RepKind::Adjoint, Source::Adjoint) == 0);
  CHECK(multiplicity(sp, RepKind::Lambda2, Source::P1) == 3);
  CHECK(multiplicity(sp, RepKind::Fund, Source::P2) == 19);
  const Int r = r_representation(sp, b.counts);
  CHECK(r == -20 + 3 * 10 + 19 * 5);
  CHECK(r == 105);
  CHECK(h_charged(r, sp.group) == 125);
  CHECK(r_from_table_c(fibers::record_for(b.setup.fiber), b.counts) == 105);
}

TEST_CASE("P2, H, IV Sp(1)") {
  const auto b = build(lattice::builtin_base("P2"), {1}, "IV", "Z2");
  const auto& sp = b.spectrum;
  CHECK(b.counts.gprime - b.counts.g == 7);
  CHECK(b.counts.B1 == 16);
  CHECK(multiplicity(sp, RepKind::Lambda2, Source::Cover) == 7);
  CHECK(multiplicity(sp, RepKind::Fund, Source::Cover) == 14);
  // half-hypermultiplets in the fundamental at the 16 branch points
  CHECK(multiplicity(sp, RepKind::Fund, Source::P1) == 8);
  for (const auto& e : sp.entries)
    if (e.source == Source::P1) CHECK(e.rep.delta == make_rational(1, 2));
  CHECK(r_representation(sp, b.counts) == -2 + 7 * 4 + 16 * 1);
  CHECK(r_representation(sp, b.counts) == 42);
  CHECK(sp.Bhat == 22);
  CHECK(sp.rho_hat == RepKind::Fund);
}

TEST_CASE("smooth model") {
  const auto base = lattice::builtin_base("P2");
  GeometrySetup s{base, std::nullopt, {}};
  const auto c = fibers::point_counts(s);
  const auto sp = build_spectrum(s, c);
  CHECK(sp.entries.empty());
  CHECK(r_representation(sp, c) == 0);
  CHECK(h_charged(0, liealg::GroupId::trivial()) == 0);
}

TEST_CASE("isolated curve keeps only the adjoint") {
  // Sigma^2 = 12 b, K.Sigma = -m b makes Sigma0.Sigma = 0
  const auto base = abstract_base(12 * 2, -8 * 2);
  GeometrySetup s{base, base.divisor({1, 0}), parse_fiber("IV*", "none")};
  const auto c = fibers::point_counts(s);
  CHECK(c.g == 5);
  const auto sp = build_spectrum(s, c);
  for (const auto& e : sp.entries)
    if (e.multiplicity != 0) CHECK(e.source == Source::Adjoint);
  CHECK(multiplicity(sp, RepKind::Adjoint, Source::Adjoint) == 5);
  const Int r = r_representation(sp, c);
  CHECK(r == 72 * 4);
  CHECK(h_charged(r, sp.group) == 5 * 72);

  const auto p = physics_prediction_check(s, c, r);
  CHECK(p.applicable);
  CHECK(p.case_name == "isolated");
  CHECK(p.pass);
}

TEST_CASE("physics predictions") {
  // SU(N) with B1 = 0 needs K.Sigma = 0; B2 = -4 Sigma^2
  const auto base = abstract_base(-2, 0);
  GeometrySetup s{base, base.divisor({1, 0}), parse_fiber("I4", "none")};
  auto c = fibers::point_counts(s);
  CHECK(c.B1 == 0);
  CHECK(c.B2 == 8);
  c.C = euler::cusp_count(s, c, fibers::record_for(s.fiber));
  Int r = r_representation(build_spectrum(s, c), c);
  CHECK(r == euler::r_geometric(s, c, fibers::record_for(s.fiber)));
  auto p = physics_prediction_check(s, c, r);
  CHECK(p.applicable);
  CHECK(p.case_name == "SU(N-1) to SU(N)");
  CHECK(p.predicted == c.g * 12 + c.B2 * 4);
  CHECK(p.pass);

  // Sp(k) on an odd I_n with B2 = 0 and half fundamentals at branch points
  const auto p2 = build(lattice::builtin_base("Fn", 0), {2, 3}, "I5", "Z2");
  CHECK(p2.counts.B1 == 20);
  CHECK(p2.counts.B2 == 0);
  r = r_representation(p2.spectrum, p2.counts);
  p = physics_prediction_check(p2.setup, p2.counts, r);
  CHECK(p.applicable);
  CHECK(p.case_name == "non-simply-laced");
  const auto rec = fibers::record_for(p2.setup.fiber);
  CHECK(p.predicted == to_int(Rational(p2.counts.g * rec.dim_minus_rank) +
                              rec.rloc0 * (p2.counts.gprime - p2.counts.g) + make_rational(p2.counts.B1 * 2 * 2, 2)));
  CHECK(p.pass);
}

TEST_CASE("local contributions from representation data") {
  for (const auto& rec : fibers::all_records(12, 5, 16)) {
    CAPTURE(rec.label());
    const auto& G = rec.group;
    int rho0 = 0;
    for (const auto& t : rec.rho0) rho0 += t.multiplicity * liealg::charged_dimension(G, t.rep);
    CHECK(Rational(rho0) == rec.rloc0);
    for (int j = 0; j < 2; ++j) {
      if (!rec.rloc[j]) continue;
      int charged = 0;
      for (const auto& t : rec.rho[j].reps) charged += t.multiplicity * liealg::charged_dimension(G, t.rep);
      CHECK(rec.rho[j].delta * charged == *rec.rloc[j]);
      const bool branch = rec.chi[j].label == "br.";
      for (const auto& t : rec.rho[j].reps)
        if (rec.rho[j].reps.size() == 1 && t.multiplicity == 1)
          CHECK(liealg::reality_and_delta(G, t.rep, branch).delta == rec.rho[j].delta);
    }
  }
}

TEST_CASE("pipelines agree over the sweep") {
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
          const auto sp = build_spectrum(s, c);
          const Int r = r_representation(sp, c);
          CHECK(r == euler::r_geometric(s, c, rec));
          CHECK(Rational(r) == r_from_table_c(rec, c));
          for (const auto& e : sp.entries) CHECK(e.multiplicity >= 0);
          ++valid;
        } catch (const ValidityError&) {
        }
      }
    }
  CHECK(valid > 500);
}

TEST_CASE("excluded slots with points are rejected") {
  const auto base = lattice::builtin_base("P2");
  GeometrySetup s{base, base.divisor({1}), parse_fiber("I3", "Z2")};
  std::vector<std::string> w;
  auto c = fibers::point_counts(s, fibers::Strictness::Warn, &w);
  REQUIRE(!w.empty());
  CHECK_THROWS_AS(build_spectrum(s, c), ValidityError);
}

TEST_CASE("source names") {
  for (auto s : {Source::Adjoint, Source::Cover, Source::P1, Source::P2}) CHECK(source_from_name(source_name(s)) == s);
  CHECK_THROWS_AS(source_from_name("bulk"), ConfigError);
}
