#pragma once

#include "ecy/lattice.hpp"
#include "ecy/liealg.hpp"
#include "ecy/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ecy::fibers {

using lattice::Int;

enum class Kodaira { I, Istar, II, III, IV, IVstar, IIIstar, IIstar };

// Z3 stands for Z3 or S3; only I0* carries it
enum class Monodromy { None, Z2, Z3 };

struct FiberType {
  Kodaira kodaira = Kodaira::I;
  int n = 1;  // index of I_n and I*_n, 0 otherwise
  Monodromy monodromy = Monodromy::None;

  bool operator==(const FiberType&) const = default;
};

std::string kodaira_symbol(const FiberType& f);
const char* monodromy_name(Monodromy m);
// "I5", "I2*", "IV*", ... plus "none" | "Z2" | "Z3" | "S3"
FiberType parse_fiber(const std::string& symbol, const std::string& monodromy);
int kodaira_euler_number(const FiberType& f);
bool j_regular(const FiberType& f);

enum class Exclusion { None, NSR, NM };
const char* exclusion_name(Exclusion e);

// (k K + s Sigma1), a class paired against Sigma1
struct ClassRecipe {
  Rational k, s;
  Rational value(Int k_sigma, Int sigma_sq) const { return k * k_sigma + s * sigma_sq; }
};

struct ResidualFactor {
  std::string label;
  int r = 1;
  int k = 0, s = 0;  // class of the radicand when sqrt is set
  bool sqrt = false;
  Exclusion forced_zero = Exclusion::None;

  ClassRecipe recipe() const;
};

struct PointFiber {
  std::optional<int> chi;
  std::string label;  // Kodaira type of the degenerate fiber or "br."
  Exclusion exclusion = Exclusion::None;
};

struct RepTerm {
  liealg::RepKind rep;
  int multiplicity = 1;
};

struct MatterSlot {
  bool present = false;
  std::vector<RepTerm> reps;  // empty: trivial
  Rational delta = 1;
  Exclusion exclusion = Exclusion::None;
};

// a(g-1) + b(g'-g) + c B1 + d B2
struct LinearForm {
  Rational g1, gdiff, b1, b2;
  Rational eval(const Rational& gm1, const Rational& gd, const Rational& B1, const Rational& B2) const {
    return g1 * gm1 + gdiff * gd + b1 * B1 + b2 * B2;
  }
};

struct TableE {
  std::optional<ClassRecipe> B[2];
  bool forced_zero[2] = {false, false};
  std::optional<ClassRecipe> gdiff;
  std::optional<LinearForm> bhat_form;
  std::optional<ClassRecipe> bhat_class;
};

struct TableB {
  LinearForm minus_k_sigma, sigma_sq;
};

struct FiberRecord {
  FiberType fiber;
  liealg::GroupId group;
  std::array<int, 5> orders{};  // a1 a2 a3 a4 a6
  int m = 0, mu_f = 0, mu_g = 0;
  std::optional<ResidualFactor> beta[2];
  std::optional<int> mu[2];  // absent: NM or no second species
  std::optional<int> eps[2];
  PointFiber chi[2];
  int d = 1;
  std::vector<RepTerm> rho0;
  MatterSlot rho[2];
  std::optional<liealg::RepKind> rho_hat;
  // local contributions as printed; absent where the column is NSR/NM
  int dim_minus_rank = 0;
  Rational rloc0 = 0;
  std::optional<Rational> rloc[2];
  TableE table_e;
  TableB table_b;

  std::string label() const;
};

FiberRecord record_for(const FiberType& f);
// every row with SU(n) n <= max_n, Sp(k) k <= max_k, Spin/SO(m) m <= max_m, and the exceptional rows
std::vector<FiberRecord> all_records(int max_n, int max_k, int max_m);

struct GeometrySetup {
  lattice::BaseSurface base;
  std::optional<lattice::DivisorClass> sigma1;  // absent: smooth Weierstrass model
  FiberType fiber;
};

struct PointCounts {
  Int g = 1, gprime = 1;
  Int B1 = 0, B2 = 0;
  Int C = 0;
  std::optional<Int> Bhat;
  // intersection numbers the counts were derived from
  Int K2 = 0, KS = 0, SS = 0;

  bool operator==(const PointCounts&) const = default;
};

enum class Strictness { Strict, Warn };

lattice::DivisorClass beta_class(const FiberRecord& rec, int which, const lattice::BaseSurface& base,
                                 const lattice::DivisorClass& sigma1);

// C stays 0; the euler module fills it in. Warn mode records NSR/NM violations in warnings instead of throwing.
PointCounts point_counts(const GeometrySetup& setup, Strictness strictness = Strictness::Strict,
                         std::vector<std::string>* warnings = nullptr);

struct ConsistencyReport {
  bool pass = true;
  std::vector<std::string> failures;
};

ConsistencyReport consistency_check(const GeometrySetup& setup, const PointCounts& counts);

}  // namespace ecy::fibers
