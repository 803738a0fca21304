#include "ecy/fibers.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace ecy::fibers {

using liealg::Family;
using liealg::GroupId;
using liealg::RepKind;

std::string kodaira_symbol(const FiberType& f) {
  switch (f.kodaira) {
    case Kodaira::I: return fmt::format("I{}", f.n);
    case Kodaira::Istar: return fmt::format("I{}*", f.n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::IVstar: return "IV*";
    case Kodaira::IIIstar: return "III*";
    case Kodaira::IIstar: return "II*";
  }
  return "?";
}

const char* monodromy_name(Monodromy m) {
  switch (m) {
    case Monodromy::None: return "none";
    case Monodromy::Z2: return "Z2";
    case Monodromy::Z3: return "Z3";
  }
  return "?";
}

const char* exclusion_name(Exclusion e) {
  switch (e) {
    case Exclusion::None: return "";
    case Exclusion::NSR: return "NSR";
    case Exclusion::NM: return "NM";
  }
  return "?";
}

FiberType parse_fiber(const std::string& symbol, const std::string& monodromy) {
  FiberType f;
  if (monodromy == "none" || monodromy.empty()) f.monodromy = Monodromy::None;
  else if (monodromy == "Z2") f.monodromy = Monodromy::Z2;
  else if (monodromy == "Z3" || monodromy == "S3") f.monodromy = Monodromy::Z3;
  else throw ConfigError("unknown monodromy \"" + monodromy + "\"");

  const bool star = !symbol.empty() && symbol.back() == '*';
  const std::string head = star ? symbol.substr(0, symbol.size() - 1) : symbol;
  f.n = 0;
  if (head == "II") f.kodaira = star ? Kodaira::IIstar : Kodaira::II;
  else if (head == "III") f.kodaira = star ? Kodaira::IIIstar : Kodaira::III;
  else if (head == "IV") f.kodaira = star ? Kodaira::IVstar : Kodaira::IV;
  else if (head.size() > 1 && head[0] == 'I' &&
           head.find_first_not_of("0123456789", 1) == std::string::npos && head.size() < 6) {
    f.kodaira = star ? Kodaira::Istar : Kodaira::I;
    f.n = std::stoi(head.substr(1));
    if (!star && f.n == 0) throw ConfigError("I0 is a smooth fiber");
  } else {
    throw ConfigError("unknown Kodaira symbol \"" + symbol + "\"");
  }
  return f;
}

int kodaira_euler_number(const FiberType& f) {
  switch (f.kodaira) {
    case Kodaira::I: return f.n;
    case Kodaira::Istar: return f.n + 6;
    case Kodaira::II: return 2;
    case Kodaira::III: return 3;
    case Kodaira::IV: return 4;
    case Kodaira::IVstar: return 8;
    case Kodaira::IIIstar: return 9;
    case Kodaira::IIstar: return 10;
  }
  return 0;
}

bool j_regular(const FiberType& f) {
  if (f.kodaira == Kodaira::I) return false;
  if (f.kodaira == Kodaira::Istar) return f.n == 0;
  return true;
}

ClassRecipe ResidualFactor::recipe() const {
  if (sqrt) return {make_rational(k, 2), make_rational(s, 2)};
  return {Rational(k), Rational(s)};
}

std::string FiberRecord::label() const {
  return fmt::format("{} {}", kodaira_symbol(fiber), liealg::group_label(group));
}

namespace {

ResidualFactor factor(std::string label, int r, int k, int s, bool sqrt = false, Exclusion x = Exclusion::None) {
  return ResidualFactor{std::move(label), r, k, s, sqrt, x};
}

PointFiber pf(int chi, std::string label) { return {chi, std::move(label), Exclusion::None}; }
PointFiber excluded(Exclusion x) { return {std::nullopt, exclusion_name(x), x}; }

MatterSlot slot(std::vector<RepTerm> reps, Rational delta = 1) { return {true, std::move(reps), delta, Exclusion::None}; }
MatterSlot slot_excluded(Exclusion x) { return {true, {}, 1, x}; }

ClassRecipe cr(Rational k, Rational s) { return {std::move(k), std::move(s)}; }
Rational half(int a) { return make_rational(a, 2); }

LinearForm lf(Rational g1, Rational gd, Rational b1, Rational b2) {
  return {std::move(g1), std::move(gd), std::move(b1), std::move(b2)};
}

[[noreturn]] void uncovered(const FiberType& f) {
  throw ConfigError(fmt::format("{} with monodromy {} has no fiber record", kodaira_symbol(f),
                                monodromy_name(f.monodromy)));
}

void common_group_data(FiberRecord& r) { r.dim_minus_rank = liealg::group_dim(r.group) - liealg::group_rank(r.group); }

FiberRecord i_n_row(const FiberType& f) {
  FiberRecord r;
  r.fiber = f;
  const int n = f.n;
  if (n < 1) uncovered(f);
  if (f.monodromy == Monodromy::Z3) uncovered(f);
  if (f.monodromy == Monodromy::Z2) {
    if (n < 3) uncovered(f);
    const int k = n / 2;
    r.group = GroupId::sp(k);
    r.m = n;
    r.d = 2;
    r.eps[1] = -1;
    r.mu[1] = 0;
    if (n % 2 == 0) {
      r.orders = {0, 0, k, k, 2 * k};
      r.beta[0] = factor("b2", 2, -2, 0);
      r.beta[1] = factor(fmt::format("b8,{}", n), 1, -8, -n);
      r.mu[0] = 3 * k;
      r.eps[0] = k - 2;
      r.chi[0] = pf(k + 2, "br.");
      r.chi[1] = pf(2 * k + 1, fmt::format("I{}", 2 * k + 1));
      r.rho0 = {{RepKind::Lambda2Traceless, 1}};
      r.rho[0] = slot({});
      r.rho[1] = slot({{RepKind::Fund, 1}});
      r.rloc0 = 2 * k * k - 2 * k;
      r.rloc[0] = Rational(0);
      r.rloc[1] = Rational(2 * k);
      r.table_e.B[0] = cr(-2, 0);
      r.table_e.B[1] = cr(-8, -2 * k);
      r.table_e.gdiff = cr(half(-1), half(1));
    } else {
      r.orders = {0, 0, k + 1, k + 1, 2 * k + 1};
      r.beta[0] = factor("b2", 3, -2, 0);
      r.beta[1] = factor(fmt::format("a6,{}", n), 1, -6, -n, false, Exclusion::NSR);
      r.mu[0] = 3 * k + 3;
      r.eps[0] = k + 2;
      r.chi[0] = pf(k + 2, "br.");
      r.chi[1] = excluded(Exclusion::NSR);
      r.rho0 = {{RepKind::Lambda2, 1}, {RepKind::Fund, 2}};
      r.rho[0] = slot({{RepKind::Fund, 1}}, Rational(1, 2));
      r.rho[1] = slot_excluded(Exclusion::NSR);
      r.rho_hat = RepKind::Fund;
      r.rloc0 = 2 * k * k + 2 * k;
      r.rloc[0] = Rational(k);
      r.table_e.B[0] = cr(-2, 0);
      r.table_e.B[1] = cr(-6, -n);
      r.table_e.gdiff = cr(half(-1), half(1));
      r.table_e.bhat_form = lf(0, 2, half(1), 1);
      r.table_e.bhat_class = cr(-8, -2 * k);
    }
    r.table_b = {lf(-1, 1, 0, 0), lf(1, 1, 0, 0)};
    common_group_data(r);
    return r;
  }
  r.m = n;
  r.d = 1;
  r.mu[1] = 0;
  r.eps[0] = -1;
  r.eps[1] = -1;
  r.rho[0] = slot({});
  r.rho[1] = slot({{RepKind::Fund, 1}});
  r.rloc[0] = Rational(0);
  r.rloc[1] = Rational(n);
  switch (n) {
    case 1:
      r.group = GroupId::trivial();
      r.orders = {0, 0, 1, 1, 1};
      r.beta[0] = factor("b2", 3, -2, 0);
      r.beta[1] = factor("a6,1", 1, -6, -1, false, Exclusion::NSR);
      r.mu[0] = 2;
      r.chi[0] = pf(2, "II");
      r.chi[1] = excluded(Exclusion::NSR);
      r.rho[1] = slot_excluded(Exclusion::NSR);
      r.rloc[1].reset();
      r.table_e.B[0] = cr(-2, 0);
      r.table_e.B[1] = cr(-6, -1);
      r.table_e.forced_zero[1] = true;
      r.table_b = {lf(0, 0, half(1), 0), lf(2, 0, half(1), 0)};
      break;
    case 2:
      r.group = GroupId::su(2);
      r.orders = {0, 0, 1, 1, 2};
      r.beta[0] = factor("b2", 2, -2, 0);
      r.beta[1] = factor("b8,2", 1, -8, -2);
      r.mu[0] = 3;
      r.chi[0] = pf(3, "III");
      r.chi[1] = pf(3, "I3");
      r.table_e.B[1] = cr(-8, -2);
      r.table_b = {lf(0, 0, half(1), 0), lf(2, 0, half(1), 0)};
      break;
    case 3:
      r.group = GroupId::su(3);
      r.orders = {0, 1, 1, 2, 3};
      r.beta[0] = factor("a1", 3, -1, 0);
      r.beta[1] = factor("a1 b8,3 - a3,1^3", 1, -9, -3);
      r.mu[0] = 8;
      r.chi[0] = pf(4, "IV");
      r.chi[1] = pf(4, "I4");
      r.table_e.B[1] = cr(-9, -3);
      r.table_b = {lf(0, 0, 1, 0), lf(2, 0, 1, 0)};
      break;
    default:
      r.group = GroupId::su(n);
      r.orders = {0, 1, n / 2, (n + 1) / 2, n};
      r.beta[0] = factor("a1", 4, -1, 0);
      r.beta[1] = factor(fmt::format("b8,{}", n), 1, -8, -n);
      r.mu[0] = 3 * n;
      r.eps[0] = n - 2;
      r.chi[0] = pf(n + 2, fmt::format("D{}", n));
      r.chi[1] = pf(n + 1, fmt::format("I{}", n + 1));
      r.rho[0] = slot({{RepKind::Lambda2, 1}});
      r.rloc[0] = make_rational(n * n - n, 2);
      r.table_e.B[0] = cr(-1, 0);
      r.table_e.B[1] = cr(-8, -n);
      r.table_b = {lf(0, 0, 1, 0), lf(2, 0, 1, 0)};
      break;
  }
  common_group_data(r);
  return r;
}

// I0* and I*_n
FiberRecord i_star_row(const FiberType& f) {
  FiberRecord r;
  r.fiber = f;
  const int n = f.n;
  r.m = n + 6;
  r.mu_f = 2;
  r.mu_g = 3;
  r.mu[0] = 0;
  r.eps[0] = -1;
  r.eps[1] = -1;
  if (n == 0) {
    r.orders = {1, 1, 2, 2, f.monodromy == Monodromy::Z3 ? 3 : 4};
    switch (f.monodromy) {
      case Monodromy::Z3:
        r.group = GroupId::exceptional(Family::G2);
        r.d = 3;
        r.beta[0] = factor("Delta12,6", 1, -12, -6);
        r.eps[1].reset();
        r.chi[0] = pf(5, "br.");
        r.rho0 = {{RepKind::Dim7, 1}};
        r.rho[0] = slot({});
        r.rloc0 = 6;
        r.rloc[0] = Rational(0);
        r.table_e.B[0] = cr(-12, -6);
        r.table_e.gdiff = cr(-5, -2);
        r.table_b = {lf(make_rational(4, 3), make_rational(1, 3), 0, 0),
                     lf(make_rational(10, 3), make_rational(1, 3), 0, 0)};
        break;
      case Monodromy::Z2:
        r.group = GroupId::spin(7);
        r.d = 2;
        r.beta[0] = factor("a2,1^2 - 4 a4,2", 1, -4, -2);
        r.beta[1] = factor("a4,2", 2, -4, -2);
        r.mu[1] = 0;
        r.chi[0] = pf(5, "br.");
        r.chi[1] = pf(7, "I1*");
        r.rho0 = {{RepKind::Vect, 1}};
        r.rho[0] = slot({});
        r.rho[1] = slot({{RepKind::Spin, 1}});
        r.rloc0 = 6;
        r.rloc[0] = Rational(0);
        r.rloc[1] = Rational(8);
        r.table_e.B[0] = cr(-4, -2);
        r.table_e.B[1] = cr(-4, -2);
        r.table_e.gdiff = cr(half(-3), half(-1));
        r.table_b = {lf(make_rational(5, 3), make_rational(1, 3), 0, make_rational(1, 3)),
                     lf(make_rational(11, 3), make_rational(1, 3), 0, make_rational(1, 3))};
        break;
      case Monodromy::None:
        r.group = GroupId::spin(8);
        r.d = 1;
        r.beta[0] = factor("sqrt(a2,1^2 - 4 a4,2)", 2, -4, -2, true);
        r.beta[1] = factor("a4,2", 2, -4, -2);
        r.mu[1] = 0;
        r.chi[0] = pf(7, "I1*");
        r.chi[1] = pf(7, "I1*");
        r.rho[0] = slot({{RepKind::Vect, 1}});
        r.rho[1] = slot({{RepKind::SpinPlus, 1}});
        r.rloc[0] = Rational(8);
        r.rloc[1] = Rational(8);
        r.table_e.B[0] = cr(-2, -1);
        r.table_e.B[1] = cr(-4, -2);
        r.table_b = {lf(2, 0, make_rational(1, 3), make_rational(1, 3)),
                     lf(4, 0, make_rational(1, 3), make_rational(1, 3))};
        break;
    }
    common_group_data(r);
    return r;
  }
  if (f.monodromy == Monodromy::Z3) uncovered(f);
  const bool folded = f.monodromy == Monodromy::Z2;
  const int dim = folded ? 2 * n + 7 : 2 * n + 8;
  r.group = GroupId::spin(dim, n >= 3);
  r.d = folded ? 2 : 1;
  // n odd: n = 2k-3; n even: n = 2k-2
  const bool odd = n % 2 == 1;
  const int k = odd ? (n + 3) / 2 : (n + 2) / 2;
  if (odd) r.orders = {1, 1, k, k + 1, folded ? 2 * k : 2 * k + 1};
  else r.orders = {1, 1, k + 1, k + 1, 2 * k + 1};
  const Exclusion x2 = n >= 3 ? Exclusion::NM : Exclusion::None;
  if (odd) {
    if (folded) r.beta[0] = factor(fmt::format("b6,{}", 2 * k), 1, -6, -2 * k);
    else r.beta[0] = factor(fmt::format("a3,{}", k), 2, -3, -k);
    r.beta[1] = factor("a2,1", 3, -2, -1, false, x2);
  } else {
    const std::string rad = fmt::format("a4,{}^2 - 4 a2,1 a6,{}", k + 1, 2 * k + 1);
    if (folded) r.beta[0] = factor(rad, 1, -8, -(2 * k + 2));
    else r.beta[0] = factor("sqrt(" + rad + ")", 2, -8, -(2 * k + 2), true);
    r.beta[1] = factor("a2,1", 2, -2, -1, false, x2);
  }
  if (folded) {
    r.chi[0] = pf(n + 5, "br.");
    r.rho0 = {{RepKind::Vect, 1}};
    r.rho[0] = slot({});
    r.rloc0 = 2 * n + 6;
    r.rloc[0] = Rational(0);
    r.table_e.gdiff = odd ? cr(half(-5), -Rational(2 * k - 1, 2)) : cr(half(-7), -Rational(2 * k + 1, 2));
  } else {
    r.chi[0] = pf(n + 7, fmt::format("I{}*", n + 1));
    r.rho[0] = slot({{RepKind::Vect, 1}});
    r.rloc[0] = Rational(2 * n + 8);
  }
  if (odd) r.table_e.B[0] = folded ? cr(-6, -2 * k) : cr(-3, -k);
  else r.table_e.B[0] = folded ? cr(-8, -(2 * k + 2)) : cr(-4, -(k + 1));
  r.table_e.B[1] = cr(-2, -1);
  if (n >= 3) {
    r.table_e.forced_zero[1] = true;
    r.mu[1].reset();
    r.eps[1].reset();
    r.chi[1] = excluded(Exclusion::NM);
    r.rho[1] = slot_excluded(Exclusion::NM);
  } else {
    // Spin(9) .. Spin(12)
    r.mu[1] = n == 1 ? 2 : 3;
    r.chi[1] = n == 1 ? pf(8, "IV*") : pf(8, "I2*");
    const Rational delta = n == 1 ? Rational(1) : Rational(1, 2);
    r.rho[1] = slot({{folded ? RepKind::Spin : RepKind::SpinPlus, 1}}, delta);
    r.rloc[1] = Rational(16);
  }
  r.table_b = {lf(2, 0, 0, 1), lf(4, 0, 0, 1)};
  common_group_data(r);
  return r;
}

FiberRecord exceptional_row(const FiberType& f) {
  FiberRecord r;
  r.fiber = f;
  r.d = 1;
  r.eps[0] = -1;
  r.mu[0] = 0;
  r.rho[0] = slot({});
  const bool folded = f.monodromy == Monodromy::Z2;
  if (f.monodromy == Monodromy::Z3) uncovered(f);
  switch (f.kodaira) {
    case Kodaira::II:
      if (folded) uncovered(f);
      r.group = GroupId::trivial();
      r.orders = {1, 1, 1, 1, 1};
      r.m = 2, r.mu_f = 1, r.mu_g = 1;
      r.beta[0] = factor("a6,1", 2, -6, -1, false, Exclusion::NSR);
      r.chi[0] = excluded(Exclusion::NSR);
      r.rho[0] = slot_excluded(Exclusion::NSR);
      r.table_b = {lf(make_rational(2, 5), 0, make_rational(1, 5), 0),
                   lf(make_rational(12, 5), 0, make_rational(1, 5), 0)};
      break;
    case Kodaira::III:
      if (folded) uncovered(f);
      r.group = GroupId::su(2);
      r.orders = {1, 1, 1, 1, 2};
      r.m = 3, r.mu_f = 1, r.mu_g = 2;
      r.beta[0] = factor("a4,1", 3, -4, -1);
      r.chi[0] = pf(4, "IV");
      r.rho[0] = slot({{RepKind::Fund, 2}});
      r.rho_hat = RepKind::Fund;
      r.rloc[0] = Rational(4);
      r.table_e.B[0] = cr(-4, -1);
      r.table_e.bhat_form = lf(0, 0, 2, 0);
      r.table_e.bhat_class = cr(-8, -2);
      r.table_b = {lf(make_rational(2, 3), 0, make_rational(1, 3), 0),
                   lf(make_rational(8, 3), 0, make_rational(1, 3), 0)};
      break;
    case Kodaira::IV:
      r.orders = {1, 1, 1, 2, folded ? 2 : 3};
      r.m = 4, r.mu_f = 2, r.mu_g = 2;
      r.rho_hat = RepKind::Fund;
      if (folded) {
        r.group = GroupId::sp(1);
        r.d = 2;
        r.beta[0] = factor("b6,2", 2, -6, -2);
        // the residual discriminant has a node at P1
        r.eps[0] = 0;
        r.chi[0] = pf(3, "br.");
        r.rho0 = {{RepKind::Lambda2, 1}, {RepKind::Fund, 2}};
        r.rho[0] = slot({{RepKind::Fund, 1}}, Rational(1, 2));
        r.rloc0 = 4;
        r.rloc[0] = Rational(1);
        r.table_e.B[0] = cr(-6, -2);
        r.table_e.gdiff = cr(half(-5), half(-1));
        r.table_e.bhat_form = lf(0, 2, half(1), 0);
        r.table_e.bhat_class = cr(-8, -2);
        r.table_b = {lf(half(1), half(1), 0, 0), lf(half(5), half(1), 0, 0)};
      } else {
        r.group = GroupId::su(3);
        r.beta[0] = factor("a3,1", 4, -3, -1);
        r.eps[0] = 2;
        r.chi[0] = pf(6, "I0*");
        r.rho[0] = slot({{RepKind::Fund, 3}});
        r.rloc[0] = Rational(9);
        r.table_e.B[0] = cr(-3, -1);
        r.table_e.bhat_form = lf(0, 0, 3, 0);
        r.table_e.bhat_class = cr(-9, -3);
        r.table_b = {lf(1, 0, half(1), 0), lf(3, 0, half(1), 0)};
      }
      break;
    case Kodaira::IVstar:
      r.orders = {1, 2, 2, 3, folded ? 4 : 5};
      r.m = 8, r.mu_f = 3, r.mu_g = 4;
      if (folded) {
        r.group = GroupId::exceptional(Family::F4);
        r.d = 2;
        r.beta[0] = factor("b6,4", 2, -6, -4);
        r.chi[0] = pf(6, "br.");
        r.rho0 = {{RepKind::Dim26, 1}};
        r.rloc0 = 24;
        r.rloc[0] = Rational(0);
        r.table_e.B[0] = cr(-6, -4);
        r.table_e.gdiff = cr(half(-5), half(-3));
        r.table_b = {lf(3, 1, 0, 0), lf(5, 1, 0, 0)};
      } else {
        r.group = GroupId::exceptional(Family::E6);
        r.beta[0] = factor("a3,2", 4, -3, -2);
        r.chi[0] = pf(9, "III*");
        r.rho[0] = slot({{RepKind::Dim27, 1}});
        r.rloc[0] = Rational(27);
        r.table_e.B[0] = cr(-3, -2);
        r.table_b = {lf(4, 0, 1, 0), lf(6, 0, 1, 0)};
      }
      break;
    case Kodaira::IIIstar:
      if (folded) uncovered(f);
      r.group = GroupId::exceptional(Family::E7);
      r.orders = {1, 2, 3, 3, 5};
      r.m = 9, r.mu_f = 3, r.mu_g = 5;
      r.beta[0] = factor("a4,3", 3, -4, -3);
      r.chi[0] = pf(9, "III*");
      r.rho[0] = slot({{RepKind::Dim56, 1}}, Rational(1, 2));
      r.rloc[0] = Rational(28);
      r.table_e.B[0] = cr(-4, -3);
      r.table_b = {lf(6, 0, 1, 0), lf(8, 0, 1, 0)};
      break;
    case Kodaira::IIstar:
      if (folded) uncovered(f);
      r.group = GroupId::exceptional(Family::E8);
      r.orders = {1, 2, 3, 4, 5};
      r.m = 10, r.mu_f = 4, r.mu_g = 5;
      r.beta[0] = factor("a6,5", 2, -6, -5, false, Exclusion::NM);
      r.mu[0].reset();
      r.eps[0].reset();
      r.chi[0] = excluded(Exclusion::NM);
      r.rho[0] = slot_excluded(Exclusion::NM);
      r.table_e.B[0] = cr(-12, -10);
      r.table_e.forced_zero[0] = true;
      r.table_b = {lf(10, 0, 1, 0), lf(12, 0, 1, 0)};
      break;
    default:
      uncovered(f);
  }
  if (f.kodaira == Kodaira::II) r.eps[0] = -1;
  common_group_data(r);
  return r;
}

}  // namespace

FiberRecord record_for(const FiberType& f) {
  switch (f.kodaira) {
    case Kodaira::I: return i_n_row(f);
    case Kodaira::Istar:
      if (f.n < 0) uncovered(f);
      return i_star_row(f);
    default:
      if (f.n != 0) uncovered(f);
      return exceptional_row(f);
  }
}

std::vector<FiberRecord> all_records(int max_n, int max_k, int max_m) {
  std::vector<FiberRecord> out;
  auto add = [&](Kodaira kod, int n, Monodromy mono) { out.push_back(record_for({kod, n, mono})); };
  for (int n = 1; n <= std::max(3, max_n); ++n) add(Kodaira::I, n, Monodromy::None);
  for (int k = 1; k <= max_k; ++k) {
    if (k >= 2) add(Kodaira::I, 2 * k, Monodromy::Z2);
    add(Kodaira::I, 2 * k + 1, Monodromy::Z2);
  }
  add(Kodaira::II, 0, Monodromy::None);
  add(Kodaira::III, 0, Monodromy::None);
  add(Kodaira::IV, 0, Monodromy::Z2);
  add(Kodaira::IV, 0, Monodromy::None);
  add(Kodaira::Istar, 0, Monodromy::Z3);
  add(Kodaira::Istar, 0, Monodromy::Z2);
  add(Kodaira::Istar, 0, Monodromy::None);
  for (int n = 1; 2 * n + 7 <= max_m; ++n) {
    add(Kodaira::Istar, n, Monodromy::Z2);
    if (2 * n + 8 <= max_m) add(Kodaira::Istar, n, Monodromy::None);
  }
  add(Kodaira::IVstar, 0, Monodromy::Z2);
  add(Kodaira::IVstar, 0, Monodromy::None);
  add(Kodaira::IIIstar, 0, Monodromy::None);
  add(Kodaira::IIstar, 0, Monodromy::None);
  return out;
}

lattice::DivisorClass beta_class(const FiberRecord& rec, int which, const lattice::BaseSurface& base,
                                 const lattice::DivisorClass& sigma1) {
  if (which != 1 && which != 2) throw std::invalid_argument("beta index must be 1 or 2");
  const auto& b = rec.beta[which - 1];
  if (!b) throw std::invalid_argument(fmt::format("{} has no residual factor beta{}", rec.label(), which));
  const auto rc = b->recipe();
  if (!is_integer(rc.k) || !is_integer(rc.s))
    throw TableError(fmt::format("{}: square-root factor class is not integral", rec.label()));
  return to_int(rc.k) * base.canonical + to_int(rc.s) * sigma1;
}

PointCounts point_counts(const GeometrySetup& setup, Strictness strictness, std::vector<std::string>* warnings) {
  PointCounts c;
  const auto& base = setup.base;
  c.K2 = base.canonical_squared();
  if (!setup.sigma1) return c;
  const auto& S = *setup.sigma1;
  c.KS = lattice::intersect(base.canonical, S);
  c.SS = lattice::intersect(S, S);
  if (S.is_zero()) throw ConfigError("Sigma1 must be a nonzero class");
  c.g = lattice::arithmetic_genus(base, S);
  if (c.g < 0) throw ValidityError(Violation::Negative, fmt::format("genus of Sigma1 is {}", c.g));
  c.gprime = c.g;

  const auto rec = record_for(setup.fiber);
  Int B[2] = {0, 0};
  for (int j = 0; j < 2; ++j) {
    if (!rec.beta[j]) continue;
    B[j] = lattice::intersect(beta_class(rec, j + 1, base, S), S);
    const auto x = rec.beta[j]->forced_zero;
    if (x != Exclusion::None && B[j] != 0) {
      const auto msg = fmt::format("{}: B{} = {} but the row requires 0 ({})", rec.label(), j + 1, B[j],
                                   exclusion_name(x));
      if (strictness == Strictness::Strict || !warnings)
        throw ValidityError(x == Exclusion::NSR ? Violation::NoSmallResolution : Violation::NonMinimal, msg);
      warnings->push_back(msg);
    }
    if (B[j] < 0)
      throw ValidityError(Violation::Negative, fmt::format("{}: B{} = {} is negative", rec.label(), j + 1, B[j]));
  }
  c.B1 = B[0];
  c.B2 = B[1];
  if (rec.d >= 2) {
    const Int twice = 2 * c.g + c.B1 + 2 * (rec.d - 1) * (c.g - 1);
    if (twice % 2 != 0)
      throw ValidityError(Violation::NonIntegral,
                          fmt::format("{}: genus of the monodromy cover is {}/2", rec.label(), twice));
    c.gprime = twice / 2;
    if (c.gprime < 0)
      throw ValidityError(Violation::Negative,
                          fmt::format("{}: genus of the monodromy cover is {}", rec.label(), c.gprime));
  }
  if (rec.table_e.bhat_form) {
    const Rational bh = rec.table_e.bhat_form->eval(c.g - 1, c.gprime - c.g, c.B1, c.B2);
    if (!is_integer(bh))
      throw ValidityError(Violation::NonIntegral, fmt::format("{}: B-hat = {}", rec.label(), to_string(bh)));
    c.Bhat = to_int(bh);
  }
  return c;
}

ConsistencyReport consistency_check(const GeometrySetup& setup, const PointCounts& c) {
  ConsistencyReport out;
  if (!setup.sigma1) return out;
  const auto rec = record_for(setup.fiber);
  auto fail = [&](std::string msg) {
    out.pass = false;
    out.failures.push_back(rec.label() + ": " + std::move(msg));
  };
  const Int r1 = rec.beta[0] ? rec.beta[0]->r : 0;
  const Int r2 = rec.beta[1] ? rec.beta[1]->r : 0;
  const Int s0s1 = -12 * c.KS - rec.m * c.SS;
  if (r1 * c.B1 + r2 * c.B2 != s0s1)
    fail(fmt::format("r1 B1 + r2 B2 = {} but Sigma0.Sigma1 = {}", r1 * c.B1 + r2 * c.B2, s0s1));

  const Rational gm1 = c.g - 1, gd = c.gprime - c.g;
  const Rational mks = rec.table_b.minus_k_sigma.eval(gm1, gd, c.B1, c.B2);
  const Rational ss = rec.table_b.sigma_sq.eval(gm1, gd, c.B1, c.B2);
  if (mks != -c.KS) fail(fmt::format("substitution gives -K.Sigma1 = {}, lattice {}", to_string(mks), -c.KS));
  if (ss != c.SS) fail(fmt::format("substitution gives Sigma1^2 = {}, lattice {}", to_string(ss), c.SS));

  const Int B[2] = {c.B1, c.B2};
  for (int j = 0; j < 2; ++j) {
    const auto& e = rec.table_e.B[j];
    if (!e) continue;
    const Rational v = e->value(c.KS, c.SS);
    if (rec.table_e.forced_zero[j] ? ((v == 0) != (B[j] == 0)) : (v != B[j]))
      fail(fmt::format("relation for B{} gives {}, computed {}", j + 1, to_string(v), B[j]));
  }
  if (rec.table_e.gdiff) {
    const Rational v = rec.table_e.gdiff->value(c.KS, c.SS);
    if (v != gd) fail(fmt::format("relation for g'-g gives {}, Hurwitz {}", to_string(v), to_string(gd)));
  }
  if (rec.table_e.bhat_class && c.Bhat) {
    const Rational v = rec.table_e.bhat_class->value(c.KS, c.SS);
    if (v != *c.Bhat) fail(fmt::format("B-hat class gives {}, relation {}", to_string(v), *c.Bhat));
  }
  if (rec.d == 1 && c.gprime != c.g) fail("g' differs from g without monodromy");
  return out;
}

}  // namespace ecy::fibers
