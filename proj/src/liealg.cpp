#include "ecy/liealg.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace ecy::liealg {

namespace {

[[noreturn]] void incompatible(const GroupId& g, RepKind r) {
  throw std::invalid_argument(fmt::format("{} has no representation {}", group_label(g), rep_name(r)));
}

bool is_spin(const GroupId& g) { return g.family == Family::SpinOdd || g.family == Family::SpinEven; }

}  // namespace

GroupId GroupId::su(int n) {
  if (n < 2) throw std::invalid_argument("SU(n) needs n >= 2");
  return {Family::SU, n, false};
}

GroupId GroupId::sp(int k) {
  if (k < 1) throw std::invalid_argument("Sp(k) needs k >= 1");
  return {Family::Sp, k, false};
}

GroupId GroupId::spin(int m, bool so_label) {
  if (m % 2 == 1 && m >= 7) return {Family::SpinOdd, m, so_label};
  if (m % 2 == 0 && m >= 8) return {Family::SpinEven, m, so_label};
  throw std::invalid_argument(fmt::format("Spin({}) is outside the tables", m));
}

GroupId GroupId::exceptional(Family f) {
  switch (f) {
    case Family::G2: case Family::F4: case Family::E6: case Family::E7: case Family::E8:
      return {f, 0, false};
    default:
      throw std::invalid_argument("not an exceptional family");
  }
}

std::string group_label(const GroupId& g) {
  switch (g.family) {
    case Family::Trivial: return "{e}";
    case Family::SU: return fmt::format("SU({})", g.param);
    case Family::Sp: return fmt::format("Sp({})", g.param);
    case Family::SpinOdd:
    case Family::SpinEven: return fmt::format("{}({})", g.so_label ? "SO" : "Spin", g.param);
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

namespace {
struct RepNameEntry {
  RepKind kind;
  const char* name;
};
constexpr RepNameEntry kRepNames[] = {
    {RepKind::Adjoint, "adj"},   {RepKind::Fund, "fund"},      {RepKind::Lambda2, "Lambda2"},
    {RepKind::Lambda2Traceless, "Lambda2_0"}, {RepKind::Vect, "vect"}, {RepKind::Spin, "spin"},
    {RepKind::SpinPlus, "spin+"}, {RepKind::SpinMinus, "spin-"}, {RepKind::Dim7, "7"},
    {RepKind::Dim26, "26"},      {RepKind::Dim27, "27"},       {RepKind::Dim56, "56"},
    {RepKind::TrivialRep, "1"},
};
}  // namespace

const char* rep_name(RepKind r) {
  for (const auto& e : kRepNames)
    if (e.kind == r) return e.name;
  return "?";
}

RepKind rep_from_name(const std::string& s) {
  for (const auto& e : kRepNames)
    if (s == e.name) return e.kind;
  throw ConfigError("unknown representation " + s);
}

const char* reality_name(Reality r) {
  switch (r) {
    case Reality::Real: return "real";
    case Reality::Complex: return "complex";
    case Reality::Quaternionic: return "quaternionic";
  }
  return "?";
}

int group_dim(const GroupId& g) {
  const int p = g.param;
  switch (g.family) {
    case Family::Trivial: return 0;
    case Family::SU: return p * p - 1;
    case Family::Sp: return p * (2 * p + 1);
    case Family::SpinOdd:
    case Family::SpinEven: return p * (p - 1) / 2;
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

int group_rank(const GroupId& g) {
  const int p = g.param;
  switch (g.family) {
    case Family::Trivial: return 0;
    case Family::SU: return p - 1;
    case Family::Sp: return p;
    case Family::SpinOdd:
    case Family::SpinEven: return p / 2;
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
  }
  return 0;
}

int coxeter_number(const GroupId& g) {
  const int p = g.param;
  switch (g.family) {
    case Family::Trivial: throw std::invalid_argument("the trivial group has no Coxeter number");
    case Family::SU: return p;
    case Family::Sp: return 2 * p;
    case Family::SpinOdd: return p - 1;
    case Family::SpinEven: return p - 2;
    case Family::G2: return 6;
    case Family::F4: return 12;
    case Family::E6: return 12;
    case Family::E7: return 18;
    case Family::E8: return 30;
  }
  return 0;
}

bool exceptional_series_relation(const GroupId& g) {
  const bool member = (g.family == Family::SU && (g.param == 2 || g.param == 3)) ||
                      (g.family == Family::SpinEven && g.param == 8) || g.family == Family::E6 ||
                      g.family == Family::E7 || g.family == Family::E8;
  if (!member) throw std::invalid_argument(group_label(g) + " is not in the exceptional series");
  const int r = group_rank(g);
  return Rational(coxeter_number(g)) == make_rational(6 * (r + 2), 10 - r);
}

bool compatible(const GroupId& g, RepKind r) {
  const auto f = g.family;
  switch (r) {
    case RepKind::Adjoint:
    case RepKind::TrivialRep: return true;
    case RepKind::Fund:
    case RepKind::Lambda2: return f == Family::SU || f == Family::Sp;
    case RepKind::Lambda2Traceless: return f == Family::Sp;
    case RepKind::Vect: return is_spin(g);
    case RepKind::Spin: return f == Family::SpinOdd;
    case RepKind::SpinPlus:
    case RepKind::SpinMinus: return f == Family::SpinEven;
    case RepKind::Dim7: return f == Family::G2;
    case RepKind::Dim26: return f == Family::F4;
    case RepKind::Dim27: return f == Family::E6;
    case RepKind::Dim56: return f == Family::E7;
  }
  return false;
}

int rep_dimension(const GroupId& g, RepKind r) {
  if (!compatible(g, r)) incompatible(g, r);
  const int p = g.param;
  switch (r) {
    case RepKind::Adjoint: return group_dim(g);
    case RepKind::TrivialRep: return 1;
    case RepKind::Fund: return g.family == Family::SU ? p : 2 * p;
    case RepKind::Lambda2: {
      const int n = g.family == Family::SU ? p : 2 * p;
      return n * (n - 1) / 2;
    }
    case RepKind::Lambda2Traceless: return 2 * p * p - p - 1;
    case RepKind::Vect: return p;
    case RepKind::Spin: return 1 << ((p - 1) / 2);
    case RepKind::SpinPlus:
    case RepKind::SpinMinus: return 1 << ((p - 2) / 2);
    case RepKind::Dim7: return 7;
    case RepKind::Dim26: return 26;
    case RepKind::Dim27: return 27;
    case RepKind::Dim56: return 56;
  }
  return 0;
}

int zero_weights(const GroupId& g, RepKind r) {
  if (!compatible(g, r)) incompatible(g, r);
  switch (r) {
    case RepKind::Adjoint: return group_rank(g);
    case RepKind::TrivialRep: return 1;
    case RepKind::Fund: return 0;
    case RepKind::Lambda2: return g.family == Family::Sp ? g.param : 0;
    case RepKind::Lambda2Traceless: return g.param - 1;
    case RepKind::Vect: return g.family == Family::SpinOdd ? 1 : 0;
    case RepKind::Dim7: return 1;
    case RepKind::Dim26: return 2;
    default: return 0;
  }
}

int charged_dimension(const GroupId& g, RepKind r) { return rep_dimension(g, r) - zero_weights(g, r); }

namespace {

std::vector<Summand> adj_plus(std::initializer_list<Summand> rest) {
  std::vector<Summand> s{{RepKind::Adjoint, 1, false}};
  s.insert(s.end(), rest);
  return s;
}

constexpr Summand one{RepKind::TrivialRep, 1, false};

}  // namespace

BranchingRule branch_adjoint(const GroupId& parent, const GroupId& sub) {
  const auto pf = parent.family, sf = sub.family;
  const int p = parent.param, q = sub.param;
  auto rule = [&](std::vector<Summand> s, bool enhancement) {
    return BranchingRule{parent, sub, std::move(s), enhancement};
  };
  // folding by outer monodromy
  if (pf == Family::SU && sf == Family::Sp && p == 2 * q && q >= 2)
    return rule(adj_plus({{RepKind::Lambda2Traceless, 1, false}}), false);
  if (pf == Family::SU && sf == Family::Sp && p == 2 * q + 1)
    return rule(adj_plus({{RepKind::Lambda2, 1, false}, {RepKind::Fund, 1, false}, {RepKind::Fund, 1, false}}), false);
  if (pf == Family::SpinEven && sf == Family::SpinOdd && q == p - 1)
    return rule(adj_plus({{RepKind::Vect, 1, false}}), false);
  if (pf == Family::SpinEven && p == 8 && sf == Family::G2)
    return rule(adj_plus({{RepKind::Dim7, 1, false}, {RepKind::Dim7, 1, false}}), false);
  if (pf == Family::E6 && sf == Family::F4) return rule(adj_plus({{RepKind::Dim26, 1, false}}), false);
  // enhancement at a point
  if (pf == Family::SU && sf == Family::SU && p == q + 1)
    return rule(adj_plus({{RepKind::Fund, 1, false}, {RepKind::Fund, 1, true}, one}), true);
  if (pf == Family::SpinEven && sf == Family::SU && p == 2 * q && q >= 4)
    return rule(adj_plus({{RepKind::Lambda2, 1, false}, {RepKind::Lambda2, 1, true}, one}), true);
  if (pf == Family::SpinEven && sf == Family::SpinEven && p == q + 2)
    return rule(adj_plus({{RepKind::Vect, 1, false}, {RepKind::Vect, 1, false}, one}), true);
  if (pf == Family::E6 && sf == Family::SpinEven && q == 10)
    return rule(adj_plus({{RepKind::SpinPlus, 1, false}, {RepKind::SpinMinus, 1, false}, one}), true);
  if (pf == Family::E7 && sf == Family::SpinEven && q == 12)
    return rule(adj_plus({{RepKind::SpinPlus, 1, false}, {RepKind::SpinPlus, 1, false}, one, one, one}), true);
  if (pf == Family::E7 && sf == Family::E6)
    return rule(adj_plus({{RepKind::Dim27, 1, false}, {RepKind::Dim27, 1, true}, one}), true);
  if (pf == Family::E8 && sf == Family::E7)
    return rule(adj_plus({{RepKind::Dim56, 1, false}, {RepKind::Dim56, 1, false}, one, one, one}), true);
  throw std::invalid_argument(
      fmt::format("no branching rule for {} > {}", group_label(parent), group_label(sub)));
}

std::vector<BranchingRule> branching_catalog(int max_param) {
  std::vector<BranchingRule> out;
  for (int k = 2; 2 * k <= max_param; ++k) out.push_back(branch_adjoint(GroupId::su(2 * k), GroupId::sp(k)));
  for (int k = 1; 2 * k + 1 <= max_param; ++k)
    out.push_back(branch_adjoint(GroupId::su(2 * k + 1), GroupId::sp(k)));
  for (int k = 4; 2 * k <= max_param; ++k)
    out.push_back(branch_adjoint(GroupId::spin(2 * k), GroupId::spin(2 * k - 1)));
  out.push_back(branch_adjoint(GroupId::spin(8), GroupId::exceptional(Family::G2)));
  out.push_back(branch_adjoint(GroupId::exceptional(Family::E6), GroupId::exceptional(Family::F4)));
  for (int n = 2; n + 1 <= max_param; ++n) out.push_back(branch_adjoint(GroupId::su(n + 1), GroupId::su(n)));
  for (int n = 4; 2 * n <= max_param; ++n) out.push_back(branch_adjoint(GroupId::spin(2 * n), GroupId::su(n)));
  for (int k = 4; 2 * k + 2 <= max_param; ++k)
    out.push_back(branch_adjoint(GroupId::spin(2 * k + 2), GroupId::spin(2 * k)));
  out.push_back(branch_adjoint(GroupId::exceptional(Family::E6), GroupId::spin(10)));
  out.push_back(branch_adjoint(GroupId::exceptional(Family::E7), GroupId::spin(12)));
  out.push_back(branch_adjoint(GroupId::exceptional(Family::E7), GroupId::exceptional(Family::E6)));
  out.push_back(branch_adjoint(GroupId::exceptional(Family::E8), GroupId::exceptional(Family::E7)));
  return out;
}

bool has_independent_quartic(const GroupId& g) {
  switch (g.family) {
    case Family::SU: return g.param >= 4;
    case Family::Sp: return g.param >= 2;
    case Family::SpinOdd:
    case Family::SpinEven: return true;
    default: return false;
  }
}

TraceIndices trace_indices(const GroupId& g, RepKind r) {
  if (!compatible(g, r)) incompatible(g, r);
  const bool quartic = has_independent_quartic(g);
  auto idx = [&](Rational x, Rational y, Rational z) { return TraceIndices{x, y, z, quartic}; };
  if (r == RepKind::TrivialRep) return idx(0, 0, 0);
  const int p = g.param;
  auto missing = [&]() -> TraceIndices {
    throw std::invalid_argument(fmt::format("no trace indices for {} of {}", rep_name(r), group_label(g)));
  };
  // Sp(1) is SU(2)
  const bool su2 = (g.family == Family::SU && p == 2) || (g.family == Family::Sp && p == 1);
  if (su2) {
    switch (r) {
      case RepKind::Adjoint: return idx(4, 8, 0);
      case RepKind::Fund: return idx(1, Rational(1, 2), 0);
      case RepKind::Lambda2:
      case RepKind::Lambda2Traceless: return idx(0, 0, 0);
      default: return missing();
    }
  }
  switch (g.family) {
    case Family::SU:
      if (p == 3) {
        switch (r) {
          case RepKind::Adjoint: return idx(6, 9, 0);
          // the 3-bar
          case RepKind::Fund:
          case RepKind::Lambda2: return idx(1, Rational(1, 2), 0);
          default: return missing();
        }
      }
      switch (r) {
        case RepKind::Adjoint: return idx(2 * p, 6, 2 * p);
        case RepKind::Fund: return idx(1, 0, 1);
        case RepKind::Lambda2: return idx(p - 2, 3, p - 8);
        default: return missing();
      }
    case Family::Sp:
      switch (r) {
        case RepKind::Adjoint: return idx(2 * p + 2, 3, 2 * p + 8);
        case RepKind::Fund: return idx(1, 0, 1);
        // Lambda2 = Lambda2_0 + 1
        case RepKind::Lambda2:
        case RepKind::Lambda2Traceless: return idx(2 * p - 2, 3, 2 * p - 8);
        default: return missing();
      }
    case Family::SpinOdd:
    case Family::SpinEven:
      switch (r) {
        case RepKind::Adjoint: return idx(2 * p - 4, 12, 2 * p - 16);
        case RepKind::Vect: return idx(2, 0, 2);
        case RepKind::Spin:
        case RepKind::SpinPlus:
        case RepKind::SpinMinus: {
          const int d = rep_dimension(g, r);
          return idx(make_rational(d, 4), make_rational(3 * d, 16), make_rational(-d, 8));
        }
        default: return missing();
      }
    case Family::G2:
      if (r == RepKind::Adjoint) return idx(8, 10, 0);
      if (r == RepKind::Dim7) return idx(2, 1, 0);
      return missing();
    case Family::F4:
      if (r == RepKind::Adjoint) return idx(18, 15, 0);
      if (r == RepKind::Dim26) return idx(6, 3, 0);
      return missing();
    case Family::E6:
      if (r == RepKind::Adjoint) return idx(24, 18, 0);
      if (r == RepKind::Dim27) return idx(6, 3, 0);
      return missing();
    case Family::E7:
      if (r == RepKind::Adjoint) return idx(36, 24, 0);
      if (r == RepKind::Dim56) return idx(12, 6, 0);
      return missing();
    case Family::E8:
      if (r == RepKind::Adjoint) return idx(60, 36, 0);
      return missing();
    case Family::Trivial:
      return missing();
  }
  return missing();
}

Reality reality(const GroupId& g, RepKind r) {
  if (!compatible(g, r)) incompatible(g, r);
  const int p = g.param;
  switch (r) {
    case RepKind::Adjoint:
    case RepKind::TrivialRep:
    case RepKind::Vect:
    case RepKind::Dim7:
    case RepKind::Dim26:
    case RepKind::Lambda2Traceless: return Reality::Real;
    case RepKind::Fund:
      if (g.family == Family::Sp || p == 2) return Reality::Quaternionic;
      return Reality::Complex;
    case RepKind::Lambda2:
      if (g.family == Family::Sp || p == 2 || p == 4) return Reality::Real;
      return Reality::Complex;
    case RepKind::Spin:
      return (p % 8 == 1 || p % 8 == 7) ? Reality::Real : Reality::Quaternionic;
    case RepKind::SpinPlus:
    case RepKind::SpinMinus:
      if (p % 8 == 0) return Reality::Real;
      if (p % 8 == 4) return Reality::Quaternionic;
      return Reality::Complex;
    case RepKind::Dim27: return Reality::Complex;
    case RepKind::Dim56: return Reality::Quaternionic;
  }
  return Reality::Real;
}

RealityDelta reality_and_delta(const GroupId& g, RepKind r, bool at_branch_point) {
  const Reality re = reality(g, r);
  const bool paired_fund = r == RepKind::Fund && !at_branch_point;
  const Rational delta = (re == Reality::Quaternionic && !paired_fund) ? Rational(1, 2) : Rational(1);
  return {re, delta};
}

RepInstance instance(const GroupId& g, RepKind r, bool at_branch_point) {
  const auto rd = reality_and_delta(g, r, at_branch_point);
  return RepInstance{g, r, rep_dimension(g, r), zero_weights(g, r), rd.reality, rd.delta};
}

}  // namespace ecy::liealg
