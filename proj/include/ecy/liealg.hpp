#pragma once

#include "ecy/rational.hpp"

#include <string>
#include <vector>

namespace ecy::liealg {

enum class Family { Trivial, SU, Sp, SpinOdd, SpinEven, G2, F4, E6, E7, E8 };

struct GroupId {
  Family family = Family::Trivial;
  int param = 0;  // n, k or m; 0 for exceptional and trivial
  // labels only: SO(m) rather than Spin(m)
  bool so_label = false;

  static GroupId trivial() { return {}; }
  static GroupId su(int n);
  static GroupId sp(int k);
  static GroupId spin(int m, bool so_label = false);
  static GroupId exceptional(Family f);

  bool operator==(const GroupId& o) const { return family == o.family && param == o.param; }
};

std::string group_label(const GroupId& g);

enum class RepKind {
  Adjoint, Fund, Lambda2, Lambda2Traceless, Vect, Spin, SpinPlus, SpinMinus, Dim7, Dim26, Dim27, Dim56, TrivialRep
};

const char* rep_name(RepKind r);
RepKind rep_from_name(const std::string& s);

enum class Reality { Real, Complex, Quaternionic };

const char* reality_name(Reality r);

struct TraceIndices {
  Rational x, y, z;
  bool has_independent_quartic = false;
};

struct RepInstance {
  GroupId group;
  RepKind rep;
  int dimension = 0;
  int zero_weights = 0;
  Reality reality = Reality::Real;
  Rational delta = 1;

  int charged() const { return dimension - zero_weights; }
  bool operator==(const RepInstance& o) const {
    return group == o.group && rep == o.rep && dimension == o.dimension && zero_weights == o.zero_weights &&
           reality == o.reality && delta == o.delta;
  }
};

struct Summand {
  RepKind rep;
  int multiplicity = 1;
  bool conjugate = false;
};

struct BranchingRule {
  GroupId parent;
  GroupId subgroup;
  std::vector<Summand> summands;
  // false for the monodromy (folding) list
  bool enhancement = false;
};

int group_dim(const GroupId& g);
int group_rank(const GroupId& g);
int coxeter_number(const GroupId& g);
bool exceptional_series_relation(const GroupId& g);

bool compatible(const GroupId& g, RepKind r);
int rep_dimension(const GroupId& g, RepKind r);
int zero_weights(const GroupId& g, RepKind r);
int charged_dimension(const GroupId& g, RepKind r);

BranchingRule branch_adjoint(const GroupId& parent, const GroupId& subgroup);
// every pair listed by the two branching propositions, instantiated up to rank bound
std::vector<BranchingRule> branching_catalog(int max_param);

bool has_independent_quartic(const GroupId& g);
TraceIndices trace_indices(const GroupId& g, RepKind r);

Reality reality(const GroupId& g, RepKind r);
// quaternionic fundamentals of Sp(k) and SU(2) sit in a fund + conj pair except over monodromy branch points
struct RealityDelta {
  Reality reality;
  Rational delta;
};
RealityDelta reality_and_delta(const GroupId& g, RepKind r, bool at_branch_point = false);

RepInstance instance(const GroupId& g, RepKind r, bool at_branch_point = false);

}  // namespace ecy::liealg
