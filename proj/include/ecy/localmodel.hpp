#pragma once

#include "ecy/fibers.hpp"
#include "ecy/rational.hpp"

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ecy::local {

constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

// dense in t, coefficient i is t^i
using UPoly = std::vector<Rational>;

// Polynomial in s (transverse to Sigma1) and t (along Sigma1), known modulo s^(truncation + 1).
class TruncatedBivariatePoly {
 public:
  using Key = std::pair<int, int>;  // (deg_s, deg_t)

  TruncatedBivariatePoly() = default;
  TruncatedBivariatePoly(const Rational& c);  // NOLINT: constants convert implicitly

  static TruncatedBivariatePoly zero(std::optional<int> truncation) {
    TruncatedBivariatePoly p;
    p.trunc_ = truncation;
    return p;
  }
  static TruncatedBivariatePoly monomial(const Rational& c, int ds, int dt,
                                         std::optional<int> truncation = std::nullopt);
  static TruncatedBivariatePoly s(std::optional<int> truncation = std::nullopt) { return monomial(1, 1, 0, truncation); }
  static TruncatedBivariatePoly t() { return monomial(1, 0, 1); }

  const std::map<Key, Rational>& terms() const { return terms_; }
  std::optional<int> truncation() const { return trunc_; }
  bool exact() const { return !trunc_; }
  TruncatedBivariatePoly truncated(int order) const;

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int ds, int dt) const;
  Rational at_origin() const { return coeff(0, 0); }
  int max_s_degree() const;
  int max_t_degree() const;

  // lowest s-degree present; kInfiniteOrder for an exact zero; throws when the order is hidden by truncation
  int ord_s() const;
  // lower bound usable for truncation bookkeeping
  int ord_s_bound() const;
  TruncatedBivariatePoly divide_s(int k) const;
  // coefficient of s^k as a polynomial in t
  UPoly s_coefficient(int k) const;
  UPoly slice() const { return s_coefficient(0); }

  TruncatedBivariatePoly d_ds() const;
  TruncatedBivariatePoly d_dt() const;

  TruncatedBivariatePoly operator+(const TruncatedBivariatePoly& o) const;
  TruncatedBivariatePoly operator-(const TruncatedBivariatePoly& o) const;
  TruncatedBivariatePoly operator-() const;
  TruncatedBivariatePoly operator*(const TruncatedBivariatePoly& o) const;
  TruncatedBivariatePoly& operator+=(const TruncatedBivariatePoly& o) { return *this = *this + o; }
  TruncatedBivariatePoly& operator*=(const TruncatedBivariatePoly& o) { return *this = *this * o; }
  TruncatedBivariatePoly pow(int e) const;

  // equal as truncated objects: same truncation and same retained terms
  bool operator==(const TruncatedBivariatePoly& o) const { return trunc_ == o.trunc_ && terms_ == o.terms_; }

 private:
  void add_term(int ds, int dt, const Rational& c);
  void enforce();

  std::map<Key, Rational> terms_;
  std::optional<int> trunc_;
};

using Poly = TruncatedBivariatePoly;

struct WeierstrassLocal {
  Poly a1, a2, a3, a4, a6;
};

struct BInvariants {
  Poly b2, b4, b6, b8;
};

BInvariants b_invariants(const WeierstrassLocal& w);

struct FG {
  Poly f, g;
};

FG f_g(const WeierstrassLocal& w);

// from the b-invariants; checked against -16 (4 f^3 + 27 g^2)
Poly discriminant(const WeierstrassLocal& w);
Poly discriminant_from_fg(const WeierstrassLocal& w);

struct VanishingOrders {
  std::array<int, 5> a{};  // kInfiniteOrder for a vanishing coefficient
  int f = 0, g = 0, disc = 0;
};

VanishingOrders vanishing_orders(const WeierstrassLocal& w);

Poly residual_discriminant(const WeierstrassLocal& w, int m);

// intersection multiplicity at s = t = 0 by Fulton's algorithm
int local_mu(const Poly& p, const Poly& q);

// Milnor number of p = 0 at the origin
int milnor_number(const Poly& p);
// sum alpha(alpha - 1) over infinitely near points minus the number of branches; -1 when smooth
int epsilon_invariant(const Poly& p);

fibers::FiberType kodaira_classify_local(const WeierstrassLocal& w);

// univariate helpers over Q[t]
int degree(const UPoly& p);
int t_order(const UPoly& p);
void trim(UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
// h with p = c h^2 for a constant c, if one exists
std::optional<UPoly> square_root_up_to_constant(const UPoly& p);
bool proportional(const UPoly& a, const UPoly& b);

}  // namespace ecy::local
