#include "ecy/localmodel.hpp"

#include "ecy/error.hpp"

#include <algorithm>
#include <string>

namespace ecy::local {

namespace {

using Key = TruncatedBivariatePoly::Key;

std::optional<int> min_trunc(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// saturating sum of a truncation and an s-order bound
std::optional<int> shifted(std::optional<int> trunc, int ord) {
  if (!trunc) return std::nullopt;
  if (ord >= kInfiniteOrder - *trunc) return std::nullopt;
  return *trunc + ord;
}

}  // namespace

TruncatedBivariatePoly::TruncatedBivariatePoly(const Rational& c) {
  add_term(0, 0, c);
}

TruncatedBivariatePoly TruncatedBivariatePoly::monomial(const Rational& c, int ds, int dt,
                                                        std::optional<int> truncation) {
  if (ds < 0 || dt < 0) throw ConfigError("negative exponent in a local polynomial");
  auto p = zero(truncation);
  p.add_term(ds, dt, c);
  p.enforce();
  return p;
}

void TruncatedBivariatePoly::add_term(int ds, int dt, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{ds, dt}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedBivariatePoly::enforce() {
  if (!trunc_) return;
  if (*trunc_ < 0) throw ConfigError("truncation order became negative");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.first > *trunc_) it = terms_.erase(it);
    else ++it;
  }
}

TruncatedBivariatePoly TruncatedBivariatePoly::truncated(int order) const {
  TruncatedBivariatePoly p = *this;
  p.trunc_ = min_trunc(trunc_, order);
  p.enforce();
  return p;
}

Rational TruncatedBivariatePoly::coeff(int ds, int dt) const {
  auto it = terms_.find({ds, dt});
  return it == terms_.end() ? Rational(0) : it->second;
}

int TruncatedBivariatePoly::max_s_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int TruncatedBivariatePoly::max_t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int TruncatedBivariatePoly::ord_s() const {
  if (terms_.empty()) {
    if (trunc_) throw ConfigError("s-order exceeds the truncation order " + std::to_string(*trunc_));
    return kInfiniteOrder;
  }
  return terms_.begin()->first.first;
}

int TruncatedBivariatePoly::ord_s_bound() const {
  if (!terms_.empty()) return terms_.begin()->first.first;
  return trunc_ ? *trunc_ + 1 : kInfiniteOrder;
}

TruncatedBivariatePoly TruncatedBivariatePoly::divide_s(int k) const {
  if (k < 0) throw ConfigError("negative power of s");
  if (ord_s_bound() < k) throw ConfigError("polynomial is not divisible by s^" + std::to_string(k));
  if (trunc_ && *trunc_ < k) throw ConfigError("division by s^" + std::to_string(k) + " exceeds the truncation");
  auto p = zero(trunc_ ? std::optional<int>(*trunc_ - k) : std::nullopt);
  for (const auto& [key, c] : terms_) p.terms_.emplace(Key{key.first - k, key.second}, c);
  return p;
}

UPoly TruncatedBivariatePoly::s_coefficient(int k) const {
  if (trunc_ && k > *trunc_) throw ConfigError("coefficient of s^" + std::to_string(k) + " lies beyond the truncation");
  UPoly out;
  for (const auto& [key, c] : terms_) {
    if (key.first != k) continue;
    if (out.size() <= static_cast<size_t>(key.second)) out.resize(key.second + 1);
    out[key.second] = c;
  }
  return out;
}

TruncatedBivariatePoly TruncatedBivariatePoly::d_ds() const {
  if (trunc_ && *trunc_ == 0) throw ConfigError("s-derivative of a polynomial truncated at order 0");
  auto p = zero(trunc_ ? std::optional<int>(*trunc_ - 1) : std::nullopt);
  for (const auto& [key, c] : terms_)
    if (key.first > 0) p.add_term(key.first - 1, key.second, c * key.first);
  return p;
}

TruncatedBivariatePoly TruncatedBivariatePoly::d_dt() const {
  auto p = zero(trunc_);
  for (const auto& [key, c] : terms_)
    if (key.second > 0) p.add_term(key.first, key.second - 1, c * key.second);
  return p;
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator+(const TruncatedBivariatePoly& o) const {
  auto p = zero(min_trunc(trunc_, o.trunc_));
  p.terms_ = terms_;
  for (const auto& [key, c] : o.terms_) p.add_term(key.first, key.second, c);
  p.enforce();
  return p;
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator-() const {
  TruncatedBivariatePoly p = *this;
  for (auto& [key, c] : p.terms_) c = -c;
  return p;
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator-(const TruncatedBivariatePoly& o) const {
  return *this + (-o);
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator*(const TruncatedBivariatePoly& o) const {
  auto p = zero(min_trunc(shifted(trunc_, o.ord_s_bound()), shifted(o.trunc_, ord_s_bound())));
  for (const auto& [ka, ca] : terms_) {
    if (p.trunc_ && ka.first > *p.trunc_) continue;
    for (const auto& [kb, cb] : o.terms_) {
      const int ds = ka.first + kb.first;
      if (p.trunc_ && ds > *p.trunc_) continue;
      p.add_term(ds, ka.second + kb.second, ca * cb);
    }
  }
  return p;
}

TruncatedBivariatePoly TruncatedBivariatePoly::pow(int e) const {
  if (e < 0) throw ConfigError("negative power of a local polynomial");
  TruncatedBivariatePoly result(Rational(1));
  TruncatedBivariatePoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BInvariants b_invariants(const WeierstrassLocal& w) {
  const Poly& a1 = w.a1;
  const Poly& a2 = w.a2;
  const Poly& a3 = w.a3;
  const Poly& a4 = w.a4;
  const Poly& a6 = w.a6;
  BInvariants b;
  b.b2 = a1 * a1 + Poly(Rational(4)) * a2;
  b.b4 = a1 * a3 + Poly(Rational(2)) * a4;
  b.b6 = a3 * a3 + Poly(Rational(4)) * a6;
  b.b8 = a1 * a1 * a6 + Poly(Rational(4)) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return b;
}

FG f_g(const WeierstrassLocal& w) {
  const BInvariants b = b_invariants(w);
  FG out;
  out.f = Poly(make_rational(-1, 48)) * (b.b2 * b.b2 - Poly(Rational(24)) * b.b4);
  out.g = Poly(make_rational(-1, 864)) *
          (Poly(Rational(-1)) * b.b2.pow(3) + Poly(Rational(36)) * b.b2 * b.b4 - Poly(Rational(216)) * b.b6);
  return out;
}

Poly discriminant(const WeierstrassLocal& w) {
  const BInvariants b = b_invariants(w);
  return Poly(Rational(-1)) * b.b2 * b.b2 * b.b8 - Poly(Rational(8)) * b.b4.pow(3) - Poly(Rational(27)) * b.b6 * b.b6 +
         Poly(Rational(9)) * b.b2 * b.b4 * b.b6;
}

Poly discriminant_from_fg(const WeierstrassLocal& w) {
  const FG fg = f_g(w);
  return Poly(Rational(-16)) * (Poly(Rational(4)) * fg.f.pow(3) + Poly(Rational(27)) * fg.g * fg.g);
}

VanishingOrders vanishing_orders(const WeierstrassLocal& w) {
  VanishingOrders v;
  const Poly* as[5] = {&w.a1, &w.a2, &w.a3, &w.a4, &w.a6};
  for (int i = 0; i < 5; ++i) v.a[i] = as[i]->ord_s();
  const FG fg = f_g(w);
  v.f = fg.f.ord_s();
  v.g = fg.g.ord_s();
  v.disc = discriminant(w).ord_s();
  return v;
}

Poly residual_discriminant(const WeierstrassLocal& w, int m) {
  const Poly d = discriminant(w);
  const int o = d.ord_s();
  if (o != m)
    throw ConfigError("discriminant vanishes to order " + (o == kInfiniteOrder ? std::string("infinity") : std::to_string(o)) +
                      ", expected " + std::to_string(m));
  return d.divide_s(m);
}

namespace {

Poly exact_copy(const Poly& p) {
  Poly q;
  for (const auto& [key, c] : p.terms()) q += Poly::monomial(c, key.first, key.second);
  return q;
}

Rational leading(const UPoly& p) { return p[degree(p)]; }

// x = t, y = s in Fulton's notation
int fulton(Poly F, Poly G) {
  int acc = 0;
  for (long guard = 0; guard < 1000000; ++guard) {
    if (F.at_origin() != 0 || G.at_origin() != 0) return acc;
    if (F.is_zero() || G.is_zero()) throw ConfigError("curves share a component through the origin");
    UPoly fs = F.slice();
    UPoly gs = G.slice();
    trim(fs);
    trim(gs);
    int r = degree(fs);
    int q = degree(gs);
    if (r > q) {
      std::swap(F, G);
      std::swap(fs, gs);
      std::swap(r, q);
    }
    if (r < 0) {
      if (q < 0) throw ConfigError("curves share the component s = 0");
      acc += t_order(gs);
      F = F.divide_s(1);
      continue;
    }
    const Rational lf = leading(fs);
    const Rational lg = leading(gs);
    Poly next = Poly(lf) * G - Poly::monomial(lg, 0, q - r) * F;
    UPoly ns = next.slice();
    trim(ns);
    Rational scale = 1;
    if (!ns.empty()) scale = leading(ns);
    else if (!next.is_zero()) scale = next.terms().begin()->second;
    if (scale != 1) next = Poly(Rational(1 / scale)) * next;
    G = std::move(next);
  }
  throw TableError("intersection multiplicity computation did not terminate");
}

}  // namespace

int local_mu(const Poly& p, const Poly& q) {
  const int mu = fulton(exact_copy(p), exact_copy(q));
  const auto tr = min_trunc(p.truncation(), q.truncation());
  if (tr && mu > *tr)
    throw ConfigError("intersection multiplicity " + std::to_string(mu) + " is not determined at truncation order " +
                      std::to_string(*tr));
  return mu;
}

int milnor_number(const Poly& p) {
  if (p.at_origin() != 0) throw ConfigError("curve does not pass through the origin");
  return local_mu(p.d_ds(), p.d_dt());
}

int epsilon_invariant(const Poly& p) { return milnor_number(p) - 1; }

int degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

int t_order(const UPoly& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) return static_cast<int>(i);
  return kInfiniteOrder;
}

void trim(UPoly& p) { p.resize(degree(p) + 1); }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::optional<UPoly> square_root_up_to_constant(const UPoly& input) {
  UPoly p = input;
  trim(p);
  const int n = degree(p);
  if (n < 0) throw ConfigError("square test on the zero polynomial");
  if (n % 2 != 0) return std::nullopt;
  const Rational lc = p[n];
  for (auto& c : p) c /= lc;
  const int h = n / 2;
  // monic root, coefficients from the top down
  UPoly root(h + 1, Rational(0));
  root[h] = 1;
  for (int k = 1; k <= h; ++k) {
    Rational acc = p[n - k];
    for (int i = 1; i < k; ++i) acc -= root[h - i] * root[h - k + i];
    root[h - k] = acc / 2;
  }
  if (mul(root, root) != p) return std::nullopt;
  return root;
}

bool proportional(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  if (x.empty() || y.empty()) return x.empty() && y.empty();
  if (x.size() != y.size()) return false;
  const Rational ratio = x.back() / y.back();
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != ratio * y[i]) return false;
  return true;
}

namespace {

using fibers::FiberType;
using fibers::Kodaira;
using fibers::Monodromy;

bool square_at(const UPoly& p, const char* what) {
  UPoly q = p;
  trim(q);
  if (q.empty()) throw ConfigError(std::string("monodromy test inconclusive: ") + what + " vanishes identically on s = 0");
  return square_root_up_to_constant(q).has_value();
}

void require_orders(const VanishingOrders& v, std::array<int, 5> minimum, const char* type) {
  for (int i = 0; i < 5; ++i)
    if (v.a[i] < minimum[i]) throw ConfigError(std::string("coefficients are not in Tate form for ") + type);
}

}  // namespace

fibers::FiberType kodaira_classify_local(const WeierstrassLocal& w) {
  const VanishingOrders v = vanishing_orders(w);
  const BInvariants b = b_invariants(w);
  const int of = v.f, og = v.g, od = v.disc;
  FiberType out;
  if (od == 0) throw ConfigError("discriminant does not vanish along s = 0");
  if (od == kInfiniteOrder) throw ConfigError("discriminant vanishes identically");
  if (of >= 4 && og >= 6) throw ValidityError(Violation::NonMinimal, "vanishing orders (4, 6, 12) or higher");

  if (of == 0 && og == 0) {
    out.kodaira = Kodaira::I;
    out.n = od;
    if (od >= 3) out.monodromy = square_at(b.b2.slice(), "b2") ? Monodromy::None : Monodromy::Z2;
    return out;
  }
  out.n = 0;
  if (of >= 1 && og == 1 && od == 2) {
    out.kodaira = Kodaira::II;
    return out;
  }
  if (of == 1 && og >= 2 && od == 3) {
    out.kodaira = Kodaira::III;
    return out;
  }
  if (of >= 2 && og == 2 && od == 4) {
    out.kodaira = Kodaira::IV;
    if (b.b6.ord_s() < 2) throw ConfigError("coefficients are not in Tate form for IV");
    out.monodromy = square_at(b.b6.s_coefficient(2), "b6/s^2") ? Monodromy::None : Monodromy::Z2;
    return out;
  }
  if (of >= 2 && og >= 3 && od == 6) {
    out.kodaira = Kodaira::Istar;
    require_orders(v, {1, 1, 2, 2, 3}, "I0*");
    if (v.a[4] >= 4) {
      const UPoly a21 = w.a2.s_coefficient(1);
      UPoly disc = mul(a21, a21);
      const UPoly a42 = w.a4.s_coefficient(2);
      if (disc.size() < a42.size()) disc.resize(a42.size(), Rational(0));
      for (size_t i = 0; i < a42.size(); ++i) disc[i] -= 4 * a42[i];
      out.monodromy = square_at(disc, "a2,1^2 - 4 a4,2") ? Monodromy::None : Monodromy::Z2;
    } else {
      out.monodromy = Monodromy::Z3;
    }
    return out;
  }
  if (of == 2 && og == 3 && od > 6) {
    out.kodaira = Kodaira::Istar;
    out.n = od - 6;
    if (out.n % 2 == 1) {
      const int k = (out.n + 3) / 2;
      require_orders(v, {1, 1, k, k + 1, 2 * k}, "I*_n");
      out.monodromy = square_at(b.b6.s_coefficient(2 * k), "b6/s^2k") ? Monodromy::None : Monodromy::Z2;
    } else {
      const int k = (out.n + 2) / 2;
      require_orders(v, {1, 1, k, k + 1, 2 * k + 1}, "I*_n");
      const UPoly a4k = w.a4.s_coefficient(k + 1);
      UPoly disc = mul(a4k, a4k);
      const UPoly rhs = mul(w.a2.s_coefficient(1), w.a6.s_coefficient(2 * k + 1));
      if (disc.size() < rhs.size()) disc.resize(rhs.size(), Rational(0));
      for (size_t i = 0; i < rhs.size(); ++i) disc[i] -= 4 * rhs[i];
      out.monodromy = square_at(disc, "a4^2 - 4 a2 a6") ? Monodromy::None : Monodromy::Z2;
    }
    return out;
  }
  if (of >= 3 && og == 4 && od == 8) {
    out.kodaira = Kodaira::IVstar;
    if (b.b6.ord_s() < 4) throw ConfigError("coefficients are not in Tate form for IV*");
    out.monodromy = square_at(b.b6.s_coefficient(4), "b6/s^4") ? Monodromy::None : Monodromy::Z2;
    return out;
  }
  if (of == 3 && og >= 5 && od == 9) {
    out.kodaira = Kodaira::IIIstar;
    return out;
  }
  if (of >= 4 && og == 5 && od == 10) {
    out.kodaira = Kodaira::IIstar;
    return out;
  }
  throw ConfigError("vanishing orders (" + std::to_string(of) + ", " + std::to_string(og) + ", " +
                    std::to_string(od) + ") match no Kodaira type");
}

}  // namespace ecy::local
