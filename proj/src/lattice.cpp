#include "ecy/lattice.hpp"

#include "ecy/error.hpp"

#include <fmt/format.h>

namespace ecy::lattice {

IntersectionLattice::IntersectionLattice(std::vector<std::vector<Int>> form) : form_(std::move(form)) {
  const auto n = form_.size();
  if (n == 0) throw ConfigError("lattice rank must be at least 1");
  for (const auto& row : form_)
    if (row.size() != n) throw ConfigError("intersection form is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (form_[i][j] != form_[j][i])
        throw ConfigError(fmt::format("intersection form is not symmetric at ({}, {})", i, j));
}

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Int> coefficients)
    : lattice_(std::move(lattice)), coeffs_(std::move(coefficients)) {
  if (!lattice_) throw ConfigError("divisor class without lattice");
  if (static_cast<int>(coeffs_.size()) != lattice_->rank())
    throw ConfigError(fmt::format("divisor class has {} coefficients, lattice rank is {}", coeffs_.size(),
                                  lattice_->rank()));
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const auto r = lattice->rank();
  return {std::move(lattice), std::vector<Int>(r, 0)};
}

bool DivisorClass::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

static void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (a.lattice() != b.lattice() && !(*a.lattice() == *b.lattice()))
    throw ConfigError("divisor classes live on different lattices");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same(*this, o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return {lattice_, std::move(c)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const { return -1 * *this; }

DivisorClass operator*(Int k, const DivisorClass& c) {
  auto v = c.coeffs_;
  for (auto& x : v) x *= k;
  return {c.lattice_, std::move(v)};
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  return (lattice_ == o.lattice_ || *lattice_ == *o.lattice_) && coeffs_ == o.coeffs_;
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  const auto& L = *a.lattice();
  Int total = 0;
  for (int i = 0; i < L.rank(); ++i) {
    if (a.coefficients()[i] == 0) continue;
    for (int j = 0; j < L.rank(); ++j) total += a.coefficients()[i] * L.pair(i, j) * b.coefficients()[j];
  }
  return total;
}

Int BaseSurface::canonical_squared() const { return intersect(canonical, canonical); }

Int arithmetic_genus(const BaseSurface& base, const DivisorClass& c) {
  const Int adj = intersect(base.canonical + c, c);
  if (adj % 2 != 0)
    throw ValidityError(Violation::NonIntegral, fmt::format("(K + C).C = {} is odd; class is not representable", adj));
  return 1 + adj / 2;
}

static BaseSurface make_base(std::string name, std::vector<std::vector<Int>> form, std::vector<Int> k, Int h11) {
  auto L = std::make_shared<const IntersectionLattice>(std::move(form));
  return BaseSurface{std::move(name), L, DivisorClass(L, std::move(k)), h11};
}

BaseSurface builtin_base(const std::string& name, std::optional<int> parameter) {
  if (name == "P2") return make_base("P2", {{1}}, {-3}, 1);
  if (name == "P1xP1") return make_base("P1xP1", {{0, 1}, {1, 0}}, {-2, -2}, 2);
  if (name == "Fn" || (name.size() > 1 && name[0] == 'F')) {
    int n = 0;
    if (name == "Fn") {
      if (!parameter) throw ConfigError("Fn needs a parameter n");
      n = *parameter;
    } else {
      try {
        std::size_t used = 0;
        n = std::stoi(name.substr(1), &used);
        if (used != name.size() - 1) throw ConfigError("unknown base " + name);
      } catch (const std::logic_error&) {
        throw ConfigError("unknown base " + name);
      }
    }
    if (n < 0) throw ConfigError("Fn needs n >= 0");
    return make_base(fmt::format("F{}", n), {{-n, 1}, {1, 0}}, {-2, -(n + 2)}, 2);
  }
  throw ConfigError("unknown base " + name);
}

BaseSurface load_base(const nlohmann::json& d) {
  if (!d.is_object()) throw ConfigError("base description must be an object");
  for (const char* key : {"form", "canonical", "h11"})
    if (!d.contains(key)) throw ConfigError(fmt::format("base description lacks \"{}\"", key));
  std::vector<std::vector<Int>> form;
  std::vector<Int> k;
  Int h11 = 0;
  try {
    form = d.at("form").get<std::vector<std::vector<Int>>>();
    k = d.at("canonical").get<std::vector<Int>>();
    h11 = d.at("h11").get<Int>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed base description: ") + e.what());
  }
  if (d.contains("rank") && d.at("rank").get<Int>() != static_cast<Int>(form.size()))
    throw ConfigError("base rank does not match the form");
  if (h11 < 1) throw ConfigError("h11 must be positive");
  return make_base(d.value("name", std::string("custom")), std::move(form), std::move(k), h11);
}

nlohmann::json base_to_json(const BaseSurface& base) {
  return {{"name", base.name},
          {"rank", base.lattice->rank()},
          {"form", base.lattice->form()},
          {"canonical", base.canonical.coefficients()},
          {"h11", base.h11}};
}

}  // namespace ecy::lattice
