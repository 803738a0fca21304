#pragma once

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ecy::lattice {

using Int = std::int64_t;

class IntersectionLattice {
 public:
  explicit IntersectionLattice(std::vector<std::vector<Int>> form);

  int rank() const { return static_cast<int>(form_.size()); }
  Int pair(int i, int j) const { return form_[i][j]; }
  const std::vector<std::vector<Int>>& form() const { return form_; }
  bool operator==(const IntersectionLattice&) const = default;

 private:
  std::vector<std::vector<Int>> form_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, std::vector<Int> coefficients);
  static DivisorClass zero(LatticePtr lattice);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  const LatticePtr& lattice() const { return lattice_; }
  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(Int k, const DivisorClass& c);
  bool operator==(const DivisorClass& o) const;

 private:
  LatticePtr lattice_;
  std::vector<Int> coeffs_;
};

struct BaseSurface {
  std::string name;
  LatticePtr lattice;
  DivisorClass canonical;
  Int h11;

  Int canonical_squared() const;
  DivisorClass divisor(std::vector<Int> coefficients) const { return {lattice, std::move(coefficients)}; }
};

Int intersect(const DivisorClass& a, const DivisorClass& b);

// 1 + (K + c).c / 2
Int arithmetic_genus(const BaseSurface& base, const DivisorClass& c);

// P2, Fn (n >= 0, basis s, f with s.s = -n), P1xP1
BaseSurface builtin_base(const std::string& name, std::optional<int> parameter = std::nullopt);

// {"name"?, "form": [[..]], "canonical": [..], "h11": n}
BaseSurface load_base(const nlohmann::json& description);

nlohmann::json base_to_json(const BaseSurface& base);

}  // namespace ecy::lattice
