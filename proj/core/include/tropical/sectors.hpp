#pragma once

// Sectors, quasisectors and their complements, in inequality form and in
// generator form, plus the two constructions that tie sectors to
// membership: common points of equal-type sectors and the reassembly of a
// vector from one witness per quasisector.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropical/tlinalg.hpp"

namespace tropical {

// Sector type: a coordinate index in supp(base), or the homogenizing type
// (the (n+1)-th coordinate after homogenization).
class SectorType {
 public:
  static SectorType coordinate(std::size_t i) { return SectorType(i, false); }
  static SectorType homogenizing() { return SectorType(0, true); }

  bool is_homogenizing() const { return homogenizing_; }
  // Precondition: !is_homogenizing().
  std::size_t index() const;
  // 1-based; the homogenizing type prints as n+1.
  std::string to_string(std::size_t n) const;

  friend bool operator==(const SectorType&, const SectorType&) = default;

 private:
  SectorType(std::size_t i, bool h) : index_(i), homogenizing_(h) {}
  std::size_t index_;
  bool homogenizing_;
};

struct SectorId {
  Vec base;
  SectorType type;
};

// Conical quasisector CS_i(y); needs y != 0 and i in supp(y).
bool quasisector_contains(const SectorId& id, const Vec& x);
// Affine sector S_i(y); i in supp(y) or homogenizing.
bool sector_contains(const SectorId& id, const Vec& x);
bool semispace_contains(const SectorId& id, const Vec& x);

// {e^i ⊕ (y_j / y_i) e^j : j in supp(y)}.
std::vector<Vec> quasisector_gens(const SectorId& id);
PRDecomposition sector_pr(const SectorId& id);

enum class Geometry { Conical, Affine };

// A point in the type-i (quasi)sectors of both x and y.
Vec common_point(const Vec& x, const Vec& y, SectorType type, Geometry geometry);

// witnesses[i] must lie in CS_i(y) for every i in supp(y); returns
// ⊕ (y_i / w_i) w^i, which equals y.
Vec assemble_from_witnesses(const Vec& y, const std::vector<std::optional<Vec>>& witnesses);

// A type i with S_i(y) ∩ d = ∅, found by testing the homogenized
// generators of d against the homogenized quasisector at (y, 1). One exists
// exactly when y is not in d.
std::optional<SectorType> separating_type(const Vec& y, const PRDecomposition& d);

}  // namespace tropical
