#pragma once

// Vectors over the extended semirings, finitely generated cones and
// convex sets, and their membership tests.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/index_set.hpp"
#include "tropical/semiring.hpp"

namespace tropical {

// Vector in R_max^n; coordinates are never Top.
class Vec {
 public:
  Vec(Model model, std::size_t n);
  Vec(Model model, std::vector<Scalar> coords);

  static Vec unit_vector(Model model, std::size_t i, std::size_t n);

  Model model() const { return model_; }
  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  void set(std::size_t i, Scalar value);
  bool is_zero() const;
  const std::vector<Scalar>& coords() const { return coords_; }

  friend bool operator==(const Vec& a, const Vec& b);

 private:
  Model model_;
  std::vector<Scalar> coords_;
};

IndexSet support(const Vec& x);
Vec oplus(const Vec& x, const Vec& y);
Vec scale(const Scalar& lambda, const Vec& x);
// Coordinates of x indexed by `keep`, in order.
Vec restrict_to(const Vec& x, const std::vector<std::size_t>& keep);
// x with one extra trailing coordinate.
Vec append(const Vec& x, const Scalar& last);
Vec drop_last(const Vec& x);

// Accepts "[a,b,c]" or "a,b,c" with scalar tokens.
Vec parse_vec(Model model, std::string_view text);
std::string to_string(const Vec& x);
std::ostream& operator<<(std::ostream& os, const Vec& x);

// conv(points) ⊕ cone(rays). Empty points means cone(rays).
struct PRDecomposition {
  Model model;
  std::size_t dim;
  std::vector<Vec> points;
  std::vector<Vec> rays;
};

struct ConeMembership {
  bool member = false;
  // Greatest coefficients with ⊕ λ_g g ≤ x, one per generator.
  std::vector<Scalar> coefficients;
};

// Exact membership in cone(gens) by residuation.
ConeMembership cone_member_fg(const Vec& x, const std::vector<Vec>& gens);

// k deterministic points of the tropical segment [x, y]: x ⊕ y first, then x,
// y, the breakpoints, then a ladder of interior combinations.
std::vector<Vec> segment_points(const Vec& x, const Vec& y, std::size_t k);

// {(p, 1)} ∪ {(r, 0)} in dimension dim + 1.
std::vector<Vec> homogenize(const PRDecomposition& d);

struct SectionResult {
  PRDecomposition decomposition;
  // True when no generator has a nonzero last coordinate, so the literal
  // section at last coordinate 1 is empty.
  bool section_empty = false;
};

SectionResult section_unity(const std::vector<Vec>& gens);

bool pr_member(const Vec& x, const PRDecomposition& d);

enum class GatherMode { SupportChecked, CallerAsserted };

class GatherError : public std::invalid_argument {
 public:
  GatherError(std::size_t set_index, std::size_t ray_index, const std::string& what)
      : std::invalid_argument(what), set_index(set_index), ray_index(ray_index) {}
  std::size_t set_index;
  std::size_t ray_index;
};

// Union of the point and ray lists. In SupportChecked mode every ray z of
// set l needs a point of set l whose support lies inside supp(z).
PRDecomposition gather(const std::vector<PRDecomposition>& parts, GatherMode mode);

enum class RecessionVerdict { No, SampledYes };

// {2^k : -m <= k <= m}, as ⊗-powers of the scalar 2 in the model.
std::vector<Scalar> lambda_ladder(Model model, long m);

// Checks x ⊕ λz ∈ d for every sampled λ. Throws if x is not in d.
RecessionVerdict is_locally_recessive(const Vec& z, const Vec& x, const PRDecomposition& d,
                                      const std::vector<Scalar>& lambdas);

}  // namespace tropical
