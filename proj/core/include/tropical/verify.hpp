#pragma once

// Grid-based checks of the structural claims: partition, closure,
// convexity, sector and halfspace descriptions. Each check returns a
// Verdict with the first counterexample found; randomized checks take an
// explicit seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tropical/halfspace.hpp"
#include "tropical/hemispace.hpp"
#include "tropical/sectors.hpp"

namespace tropical {

class GridSpec {
 public:
  // values are sorted and deduplicated.
  GridSpec(Model model, std::size_t n, std::vector<Scalar> values);

  Model model() const { return model_; }
  std::size_t dim() const { return n_; }
  const std::vector<Scalar>& values() const { return values_; }
  std::size_t size() const;
  Vec point(std::size_t index) const;
  std::vector<Vec> points() const;
  // Index of the coordinatewise maximum of two grid points.
  std::size_t join_index(std::size_t a, std::size_t b) const;

 private:
  Model model_;
  std::size_t n_;
  std::vector<Scalar> values_;
};

// values plus every finite threshold of the spec.
std::vector<Scalar> with_thresholds(std::vector<Scalar> values, const RawSpec& raw);

struct Verdict {
  Verdict() = default;
  explicit Verdict(std::string name) : property(std::move(name)) {}

  std::string property;
  bool passed = true;
  std::vector<Vec> counterexample;
  std::string detail;
  std::size_t cases = 0;

  void fail(std::vector<Vec> example, std::string why);
  std::string to_json() const;
};

using MemberOracle = std::function<bool(const Vec&)>;

// Every nonzero grid point lies in exactly one of the spec and its
// structural complement; zero lies in both.
Verdict partition_check(const HemispaceSpec& spec, const GridSpec& grid);
Verdict partition_check(const AffineHemispace& h, const GridSpec& grid);

// Closure of the oracle's grid members under ⊕ (all pairs) and under
// multiplication by each scalar.
Verdict closure_check(const std::string& name, const MemberOracle& member, const GridSpec& grid,
                      const std::vector<Scalar>& scalars);

// Sampled member pairs; k points per segment must stay members.
Verdict segment_convexity_check(const std::string& name, const MemberOracle& member, const GridSpec& grid,
                                std::size_t pairs, std::size_t k, std::uint64_t seed);

struct ViolationWitness {
  Violation violation;
  Vec z;
  std::vector<Vec> upper_gens;  // e^{i1} ⊕ β12 e^{j2}, e^{i2} ⊕ β21 e^{j1}; multipliers in σ⁺
  std::vector<Vec> lower_gens;  // e^{i1} ⊕ γ11 e^{j1}, e^{i2} ⊕ γ22 e^{j2}; multipliers in σ⁻
};

// A nonzero vector in the cones of both generator pairs of the first
// rank-one violation. Throws std::invalid_argument if there is none.
ViolationWitness violation_witness(const RawSpec& raw);

// Row-partition, chain, overlap, proportionality, class nesting and
// within-class ordering laws of the thin structure.
Verdict thin_laws_check(const HemispaceSpec& spec);

// Halfspace form agrees with membership on the grid. Needs a closed spec.
Verdict halfspace_check(const HemispaceSpec& spec, const GridSpec& grid);
Verdict halfspace_check(const AffineHemispace& h, const GridSpec& grid);

// Class cone and reflection split each class plane; the reflection also
// matches the sum of per-column reflections on the grid.
Verdict reflection_check(const HemispaceSpec& spec, const GridSpec& grid);

// e^i ⊕ λe^j falls on the side its multiplier's boundary set predicts, for
// λ at, just below and just above each threshold.
Verdict generators_check(const HemispaceSpec& spec);

// Every nonzero grid point has a (quasi)sector of its own inside its side,
// and the sector types found on the two sides are disjoint.
Verdict sector_union_check(const HemispaceSpec& spec, const GridSpec& grid);
Verdict sector_union_check(const AffineHemispace& h, const GridSpec& grid);

// Membership in d agrees with the absence of a separating sector type,
// grid members of d avoid the separating sector, and grid members found in
// every sector at y reassemble y.
Verdict multiorder_invariant_check(const PRDecomposition& d, const GridSpec& grid);

// Generator and inequality forms of (quasi)sectors agree at every grid
// base and every grid point.
Verdict sector_forms_check(const GridSpec& grid);

// pr_member(x, d) agrees with membership after homogenizing and taking the
// section again.
Verdict homogenization_check(const PRDecomposition& d, const GridSpec& grid);

// Approximate boundary multiplier: bisection on λ ∈ [lo, hi] for the
// switch of member(e^i ⊕ λe^j). Labeled approximate; exact values come
// from alpha_matrix.
Scalar bisect_boundary(const MemberOracle& member, std::size_t i, std::size_t j, std::size_t n, Scalar lo,
                       Scalar hi, int iterations);

}  // namespace tropical
