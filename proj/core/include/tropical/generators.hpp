#pragma once

// Seeded random instances for property checks. Every generator takes the
// engine explicitly; make_rng derives independent streams from one seed.

#include <cstdint>
#include <random>
#include <vector>

#include "tropical/hemispace.hpp"

namespace tropical {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// {zero, 1/2, 1, 2, 4} in max-times; {zero, -1, 0, 1, 2} in max-plus.
std::vector<Scalar> default_grid_values(Model model);

Scalar random_finite(Rng& rng, Model model, long lo_exp, long hi_exp);
Vec random_vec(Rng& rng, const std::vector<Scalar>& values, std::size_t n);

struct SpecShape {
  bool closed_only = false;  // every boundary closed with a finite or zero threshold
  double zero_rate = 0.15;   // share of zero thresholds
  double inf_rate = 0.15;    // share of inf thresholds (ignored when closed_only)
};

// Random rows/columns and thresholds, with no validity filter.
RawSpec random_raw_spec(Rng& rng, Model model, std::size_t n, const SpecShape& shape);
// Random spec passing the rank-one condition. Needs n >= 2.
HemispaceSpec random_valid_spec(Rng& rng, Model model, std::size_t n, const SpecShape& shape = {});
// Random spec failing the rank-one condition. Needs n >= 4.
RawSpec random_violating_spec(Rng& rng, Model model, std::size_t n);
// Random affine hemispace in R_max^n (n >= 1). When closed, its defining
// cone is closed.
AffineHemispace random_affine(Rng& rng, Model model, std::size_t n, bool closed);

PRDecomposition random_pr(Rng& rng, Model model, std::size_t n, std::size_t points, std::size_t rays);

}  // namespace tropical
