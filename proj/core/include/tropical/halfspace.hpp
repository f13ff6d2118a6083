#pragma once

// Closed hemispaces as tropical halfspaces:
//   max_{j ∈ lhs} γ_j x_j ⊕ α  ≤  max_{i ∈ rhs} β_i x_i ⊕ δ,  x_k = zero for k ∈ vanish.
// Conical forms have α = δ = zero.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropical/hemispace.hpp"

namespace tropical {

class NotClosedError : public SpecError {
 public:
  NotClosedError(std::size_t i, std::size_t j, const std::string& what)
      : SpecError(what), i(i), j(j) {}
  std::size_t i, j;
};

struct HalfspaceForm {
  Model model;
  std::size_t dim;
  IndexSet lhs;
  IndexSet rhs;
  IndexSet vanish;
  std::vector<std::optional<Scalar>> coef;  // γ on lhs, β on rhs
  Scalar lhs_offset;                        // α
  Scalar rhs_offset;                        // δ

  bool contains(const Vec& x) const;
  std::string to_string() const;
};

// Throws NotClosedError naming the first open or infinite entry.
HalfspaceForm to_halfspace(const HemispaceSpec& spec);
HalfspaceForm to_halfspace(const AffineHemispace& h);

}  // namespace tropical
