#pragma once

// Down-sets σ⁻ ⊂ R_max that describe which multiples λ give generators
// e^i ⊕ λe^j of a hemispace, their up-set complements σ⁺ in R_max ∪ {+inf},
// and the products and intersections the rank-one condition is built from.

#include <string>
#include <utility>

#include "tropical/semiring.hpp"

namespace tropical {

class UpSet;

// {λ ≤ t} when closed, {λ < t} when open. (zero, closed) is {zero};
// (inf, open) is all of R_max.
class BoundarySet {
 public:
  // Throws std::invalid_argument for (zero, open); (inf, closed) becomes
  // (inf, open).
  static BoundarySet make(Scalar threshold, bool closed);
  static BoundarySet only_zero(Model model) { return make(Scalar::zero(model), true); }
  static BoundarySet everything(Model model) { return make(Scalar::top(model), false); }

  const Scalar& threshold() const { return threshold_; }
  bool closed() const { return closed_; }
  Model model() const { return threshold_.model(); }
  bool is_only_zero() const { return threshold_.is_zero(); }
  bool is_everything() const { return threshold_.is_top(); }

  bool contains(const Scalar& lambda) const;
  // Membership in the complement σ⁺ within R_max ∪ {+inf}.
  bool upper_contains(const Scalar& lambda) const { return !contains(lambda); }
  UpSet upper() const;

  // "<=1", "<inf", "=zero" and so on.
  std::string to_string() const;

  friend bool operator==(const BoundarySet& a, const BoundarySet& b) {
    return a.closed_ == b.closed_ && a.threshold_ == b.threshold_;
  }

 private:
  BoundarySet(Scalar threshold, bool closed) : threshold_(std::move(threshold)), closed_(closed) {}
  Scalar threshold_;
  bool closed_;
};

// {λ ≥ t} ∪ {inf} when inclusive, {λ > t} ∪ {inf} otherwise. A threshold of
// inf denotes {inf} alone. Never contains zero.
class UpSet {
 public:
  UpSet(Scalar threshold, bool inclusive);

  const Scalar& threshold() const { return threshold_; }
  bool inclusive() const { return inclusive_; }
  bool only_infinity() const { return threshold_.is_top(); }
  bool contains(const Scalar& lambda) const;

 private:
  Scalar threshold_;
  bool inclusive_;
};

// {λμ : λ ∈ a, μ ∈ b}.
BoundarySet downset_product(const BoundarySet& a, const BoundarySet& b);
// {λμ : λ ∈ a, μ ∈ b}; {inf} absorbs.
UpSet upset_product(const UpSet& a, const UpSet& b);

bool intersects(const BoundarySet& down, const UpSet& up);

// A finite scalar in the interval between lo and hi. lo may be zero (then
// exclusive) and hi may be inf (then exclusive). Prefers the endpoints when
// they are included. Throws if the interval is empty.
Scalar pick_between(const Scalar& lo, bool lo_inclusive, const Scalar& hi, bool hi_inclusive);

// A finite element of down ∩ up. Precondition: intersects(down, up).
Scalar common_finite(const BoundarySet& down, const UpSet& up);

// (a, b) with a ∈ A, b ∈ B and a ⊗ b = v, for finite v in the product.
std::pair<Scalar, Scalar> factor(const Scalar& v, const BoundarySet& A, const BoundarySet& B);
std::pair<Scalar, Scalar> factor(const Scalar& v, const UpSet& A, const UpSet& B);

}  // namespace tropical
