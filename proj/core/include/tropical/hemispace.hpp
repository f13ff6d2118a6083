#pragma once

// Conical hemispaces given by a row set I, a column set J and one boundary
// set per (i, j) ∈ I × J: the cone generated by e^i (i ∈ I) and
// e^i ⊕ λe^j with λ ∈ σ_ij. A specification is valid exactly when the
// boundary sets satisfy the rank-one condition; the complement then has the
// same form with I and J swapped.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropical/boundary.hpp"
#include "tropical/index_set.hpp"
#include "tropical/tlinalg.hpp"

namespace tropical {

class SpecError : public std::invalid_argument {
 public:
  explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

// Unvalidated specification. Indices are 0-based.
struct RawSpec {
  Model model = Model::MaxTimes;
  std::size_t dim = 0;
  IndexSet rows;
  IndexSet cols;
  std::map<std::pair<std::size_t, std::size_t>, BoundarySet> sigma;

  const BoundarySet& at(std::size_t i, std::size_t j) const;

  friend bool operator==(const RawSpec&, const RawSpec&) = default;
};

// Rows and columns non-empty, disjoint, covering [dim]; one entry per pair.
void check_structure(const RawSpec& raw);

struct Violation {
  // Direct: σ⁺_{i1 j2} σ⁺_{i2 j1} meets σ⁻_{i1 j1} σ⁻_{i2 j2}.
  // Mirrored: σ⁻_{i1 j2} σ⁻_{i2 j1} meets σ⁺_{i1 j1} σ⁺_{i2 j2}.
  enum class Side { Direct, Mirrored };
  std::size_t i1, i2, j1, j2;
  Side side;

  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// First violation in lexicographic (i1 < i2, j1 < j2, side) order.
std::optional<Violation> rank_one_check(const RawSpec& raw);

class RankOneViolation : public SpecError {
 public:
  explicit RankOneViolation(const Violation& v)
      : SpecError("rank-one condition fails: " + v.to_string()), violation(v) {}
  Violation violation;
};

// Per-row split of the columns by boundary type.
struct RowPartition {
  IndexSet strict;    // finite threshold, open
  IndexSet weak;      // finite threshold, closed
  IndexSet zero;      // only zero
  IndexSet infinite;  // everything
};

struct ThinClass {
  IndexSet rows;      // rows sharing the same infinite and zero column sets
  IndexSet active;    // columns with a finite threshold
  IndexSet infinite;  // columns with threshold inf
  IndexSet zero;      // columns with threshold zero
  // Rows by decreasing weak set, columns by decreasing set of rows in which
  // they are weak; ties by index.
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> col_order;
};

struct ThinStructure {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<RowPartition> partition;  // indexed by coordinate, rows only
  std::vector<ThinClass> classes;       // in increasing order
  std::vector<std::size_t> class_of;    // coordinate -> class, npos for columns
  // Finite thresholds factor as σ_ij = β_i / γ_j; β is 1 at the first row
  // of each class.
  std::vector<std::optional<Scalar>> beta;
  std::vector<std::optional<Scalar>> gamma;
};

// Precondition: raw passes check_structure and rank_one_check. Throws
// std::logic_error if the structure it derives is inconsistent.
ThinStructure thin_structure(const RawSpec& raw);

class HemispaceSpec {
 public:
  // Throws SpecError (RankOneViolation for the rank-one condition).
  static HemispaceSpec validate(RawSpec raw);

  const RawSpec& raw() const { return raw_; }
  Model model() const { return raw_.model; }
  std::size_t dim() const { return raw_.dim; }
  const IndexSet& rows() const { return raw_.rows; }
  const IndexSet& cols() const { return raw_.cols; }
  const BoundarySet& at(std::size_t i, std::size_t j) const { return raw_.at(i, j); }
  const ThinStructure& thin() const { return *thin_; }

  friend bool operator==(const HemispaceSpec& a, const HemispaceSpec& b) { return a.raw_ == b.raw_; }

 private:
  HemispaceSpec(RawSpec raw, std::shared_ptr<const ThinStructure> thin)
      : raw_(std::move(raw)), thin_(std::move(thin)) {}
  RawSpec raw_;
  std::shared_ptr<const ThinStructure> thin_;
};

enum class Decision {
  NullVector,          // x = 0
  NoRowSupport,        // every row coordinate is zero
  CoordinatePlane,     // class without finite columns, x vanishes off it
  NonzeroOffClass,     // a zero-threshold column is nonzero
  InequalityFails,     // a column term exceeds the row maximum
  EqualityUnattained,  // a column ties the maximum without a closed partner
  Accepted,
};

struct MembershipTrace {
  bool member = false;
  Decision decision = Decision::NullVector;
  std::optional<std::size_t> cls;         // deciding class
  std::optional<Vec> reduced;             // x with later classes and their free columns cleared
  std::optional<std::size_t> coordinate;  // offending column, if any

  std::string explain(const HemispaceSpec& spec) const;
};

MembershipTrace explain_member(const HemispaceSpec& spec, const Vec& x);
bool conical_member(const HemispaceSpec& spec, const Vec& x);

// Swaps rows and columns, inverts thresholds and flips strictness.
HemispaceSpec complement_spec(const HemispaceSpec& spec);

// Membership in the sum of the class-r row cones, for x supported on the
// class rows and active columns.
bool class_member(const HemispaceSpec& spec, std::size_t cls, const Vec& x);
// Membership in the reflected cone of class r: the class plane minus the
// class cone, plus zero. Same support precondition as class_member.
bool reflection_member(const HemispaceSpec& spec, std::size_t cls, const Vec& x);

// Affine hemispace in R_max^n as the section at last coordinate 1 of a
// conical hemispace in dimension n + 1 whose rows include the last
// coordinate: the section of base itself when contains_zero, otherwise the
// section of its complement.
class AffineHemispace {
 public:
  // Throws SpecError if the last coordinate is not a row or the result
  // would be all of R_max^n.
  static AffineHemispace make(HemispaceSpec base, bool contains_zero);

  const HemispaceSpec& base() const { return base_; }
  bool contains_zero() const { return contains_zero_; }
  std::size_t dim() const { return base_.dim() - 1; }
  Model model() const { return base_.model(); }

  friend bool operator==(const AffineHemispace&, const AffineHemispace&) = default;

 private:
  AffineHemispace(HemispaceSpec base, bool contains_zero)
      : base_(std::move(base)), contains_zero_(contains_zero) {}
  HemispaceSpec base_;
  bool contains_zero_;
};

bool affine_member(const AffineHemispace& h, const Vec& x);
AffineHemispace affine_complement(const AffineHemispace& h);
// The conical hemispace whose section is h.
HemispaceSpec defining_cone(const AffineHemispace& h);

// Every threshold is finite or zero and every boundary closed.
bool is_closed(const HemispaceSpec& spec);
bool is_closed(const AffineHemispace& h);

enum class BoundaryOwner { First, Second, Zero, Infinite };

struct AlphaEntry {
  std::size_t i, j;
  Scalar value;
  BoundaryOwner owner;
};

// Boundary multipliers of the pair (v1, v2). Throws unless v2 is the
// complement of v1.
std::vector<AlphaEntry> alpha_matrix(const HemispaceSpec& v1, const HemispaceSpec& v2);

}  // namespace tropical
