#pragma once

// Scalars of the max-plus and max-times semirings, extended by a top element.
//
// A Scalar carries its model so that mixing the two semirings is caught at
// the operation that would mix them. Finite max-times payloads are strictly
// positive; the additive zero is a separate kind, not the rational 0.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropical {

enum class Model : std::uint8_t { MaxPlus, MaxTimes };

std::string_view to_string(Model model);
Model parse_model(std::string_view text);

class ModelMismatch : public std::invalid_argument {
 public:
  explicit ModelMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

class Scalar {
 public:
  enum class Kind : std::uint8_t { Bottom, Finite, Top };

  static Scalar zero(Model model) { return Scalar(model, Kind::Bottom, 0); }
  static Scalar top(Model model) { return Scalar(model, Kind::Top, 0); }
  static Scalar unit(Model model);
  // Throws std::domain_error for a non-positive max-times payload.
  static Scalar finite(Model model, mpq_class value);
  static Scalar finite(Model model, long num, unsigned long den = 1);

  Model model() const { return model_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Bottom; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_unit() const;

  // Precondition: is_finite().
  const mpq_class& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(Model model, Kind kind, mpq_class value)
      : model_(model), kind_(kind), value_(std::move(value)) {}

  Model model_;
  Kind kind_;
  mpq_class value_;
};

void require_same_model(const Scalar& a, const Scalar& b);

Scalar oplus(const Scalar& a, const Scalar& b);
// Bottom absorbs everything, including Top.
Scalar otimes(const Scalar& a, const Scalar& b);
// Finite values invert; Top and Bottom swap.
Scalar inverse(const Scalar& a);
// a ⊗ inverse(b).
Scalar residual(const Scalar& a, const Scalar& b);
// k-th ⊗-power of a finite scalar; negative k uses the inverse.
Scalar power(const Scalar& a, long k);

Scalar parse_scalar(Model model, std::string_view text);
std::string to_string(const Scalar& a);
std::ostream& operator<<(std::ostream& os, const Scalar& a);

}  // namespace tropical
