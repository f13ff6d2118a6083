#include "tropical/semiring.hpp"

#include <cctype>
#include <ostream>

namespace tropical {

std::string_view to_string(Model model) {
  return model == Model::MaxPlus ? "max-plus" : "max-times";
}

Model parse_model(std::string_view text) {
  if (text == "max-plus") return Model::MaxPlus;
  if (text == "max-times") return Model::MaxTimes;
  throw ParseError("unknown model '" + std::string(text) +
                   "' (expected max-plus or max-times)");
}

Scalar Scalar::unit(Model model) {
  return Scalar(model, Kind::Finite, model == Model::MaxPlus ? 0 : 1);
}

Scalar Scalar::finite(Model model, mpq_class value) {
  value.canonicalize();
  if (model == Model::MaxTimes && sgn(value) <= 0) {
    throw std::domain_error("max-times finite scalars must be positive, got " +
                            value.get_str());
  }
  return Scalar(model, Kind::Finite, std::move(value));
}

Scalar Scalar::finite(Model model, long num, unsigned long den) {
  return finite(model, mpq_class(num, den));
}

bool Scalar::is_unit() const {
  return kind_ == Kind::Finite &&
         value_ == (model_ == Model::MaxPlus ? 0 : 1);
}

const mpq_class& Scalar::value() const {
  if (kind_ != Kind::Finite) {
    throw std::logic_error("value() called on a non-finite scalar");
  }
  return value_;
}

void require_same_model(const Scalar& a, const Scalar& b) {
  if (a.model() != b.model()) {
    throw ModelMismatch("cannot combine " + std::string(to_string(a.model())) +
                        " and " + std::string(to_string(b.model())) + " scalars");
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same_model(a, b);
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != Scalar::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same_model(a, b);
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != Scalar::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar otimes(const Scalar& a, const Scalar& b) {
  require_same_model(a, b);
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.model());
  if (a.is_top() || b.is_top()) return Scalar::top(a.model());
  if (a.model() == Model::MaxPlus) {
    return Scalar::finite(a.model(), a.value() + b.value());
  }
  return Scalar::finite(a.model(), a.value() * b.value());
}

Scalar inverse(const Scalar& a) {
  if (a.is_zero()) return Scalar::top(a.model());
  if (a.is_top()) return Scalar::zero(a.model());
  if (a.model() == Model::MaxPlus) return Scalar::finite(a.model(), -a.value());
  return Scalar::finite(a.model(), 1 / a.value());
}

Scalar residual(const Scalar& a, const Scalar& b) { return otimes(a, inverse(b)); }

Scalar power(const Scalar& a, long k) {
  if (!a.is_finite()) throw std::domain_error("power() needs a finite base");
  Scalar base = k < 0 ? inverse(a) : a;
  Scalar out = Scalar::unit(a.model());
  for (long i = 0; i < (k < 0 ? -k : k); ++i) out = otimes(out, base);
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(Model model, std::string_view text) {
  if (text == "zero") return Scalar::zero(model);
  if (text == "inf") return Scalar::top(model);

  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed scalar '" + std::string(text) +
                     "' (expected zero, inf, p or p/q)");
  }
  mpq_class q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = mpz_class(std::string(den));
  if (q.get_den() == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (text.front() == '-') q.get_num() = -q.get_num();
  q.canonicalize();

  if (model == Model::MaxTimes) {
    if (q == 0) return Scalar::zero(model);
    if (q < 0) {
      throw ParseError("negative value '" + std::string(text) +
                       "' is not a max-times scalar");
    }
  }
  return Scalar::finite(model, q);
}

std::string to_string(const Scalar& a) {
  switch (a.kind()) {
    case Scalar::Kind::Bottom: return "zero";
    case Scalar::Kind::Top: return "inf";
    case Scalar::Kind::Finite: return a.value().get_str();
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) { return os << to_string(a); }

}  // namespace tropical
