#include "tropical/boundary.hpp"

#include <stdexcept>

namespace tropical {

BoundarySet BoundarySet::make(Scalar threshold, bool closed) {
  if (threshold.is_zero() && !closed) {
    throw std::invalid_argument("boundary set (zero, open) is empty and not allowed");
  }
  if (threshold.is_top()) closed = false;
  return BoundarySet(std::move(threshold), closed);
}

bool BoundarySet::contains(const Scalar& lambda) const {
  if (lambda.is_top()) return false;
  if (threshold_.is_top()) return true;
  return closed_ ? lambda <= threshold_ : lambda < threshold_;
}

UpSet BoundarySet::upper() const {
  if (threshold_.is_top()) return UpSet(threshold_, false);
  return UpSet(threshold_, !closed_);
}

std::string BoundarySet::to_string() const {
  if (threshold_.is_zero()) return "=zero";
  return (closed_ ? "<=" : "<") + tropical::to_string(threshold_);
}

UpSet::UpSet(Scalar threshold, bool inclusive)
    : threshold_(std::move(threshold)), inclusive_(inclusive) {
  if (threshold_.is_zero() && inclusive_) {
    throw std::invalid_argument("up-sets never contain zero");
  }
  if (threshold_.is_top()) inclusive_ = false;
}

bool UpSet::contains(const Scalar& lambda) const {
  if (lambda.is_top()) return true;
  if (threshold_.is_top()) return false;
  return inclusive_ ? threshold_ <= lambda : threshold_ < lambda;
}

BoundarySet downset_product(const BoundarySet& a, const BoundarySet& b) {
  require_same_model(a.threshold(), b.threshold());
  if (a.is_only_zero() || b.is_only_zero()) return BoundarySet::only_zero(a.model());
  if (a.is_everything() || b.is_everything()) return BoundarySet::everything(a.model());
  return BoundarySet::make(otimes(a.threshold(), b.threshold()), a.closed() && b.closed());
}

UpSet upset_product(const UpSet& a, const UpSet& b) {
  require_same_model(a.threshold(), b.threshold());
  if (a.only_infinity() || b.only_infinity()) return UpSet(Scalar::top(a.threshold().model()), false);
  return UpSet(otimes(a.threshold(), b.threshold()), a.inclusive() && b.inclusive());
}

bool intersects(const BoundarySet& down, const UpSet& up) {
  require_same_model(down.threshold(), up.threshold());
  if (up.only_infinity() || down.is_only_zero()) return false;
  if (down.is_everything()) return true;
  if (up.threshold() < down.threshold()) return true;
  return up.threshold() == down.threshold() && down.closed() && up.inclusive();
}

Scalar pick_between(const Scalar& lo, bool lo_inclusive, const Scalar& hi, bool hi_inclusive) {
  require_same_model(lo, hi);
  const Model m = lo.model();
  lo_inclusive = lo_inclusive && lo.is_finite();
  hi_inclusive = hi_inclusive && hi.is_finite();
  if (hi_inclusive && (lo < hi || (lo == hi && lo_inclusive))) return hi;
  if (!(lo < hi)) throw std::invalid_argument("pick_between: empty interval");
  if (lo_inclusive) return lo;
  if (lo.is_finite() && hi.is_finite()) return Scalar::finite(m, (lo.value() + hi.value()) / 2);
  if (lo.is_zero() && hi.is_finite()) {
    return Scalar::finite(m, m == Model::MaxPlus ? mpq_class(hi.value() - 1) : mpq_class(hi.value() / 2));
  }
  if (lo.is_finite()) {
    return Scalar::finite(m, m == Model::MaxPlus ? mpq_class(lo.value() + 1) : mpq_class(lo.value() * 2));
  }
  return Scalar::unit(m);
}

Scalar common_finite(const BoundarySet& down, const UpSet& up) {
  if (!intersects(down, up)) throw std::invalid_argument("common_finite: sets are disjoint");
  return pick_between(up.threshold(), up.inclusive(), down.threshold(), down.closed());
}

std::pair<Scalar, Scalar> factor(const Scalar& v, const BoundarySet& A, const BoundarySet& B) {
  if (!v.is_finite()) throw std::invalid_argument("factor: value must be finite");
  const Model m = v.model();
  // a ∈ A and v/a ∈ B, i.e. a above v/t_B.
  Scalar lo = B.is_everything() ? Scalar::zero(m) : residual(v, B.threshold());
  bool lo_inc = !B.is_everything() && B.closed();
  Scalar a = pick_between(lo, lo_inc, A.threshold(), A.closed());
  Scalar b = residual(v, a);
  if (!A.contains(a) || !B.contains(b)) throw std::logic_error("factor: value not in the product");
  return {a, b};
}

std::pair<Scalar, Scalar> factor(const Scalar& v, const UpSet& A, const UpSet& B) {
  if (!v.is_finite()) throw std::invalid_argument("factor: value must be finite");
  const Model m = v.model();
  // a ∈ A and v/a ∈ B, i.e. a below v/t_B.
  Scalar hi = B.threshold().is_zero() ? Scalar::top(m) : residual(v, B.threshold());
  Scalar a = pick_between(A.threshold(), A.inclusive(), hi, B.inclusive());
  Scalar b = residual(v, a);
  if (!A.contains(a) || !B.contains(b)) throw std::logic_error("factor: value not in the product");
  return {a, b};
}

}  // namespace tropical
