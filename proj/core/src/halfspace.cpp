#include "tropical/halfspace.hpp"

namespace tropical {

namespace {

void require_closed(const HemispaceSpec& spec) {
  for (const auto& [key, s] : spec.raw().sigma) {
    if (!s.closed() || s.is_everything()) {
      throw NotClosedError(key.first, key.second,
                           "entry (" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) +
                               ") has boundary " + s.to_string() + ", so the hemispace is not closed");
    }
  }
}

std::string term(const Scalar& c, std::size_t k) {
  const std::string x = "x" + std::to_string(k + 1);
  if (c.is_unit()) return x;
  if (c.model() == Model::MaxTimes) return to_string(c) + "*" + x;
  return sgn(c.value()) < 0 ? x + to_string(c) : x + "+" + to_string(c);
}

std::string side(const HalfspaceForm& f, const IndexSet& idx, const Scalar& offset) {
  std::vector<std::string> terms;
  for (auto k : idx) terms.push_back(term(*f.coef[k], k));
  if (!offset.is_zero()) terms.push_back(to_string(offset));
  if (terms.empty()) return "zero";
  if (terms.size() == 1) return terms.front();
  std::string s = "max(";
  for (std::size_t t = 0; t < terms.size(); ++t) s += (t ? ", " : "") + terms[t];
  return s + ")";
}

}  // namespace

bool HalfspaceForm::contains(const Vec& x) const {
  if (x.size() != dim) throw std::invalid_argument("halfspace: dimension mismatch");
  for (auto k : vanish) {
    if (!x[k].is_zero()) return false;
  }
  Scalar left = lhs_offset;
  for (auto j : lhs) left = oplus(left, otimes(*coef[j], x[j]));
  Scalar right = rhs_offset;
  for (auto i : rhs) right = oplus(right, otimes(*coef[i], x[i]));
  return left <= right;
}

std::string HalfspaceForm::to_string() const {
  std::string s = side(*this, lhs, lhs_offset) + " <= " + side(*this, rhs, rhs_offset);
  for (auto k : vanish) s += ", x" + std::to_string(k + 1) + " = zero";
  return s;
}

HalfspaceForm to_halfspace(const HemispaceSpec& spec) {
  require_closed(spec);
  const ThinStructure& ts = spec.thin();
  const ThinClass& first = ts.classes.front();
  HalfspaceForm f{spec.model(), spec.dim(), first.active, first.rows, first.zero,
                  std::vector<std::optional<Scalar>>(spec.dim()), Scalar::zero(spec.model()),
                  Scalar::zero(spec.model())};
  for (auto j : f.lhs) f.coef[j] = ts.gamma[j];
  for (auto i : f.rhs) f.coef[i] = ts.beta[i];
  if (!first.infinite.empty() || ts.classes.size() > 2) {
    throw std::logic_error("closed hemispace with an unexpected class structure");
  }
  return f;
}

HalfspaceForm to_halfspace(const AffineHemispace& h) {
  HalfspaceForm cone = to_halfspace(defining_cone(h));
  const std::size_t last = h.dim();
  if (cone.vanish.contains(last)) throw std::logic_error("affine halfspace forces the last coordinate to zero");
  HalfspaceForm f{cone.model, h.dim(), cone.lhs.minus({last}), cone.rhs.minus({last}), cone.vanish,
                  cone.coef, Scalar::zero(cone.model), Scalar::zero(cone.model)};
  f.coef.pop_back();
  if (cone.lhs.contains(last)) f.lhs_offset = *cone.coef[last];
  if (cone.rhs.contains(last)) f.rhs_offset = *cone.coef[last];
  return f;
}

}  // namespace tropical
