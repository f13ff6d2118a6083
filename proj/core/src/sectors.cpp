#include "tropical/sectors.hpp"

namespace tropical {

std::size_t SectorType::index() const {
  if (homogenizing_) throw std::logic_error("homogenizing sector type has no coordinate");
  return index_;
}

std::string SectorType::to_string(std::size_t n) const {
  return std::to_string(homogenizing_ ? n + 1 : index_ + 1);
}

namespace {

void check_type(const SectorId& id, bool allow_homogenizing) {
  if (id.type.is_homogenizing()) {
    if (!allow_homogenizing) throw std::invalid_argument("quasisectors have no homogenizing type");
    return;
  }
  const std::size_t i = id.type.index();
  if (i >= id.base.size() || id.base[i].is_zero()) {
    throw std::invalid_argument("sector type " + std::to_string(i + 1) +
                                " is not in the support of " + to_string(id.base));
  }
}

// max_{j in supp y} x_j / y_j, or nullopt if x is nonzero off supp(y).
std::optional<Scalar> max_ratio(const Vec& y, const Vec& x) {
  if (x.size() != y.size()) throw std::invalid_argument("sector test: dimension mismatch");
  Scalar m = Scalar::zero(y.model());
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (y[j].is_zero()) {
      if (!x[j].is_zero()) return std::nullopt;
    } else {
      m = oplus(m, residual(x[j], y[j]));
    }
  }
  return m;
}

}  // namespace

bool quasisector_contains(const SectorId& id, const Vec& x) {
  check_type(id, false);
  auto m = max_ratio(id.base, x);
  if (!m) return false;
  const std::size_t i = id.type.index();
  return *m <= residual(x[i], id.base[i]);
}

bool sector_contains(const SectorId& id, const Vec& x) {
  check_type(id, true);
  auto m = max_ratio(id.base, x);
  if (!m) return false;
  const Scalar one = Scalar::unit(id.base.model());
  if (id.type.is_homogenizing()) return *m <= one;
  const std::size_t i = id.type.index();
  return oplus(*m, one) <= residual(x[i], id.base[i]);
}

bool semispace_contains(const SectorId& id, const Vec& x) { return !sector_contains(id, x); }

std::vector<Vec> quasisector_gens(const SectorId& id) {
  check_type(id, false);
  const Vec& y = id.base;
  const std::size_t i = id.type.index();
  const Vec ei = Vec::unit_vector(y.model(), i, y.size());
  std::vector<Vec> out;
  for (auto j : support(y)) {
    out.push_back(oplus(ei, scale(residual(y[j], y[i]), Vec::unit_vector(y.model(), j, y.size()))));
  }
  return out;
}

PRDecomposition sector_pr(const SectorId& id) {
  check_type(id, true);
  const Vec& y = id.base;
  PRDecomposition d{y.model(), y.size(), {}, {}};
  if (id.type.is_homogenizing()) {
    d.points.push_back(Vec(y.model(), y.size()));
    for (auto j : support(y)) d.points.push_back(scale(y[j], Vec::unit_vector(y.model(), j, y.size())));
  } else {
    const std::size_t i = id.type.index();
    d.points.push_back(scale(y[i], Vec::unit_vector(y.model(), i, y.size())));
    d.rays = quasisector_gens(id);
  }
  return d;
}

namespace {

Vec conical_common_point(const Vec& x, const Vec& y, std::size_t i) {
  if (x.size() != y.size()) throw std::invalid_argument("common_point: dimension mismatch");
  if (i >= x.size() || x[i].is_zero() || y[i].is_zero()) {
    throw std::invalid_argument("common_point: type " + std::to_string(i + 1) +
                                " is not in both supports");
  }
  std::vector<Scalar> z;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Scalar a = residual(x[j], x[i]);
    Scalar b = residual(y[j], y[i]);
    z.push_back(a < b ? a : b);
  }
  return Vec(x.model(), std::move(z));
}

}  // namespace

Vec common_point(const Vec& x, const Vec& y, SectorType type, Geometry geometry) {
  if (geometry == Geometry::Conical) {
    if (type.is_homogenizing()) throw std::invalid_argument("conical common_point needs a coordinate type");
    return conical_common_point(x, y, type.index());
  }
  const Scalar one = Scalar::unit(x.model());
  const std::size_t i = type.is_homogenizing() ? x.size() : type.index();
  Vec z = conical_common_point(append(x, one), append(y, one), i);
  return drop_last(scale(inverse(z[z.size() - 1]), z));
}

Vec assemble_from_witnesses(const Vec& y, const std::vector<std::optional<Vec>>& witnesses) {
  if (y.is_zero()) throw std::invalid_argument("assemble_from_witnesses needs a nonzero vector");
  if (witnesses.size() != y.size()) throw std::invalid_argument("one witness slot per coordinate expected");
  Vec out(y.model(), y.size());
  for (auto i : support(y)) {
    const auto& w = witnesses[i];
    if (!w) throw std::invalid_argument("missing witness for type " + std::to_string(i + 1));
    if (!quasisector_contains(SectorId{y, SectorType::coordinate(i)}, *w) || w->is_zero()) {
      throw std::invalid_argument("witness for type " + std::to_string(i + 1) +
                                  " is not a nonzero member of its quasisector");
    }
    out = oplus(out, scale(residual(y[i], (*w)[i]), *w));
  }
  if (!(out == y)) throw std::logic_error("assembled vector differs from the target");
  return out;
}

std::optional<SectorType> separating_type(const Vec& y, const PRDecomposition& d) {
  PRDecomposition norm = d;
  if (norm.points.empty()) norm.points.push_back(Vec(d.model, d.dim));
  const std::vector<Vec> gens = homogenize(norm);
  const Vec yh = append(y, Scalar::unit(y.model()));
  for (auto i : support(yh)) {
    const SectorId id{yh, SectorType::coordinate(i)};
    bool separated = true;
    for (const auto& u : gens) {
      if (!u.is_zero() && quasisector_contains(id, u)) {
        separated = false;
        break;
      }
    }
    if (separated) return i == y.size() ? SectorType::homogenizing() : SectorType::coordinate(i);
  }
  return std::nullopt;
}

}  // namespace tropical
