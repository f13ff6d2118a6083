#include "tropical/hemispace.hpp"

#include <sstream>

namespace tropical {

const BoundarySet& RawSpec::at(std::size_t i, std::size_t j) const {
  auto it = sigma.find({i, j});
  if (it == sigma.end()) {
    throw SpecError("no boundary set for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  return it->second;
}

void check_structure(const RawSpec& raw) {
  if (raw.dim == 0) throw SpecError("dimension must be positive");
  if (raw.rows.empty()) throw SpecError("I must be non-empty");
  if (raw.cols.empty()) throw SpecError("J must be non-empty");
  if (!raw.rows.disjoint(raw.cols)) {
    throw SpecError("I and J overlap in " + raw.rows.intersect(raw.cols).to_string());
  }
  if (!(raw.rows.unite(raw.cols) == IndexSet::range(raw.dim))) {
    throw SpecError("I and J must cover 1.." + std::to_string(raw.dim));
  }
  for (auto i : raw.rows) {
    for (auto j : raw.cols) {
      const BoundarySet& s = raw.at(i, j);
      if (s.model() != raw.model) throw SpecError("boundary set of the wrong model");
    }
  }
  if (raw.sigma.size() != raw.rows.size() * raw.cols.size()) {
    throw SpecError("boundary sets given outside I x J");
  }
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << "i1=" << i1 + 1 << " i2=" << i2 + 1 << " j1=" << j1 + 1 << " j2=" << j2 + 1
     << (side == Side::Direct ? " (direct)" : " (mirrored)");
  return os.str();
}

std::optional<Violation> rank_one_check(const RawSpec& raw) {
  const auto& I = raw.rows.items();
  const auto& J = raw.cols.items();
  for (std::size_t a = 0; a < I.size(); ++a) {
    for (std::size_t b = a + 1; b < I.size(); ++b) {
      for (std::size_t c = 0; c < J.size(); ++c) {
        for (std::size_t d = c + 1; d < J.size(); ++d) {
          const auto i1 = I[a], i2 = I[b], j1 = J[c], j2 = J[d];
          const auto& s11 = raw.at(i1, j1);
          const auto& s12 = raw.at(i1, j2);
          const auto& s21 = raw.at(i2, j1);
          const auto& s22 = raw.at(i2, j2);
          if (intersects(downset_product(s11, s22), upset_product(s12.upper(), s21.upper()))) {
            return Violation{i1, i2, j1, j2, Violation::Side::Direct};
          }
          if (intersects(downset_product(s12, s21), upset_product(s11.upper(), s22.upper()))) {
            return Violation{i1, i2, j1, j2, Violation::Side::Mirrored};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// c1 strictly before c2: fewer-infinite columns come later, then more zero
// columns come later.
bool precedes(const ThinClass& c1, const ThinClass& c2) {
  if (c2.infinite.proper_subset_of(c1.infinite)) return true;
  return c1.infinite == c2.infinite && c1.zero.proper_subset_of(c2.zero);
}

}  // namespace

ThinStructure thin_structure(const RawSpec& raw) {
  ThinStructure ts;
  ts.partition.resize(raw.dim);
  ts.class_of.assign(raw.dim, ThinStructure::npos);
  ts.beta.assign(raw.dim, std::nullopt);
  ts.gamma.assign(raw.dim, std::nullopt);

  std::map<std::pair<IndexSet, IndexSet>, IndexSet> groups;
  for (auto i : raw.rows) {
    RowPartition& p = ts.partition[i];
    for (auto j : raw.cols) {
      const BoundarySet& s = raw.at(i, j);
      if (s.is_only_zero()) p.zero.insert(j);
      else if (s.is_everything()) p.infinite.insert(j);
      else if (s.closed()) p.weak.insert(j);
      else p.strict.insert(j);
    }
    groups[{p.infinite, p.zero}].insert(i);
  }

  std::vector<ThinClass> pending;
  for (auto& [key, rows] : groups) {
    ThinClass c;
    c.rows = rows;
    c.infinite = key.first;
    c.zero = key.second;
    c.active = raw.cols.minus(c.infinite).minus(c.zero);
    pending.push_back(std::move(c));
  }
  while (!pending.empty()) {
    std::size_t pick = pending.size();
    for (std::size_t a = 0; a < pending.size() && pick == pending.size(); ++a) {
      bool least = true;
      for (std::size_t b = 0; b < pending.size() && least; ++b) {
        if (a != b && !precedes(pending[a], pending[b])) least = false;
      }
      if (least) pick = a;
    }
    if (pick == pending.size()) throw std::logic_error("row classes are not totally ordered");
    ts.classes.push_back(std::move(pending[pick]));
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
  }

  const Scalar one = Scalar::unit(raw.model);
  for (std::size_t r = 0; r < ts.classes.size(); ++r) {
    ThinClass& c = ts.classes[r];
    for (auto i : c.rows) ts.class_of[i] = r;
    const std::size_t anchor = c.rows.front();
    ts.beta[anchor] = one;
    for (auto j : c.active) ts.gamma[j] = residual(one, raw.at(anchor, j).threshold());
    for (auto i : c.rows) {
      if (i == anchor) continue;
      ts.beta[i] = c.active.empty() ? one : otimes(raw.at(i, c.active.front()).threshold(), *ts.gamma[c.active.front()]);
    }
    for (auto i : c.rows) {
      for (auto j : c.active) {
        if (!(raw.at(i, j).threshold() == residual(*ts.beta[i], *ts.gamma[j]))) {
          throw std::logic_error("finite thresholds do not factor through row and column gauges");
        }
      }
    }

    c.row_order = c.rows.items();
    std::stable_sort(c.row_order.begin(), c.row_order.end(), [&](std::size_t a, std::size_t b) {
      return ts.partition[a].weak.size() > ts.partition[b].weak.size();
    });
    auto weak_rows = [&](std::size_t j) {
      std::size_t k = 0;
      for (auto i : c.rows) k += ts.partition[i].weak.contains(j) ? 1 : 0;
      return k;
    };
    c.col_order = c.active.items();
    std::stable_sort(c.col_order.begin(), c.col_order.end(),
                     [&](std::size_t a, std::size_t b) { return weak_rows(a) > weak_rows(b); });
  }
  return ts;
}

HemispaceSpec HemispaceSpec::validate(RawSpec raw) {
  check_structure(raw);
  if (auto v = rank_one_check(raw)) throw RankOneViolation(*v);
  auto thin = std::make_shared<const ThinStructure>(thin_structure(raw));
  return HemispaceSpec(std::move(raw), std::move(thin));
}

namespace {

// Decides x against the sum of the class-h row cones. x must vanish on the
// rows of earlier classes.
MembershipTrace class_test(const HemispaceSpec& spec, std::size_t h, const Vec& x) {
  const ThinStructure& ts = spec.thin();
  const ThinClass& c = ts.classes[h];
  MembershipTrace t;
  t.cls = h;
  t.reduced = x;
  for (auto j : c.zero) {
    if (!x[j].is_zero()) {
      t.decision = Decision::NonzeroOffClass;
      t.coordinate = j;
      return t;
    }
  }
  if (c.active.empty()) {
    t.member = true;
    t.decision = Decision::CoordinatePlane;
    return t;
  }
  Scalar top_row = Scalar::zero(spec.model());
  for (auto i : c.rows) top_row = oplus(top_row, otimes(*ts.beta[i], x[i]));
  for (auto j : c.active) {
    Scalar term = otimes(*ts.gamma[j], x[j]);
    if (top_row < term) {
      t.decision = Decision::InequalityFails;
      t.coordinate = j;
      return t;
    }
  }
  for (auto j : c.active) {
    Scalar term = otimes(*ts.gamma[j], x[j]);
    if (!(term == top_row)) continue;
    bool partner = false;
    for (auto k : c.rows) {
      if (ts.partition[k].weak.contains(j) && otimes(*ts.beta[k], x[k]) == top_row) {
        partner = true;
        break;
      }
    }
    if (!partner) {
      t.decision = Decision::EqualityUnattained;
      t.coordinate = j;
      return t;
    }
  }
  t.member = true;
  t.decision = Decision::Accepted;
  return t;
}

void require_vec(const HemispaceSpec& spec, const Vec& x) {
  if (x.model() != spec.model()) throw ModelMismatch("vector and hemispace use different models");
  if (x.size() != spec.dim()) {
    throw std::invalid_argument("vector has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(spec.dim()));
  }
}

void require_class_plane(const HemispaceSpec& spec, std::size_t cls, const Vec& x) {
  require_vec(spec, x);
  const ThinClass& c = spec.thin().classes.at(cls);
  const IndexSet plane = c.rows.unite(c.active);
  for (auto k : support(x)) {
    if (!plane.contains(k)) {
      throw std::invalid_argument("vector " + to_string(x) + " leaves the plane of class " +
                                  std::to_string(cls + 1));
    }
  }
}

}  // namespace

MembershipTrace explain_member(const HemispaceSpec& spec, const Vec& x) {
  require_vec(spec, x);
  const ThinStructure& ts = spec.thin();
  MembershipTrace t;
  if (x.is_zero()) {
    t.member = true;
    t.decision = Decision::NullVector;
    return t;
  }
  std::size_t h = ThinStructure::npos;
  for (auto i : spec.rows()) {
    if (!x[i].is_zero()) h = std::min(h, ts.class_of[i]);
  }
  if (h == ThinStructure::npos) {
    t.decision = Decision::NoRowSupport;
    return t;
  }
  Vec reduced = x;
  const Scalar zero = Scalar::zero(spec.model());
  for (std::size_t r = h + 1; r < ts.classes.size(); ++r) {
    for (auto i : ts.classes[r].rows) reduced.set(i, zero);
  }
  for (auto j : ts.classes[h].infinite) reduced.set(j, zero);
  return class_test(spec, h, reduced);
}

bool conical_member(const HemispaceSpec& spec, const Vec& x) { return explain_member(spec, x).member; }

std::string MembershipTrace::explain(const HemispaceSpec& spec) const {
  std::ostringstream os;
  os << (member ? "IN" : "OUT") << ": ";
  auto col = [&] { return coordinate ? std::to_string(*coordinate + 1) : std::string("?"); };
  if (cls) {
    os << "deciding class " << *cls + 1 << " with rows " << spec.thin().classes[*cls].rows.to_string()
       << ", reduced vector " << to_string(*reduced) << "; ";
  }
  switch (decision) {
    case Decision::NullVector: os << "the zero vector lies in every cone"; break;
    case Decision::NoRowSupport: os << "all coordinates in I vanish"; break;
    case Decision::CoordinatePlane: os << "class has no finite columns and the vector stays in its plane"; break;
    case Decision::NonzeroOffClass: os << "coordinate " << col() << " has threshold zero but is nonzero"; break;
    case Decision::InequalityFails: os << "column " << col() << " exceeds the weighted row maximum"; break;
    case Decision::EqualityUnattained:
      os << "column " << col() << " ties the row maximum with no closed boundary at a maximal row";
      break;
    case Decision::Accepted: os << "weighted column maximum is dominated by the row maximum"; break;
  }
  return os.str();
}

HemispaceSpec complement_spec(const HemispaceSpec& spec) {
  RawSpec out;
  out.model = spec.model();
  out.dim = spec.dim();
  out.rows = spec.cols();
  out.cols = spec.rows();
  for (const auto& [key, s] : spec.raw().sigma) {
    out.sigma.emplace(std::make_pair(key.second, key.first),
                      BoundarySet::make(inverse(s.threshold()), !s.closed()));
  }
  return HemispaceSpec::validate(std::move(out));
}

bool class_member(const HemispaceSpec& spec, std::size_t cls, const Vec& x) {
  require_class_plane(spec, cls, x);
  if (x.is_zero()) return true;
  bool row_support = false;
  for (auto i : spec.thin().classes[cls].rows) row_support = row_support || !x[i].is_zero();
  if (!row_support) return false;
  return class_test(spec, cls, x).member;
}

bool reflection_member(const HemispaceSpec& spec, std::size_t cls, const Vec& x) {
  require_class_plane(spec, cls, x);
  if (x.is_zero()) return true;
  const ThinStructure& ts = spec.thin();
  const ThinClass& c = ts.classes[cls];
  Scalar top_col = Scalar::zero(spec.model());
  for (auto j : c.active) top_col = oplus(top_col, otimes(*ts.gamma[j], x[j]));
  for (auto i : c.rows) {
    Scalar term = otimes(*ts.beta[i], x[i]);
    if (top_col < term) return false;
    if (term.is_zero() || !(term == top_col)) continue;
    bool partner = false;
    for (auto k : ts.partition[i].strict) {
      if (otimes(*ts.gamma[k], x[k]) == term) {
        partner = true;
        break;
      }
    }
    if (!partner) return false;
  }
  return true;
}

AffineHemispace AffineHemispace::make(HemispaceSpec base, bool contains_zero) {
  if (base.dim() < 2) throw SpecError("affine hemispaces need ambient dimension at least 1");
  const std::size_t last = base.dim() - 1;
  if (!base.rows().contains(last)) {
    throw SpecError("the homogenizing coordinate " + std::to_string(last + 1) + " must belong to I");
  }
  bool proper = false;
  for (auto j : base.cols()) proper = proper || !base.at(last, j).is_everything();
  if (!proper) {
    throw SpecError("every threshold in row " + std::to_string(last + 1) +
                    " is inf, so one side of the pair is empty");
  }
  return AffineHemispace(std::move(base), contains_zero);
}

bool affine_member(const AffineHemispace& h, const Vec& x) {
  if (x.size() != h.dim()) {
    throw std::invalid_argument("vector has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(h.dim()));
  }
  const bool in_base = conical_member(h.base(), append(x, Scalar::unit(h.model())));
  return h.contains_zero() ? in_base : !in_base;
}

AffineHemispace affine_complement(const AffineHemispace& h) {
  return AffineHemispace::make(h.base(), !h.contains_zero());
}

HemispaceSpec defining_cone(const AffineHemispace& h) {
  return h.contains_zero() ? h.base() : complement_spec(h.base());
}

bool is_closed(const HemispaceSpec& spec) {
  for (const auto& [key, s] : spec.raw().sigma) {
    if (!s.closed() || s.is_everything()) return false;
  }
  return true;
}

bool is_closed(const AffineHemispace& h) { return is_closed(defining_cone(h)); }

std::vector<AlphaEntry> alpha_matrix(const HemispaceSpec& v1, const HemispaceSpec& v2) {
  if (!(complement_spec(v1) == v2)) {
    throw std::invalid_argument("alpha_matrix: second hemispace is not the complement of the first");
  }
  std::vector<AlphaEntry> out;
  for (const auto& [key, s] : v1.raw().sigma) {
    BoundaryOwner owner = BoundaryOwner::Second;
    if (s.is_only_zero()) owner = BoundaryOwner::Zero;
    else if (s.is_everything()) owner = BoundaryOwner::Infinite;
    else if (s.closed()) owner = BoundaryOwner::First;
    out.push_back({key.first, key.second, s.threshold(), owner});
  }
  return out;
}

}  // namespace tropical
