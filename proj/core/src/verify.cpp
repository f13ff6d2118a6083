#include "tropical/verify.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "tropical/generators.hpp"

namespace tropical {

GridSpec::GridSpec(Model model, std::size_t n, std::vector<Scalar> values)
    : model_(model), n_(n), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.model() != model_) throw ModelMismatch("grid value of the wrong model");
    if (v.is_top()) throw std::invalid_argument("grid values cannot be inf");
  }
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (values_.empty()) throw std::invalid_argument("grid needs at least one value");
}

std::size_t GridSpec::size() const {
  std::size_t s = 1;
  for (std::size_t k = 0; k < n_; ++k) s *= values_.size();
  return s;
}

Vec GridSpec::point(std::size_t index) const {
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < n_; ++k) {
    c.push_back(values_[index % values_.size()]);
    index /= values_.size();
  }
  return Vec(model_, std::move(c));
}

std::vector<Vec> GridSpec::points() const {
  std::vector<Vec> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(point(k));
  return out;
}

std::size_t GridSpec::join_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0, place = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    out += std::max(a % values_.size(), b % values_.size()) * place;
    a /= values_.size();
    b /= values_.size();
    place *= values_.size();
  }
  return out;
}

std::vector<Scalar> with_thresholds(std::vector<Scalar> values, const RawSpec& raw) {
  for (const auto& [key, s] : raw.sigma) {
    if (s.threshold().is_finite()) values.push_back(s.threshold());
  }
  return values;
}

void Verdict::fail(std::vector<Vec> example, std::string why) {
  if (!passed) return;
  passed = false;
  counterexample = std::move(example);
  detail = std::move(why);
}

std::string Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["property"] = property;
  j["passed"] = passed;
  j["cases"] = cases;
  if (!detail.empty()) j["detail"] = detail;
  if (!counterexample.empty()) {
    j["counterexample"] = nlohmann::ordered_json::array();
    for (const auto& v : counterexample) j["counterexample"].push_back(to_string(v));
  }
  return j.dump();
}

namespace {

Verdict partition_impl(const std::string& name, const MemberOracle& side, const MemberOracle& other,
                       const GridSpec& grid) {
  Verdict v{name};
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    Vec x = grid.point(k);
    const bool a = side(x), b = other(x);
    ++v.cases;
    if (x.is_zero() && !(a && b)) v.fail({x}, "zero must lie on both sides");
    if (!x.is_zero() && a == b) v.fail({x}, a ? "point lies on both sides" : "point lies on neither side");
  }
  return v;
}

}  // namespace

Verdict partition_check(const HemispaceSpec& spec, const GridSpec& grid) {
  const HemispaceSpec comp = complement_spec(spec);
  return partition_impl(
      "partition", [&](const Vec& x) { return conical_member(spec, x); },
      [&](const Vec& x) { return conical_member(comp, x); }, grid);
}

Verdict partition_check(const AffineHemispace& h, const GridSpec& grid) {
  const AffineHemispace comp = affine_complement(h);
  Verdict v{"partition"};
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    Vec x = grid.point(k);
    ++v.cases;
    if (affine_member(h, x) == affine_member(comp, x)) v.fail({x}, "point is not on exactly one side");
    if (affine_member(h, x) != !conical_member(defining_cone(comp), append(x, Scalar::unit(x.model())))) {
      v.fail({x}, "structural complement disagrees with negated membership");
    }
  }
  return v;
}

Verdict closure_check(const std::string& name, const MemberOracle& member, const GridSpec& grid,
                      const std::vector<Scalar>& scalars) {
  Verdict v{name};
  std::vector<char> in(grid.size());
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    in[k] = member(grid.point(k));
    if (in[k]) members.push_back(k);
  }
  for (std::size_t a = 0; a < members.size() && v.passed; ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      ++v.cases;
      if (!in[grid.join_index(members[a], members[b])]) {
        Vec x = grid.point(members[a]), y = grid.point(members[b]);
        v.fail({x, y, oplus(x, y)}, "join of two members is not a member");
        break;
      }
    }
  }
  for (std::size_t a = 0; a < members.size() && v.passed; ++a) {
    const Vec x = grid.point(members[a]);
    for (const auto& s : scalars) {
      ++v.cases;
      if (!member(scale(s, x))) {
        v.fail({x, scale(s, x)}, "multiple by " + to_string(s) + " is not a member");
        break;
      }
    }
  }
  return v;
}

Verdict segment_convexity_check(const std::string& name, const MemberOracle& member, const GridSpec& grid,
                                std::size_t pairs, std::size_t k, std::uint64_t seed) {
  Verdict v{name};
  std::vector<Vec> members;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Vec x = grid.point(i);
    if (member(x)) members.push_back(std::move(x));
  }
  if (members.empty()) return v;
  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (std::size_t p = 0; p < pairs && v.passed; ++p) {
    const Vec& x = members[pick(rng)];
    const Vec& y = members[pick(rng)];
    for (const auto& z : segment_points(x, y, k)) {
      ++v.cases;
      if (!member(z)) {
        v.fail({x, y, z}, "segment point leaves the set");
        break;
      }
    }
  }
  return v;
}

ViolationWitness violation_witness(const RawSpec& raw) {
  auto found = rank_one_check(raw);
  if (!found) throw std::invalid_argument("violation_witness: the rank-one condition holds");
  const Violation viol = *found;
  std::size_t i1 = viol.i1, i2 = viol.i2, j1 = viol.j1, j2 = viol.j2;
  if (viol.side == Violation::Side::Mirrored) std::swap(j1, j2);

  const BoundarySet &s11 = raw.at(i1, j1), &s12 = raw.at(i1, j2), &s21 = raw.at(i2, j1), &s22 = raw.at(i2, j2);
  const Scalar v = common_finite(downset_product(s11, s22), upset_product(s12.upper(), s21.upper()));
  auto [g11, g22] = factor(v, s11, s22);
  auto [b12, b21] = factor(v, s12.upper(), s21.upper());

  const Model m = raw.model;
  const std::size_t n = raw.dim;
  auto e = [&](std::size_t k) { return Vec::unit_vector(m, k, n); };
  ViolationWitness w{viol, Vec(m, n), {}, {}};
  w.upper_gens = {oplus(e(i1), scale(b12, e(j2))), oplus(e(i2), scale(b21, e(j1)))};
  w.lower_gens = {oplus(e(i1), scale(g11, e(j1))), oplus(e(i2), scale(g22, e(j2)))};
  w.z = oplus(w.upper_gens[0], scale(residual(g11, b21), w.upper_gens[1]));
  if (w.z.is_zero() || !cone_member_fg(w.z, w.upper_gens).member || !cone_member_fg(w.z, w.lower_gens).member) {
    throw std::logic_error("violation witness failed certification");
  }
  return w;
}

Verdict thin_laws_check(const HemispaceSpec& spec) {
  Verdict v{"thin-laws"};
  const ThinStructure& ts = spec.thin();
  const RawSpec& raw = spec.raw();
  auto fail = [&](const std::string& why) { v.fail({}, why); };
  auto chain = [](const IndexSet& a, const IndexSet& b) { return a.subset_of(b) || b.subset_of(a); };

  for (auto i : spec.rows()) {
    const RowPartition& p = ts.partition[i];
    ++v.cases;
    const std::size_t total = p.strict.size() + p.weak.size() + p.zero.size() + p.infinite.size();
    if (total != spec.cols().size() ||
        !(p.strict.unite(p.weak).unite(p.zero).unite(p.infinite) == spec.cols())) {
      fail("row " + std::to_string(i + 1) + " does not partition J");
    }
  }
  for (auto i1 : spec.rows()) {
    for (auto i2 : spec.rows()) {
      const RowPartition &a = ts.partition[i1], &b = ts.partition[i2];
      ++v.cases;
      if (!chain(a.infinite, b.infinite) || !chain(a.zero, b.zero)) {
        fail("inf or zero column sets of rows " + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) +
             " are not nested");
      }
      const IndexSet fa = a.strict.unite(a.weak), fb = b.strict.unite(b.weak);
      if (fa.disjoint(fb)) continue;
      if (!(fa == fb) || !(a.infinite == b.infinite) || !(a.zero == b.zero)) {
        fail("overlapping finite columns without equal column types at rows " + std::to_string(i1 + 1) + "," +
             std::to_string(i2 + 1));
      }
      if (!chain(a.strict, b.strict)) fail("open column sets are not nested");
      std::optional<Scalar> ratio;
      for (auto j : fa) {
        Scalar r = residual(raw.at(i1, j).threshold(), raw.at(i2, j).threshold());
        if (ratio && !(*ratio == r)) fail("rows with shared finite columns are not proportional");
        ratio = r;
      }
    }
  }
  for (std::size_t r = 0; r < ts.classes.size(); ++r) {
    const ThinClass& c = ts.classes[r];
    ++v.cases;
    if (!(c.active.unite(c.infinite).unite(c.zero) == spec.cols())) fail("class columns do not cover J");
    for (std::size_t q = 0; q < r; ++q) {
      if (!c.active.disjoint(ts.classes[q].active)) fail("active columns of two classes overlap");
    }
    if (r > 0 && !c.active.unite(c.infinite).subset_of(ts.classes[r - 1].infinite)) {
      fail("class " + std::to_string(r + 1) + " columns are not inside the previous class's inf columns");
    }
    auto pos = [](const std::vector<std::size_t>& order, std::size_t k) {
      return std::find(order.begin(), order.end(), k) - order.begin();
    };
    for (auto i1 : c.rows) {
      for (auto ja : ts.partition[i1].weak) {
        for (auto jb : ts.partition[i1].strict) {
          if (!(pos(c.col_order, ja) < pos(c.col_order, jb))) fail("closed column ordered after an open one");
        }
      }
      for (auto j : ts.partition[i1].strict) {
        for (auto i2 : c.rows) {
          if (ts.partition[i2].weak.contains(j) && !(pos(c.row_order, i2) < pos(c.row_order, i1))) {
            fail("row order does not follow the nesting of closed columns");
          }
        }
      }
    }
  }
  return v;
}

Verdict halfspace_check(const HemispaceSpec& spec, const GridSpec& grid) {
  Verdict v{"halfspace"};
  const HalfspaceForm f = to_halfspace(spec);
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    Vec x = grid.point(k);
    ++v.cases;
    if (f.contains(x) != conical_member(spec, x)) v.fail({x}, "halfspace " + f.to_string() + " disagrees");
  }
  return v;
}

Verdict halfspace_check(const AffineHemispace& h, const GridSpec& grid) {
  Verdict v{"halfspace"};
  const HalfspaceForm f = to_halfspace(h);
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    Vec x = grid.point(k);
    ++v.cases;
    if (f.contains(x) != affine_member(h, x)) v.fail({x}, "halfspace " + f.to_string() + " disagrees");
  }
  return v;
}

namespace {

// Membership in the sum over active columns j of the per-column reflected
// cones: each nonzero row coordinate must be absorbed by some column.
bool reflection_sum_member(const HemispaceSpec& spec, std::size_t cls, const Vec& x) {
  const ThinStructure& ts = spec.thin();
  const ThinClass& c = ts.classes[cls];
  for (auto i : c.rows) {
    if (x[i].is_zero()) continue;
    const Scalar b = otimes(*ts.beta[i], x[i]);
    bool absorbed = false;
    for (auto j : c.active) {
      const Scalar g = otimes(*ts.gamma[j], x[j]);
      if ((ts.partition[i].strict.contains(j) && b <= g) || (ts.partition[i].weak.contains(j) && b < g)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) return false;
  }
  return true;
}

}  // namespace

Verdict reflection_check(const HemispaceSpec& spec, const GridSpec& grid) {
  Verdict v{"reflection"};
  const ThinStructure& ts = spec.thin();
  const Scalar zero = Scalar::zero(spec.model());
  for (std::size_t r = 0; r < ts.classes.size() && v.passed; ++r) {
    const IndexSet plane = ts.classes[r].rows.unite(ts.classes[r].active);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
      Vec x = grid.point(k);
      for (std::size_t q = 0; q < x.size(); ++q) {
        if (!plane.contains(q)) x.set(q, zero);
      }
      if (!seen.insert(to_string(x)).second) continue;
      ++v.cases;
      const bool in_class = class_member(spec, r, x);
      const bool in_refl = reflection_member(spec, r, x);
      if (x.is_zero() ? !(in_class && in_refl) : in_class == in_refl) {
        v.fail({x}, "class " + std::to_string(r + 1) + " cone and its reflection do not split the plane");
      }
      if (in_refl != reflection_sum_member(spec, r, x)) {
        v.fail({x}, "reflection differs from the sum of per-column reflections");
      }
    }
  }
  return v;
}

Verdict generators_check(const HemispaceSpec& spec) {
  Verdict v{"generators"};
  const HemispaceSpec comp = complement_spec(spec);
  const Model m = spec.model();
  const std::size_t n = spec.dim();
  const Scalar two = Scalar::finite(m, 2);
  for (const auto& [key, s] : spec.raw().sigma) {
    const auto [i, j] = key;
    std::vector<Scalar> lambdas{Scalar::zero(m), Scalar::top(m), Scalar::unit(m)};
    if (s.threshold().is_finite()) {
      lambdas.push_back(s.threshold());
      lambdas.push_back(otimes(s.threshold(), two));
      lambdas.push_back(residual(s.threshold(), two));
    }
    for (const auto& lambda : lambdas) {
      const Vec g = lambda.is_top() ? Vec::unit_vector(m, j, n)
                                    : oplus(Vec::unit_vector(m, i, n), scale(lambda, Vec::unit_vector(m, j, n)));
      ++v.cases;
      const bool expect_first = s.contains(lambda);
      if (conical_member(spec, g) != expect_first || conical_member(comp, g) == expect_first) {
        v.fail({g}, "generator with multiplier " + to_string(lambda) + " for (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") is on the wrong side");
      }
    }
  }
  return v;
}

namespace {

std::vector<Vec> homogenized_gens(const Vec& y, std::size_t type_index) {
  const Vec yh = append(y, Scalar::unit(y.model()));
  return quasisector_gens(SectorId{yh, SectorType::coordinate(type_index)});
}

std::string type_list(const std::set<std::size_t>& s) {
  std::string out;
  for (auto k : s) out += (out.empty() ? "" : ",") + std::to_string(k + 1);
  return "{" + out + "}";
}

}  // namespace

Verdict sector_union_check(const HemispaceSpec& spec, const GridSpec& grid) {
  Verdict v{"sector-union"};
  const HemispaceSpec comp = complement_spec(spec);
  std::set<std::size_t> first, second;
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    const Vec y = grid.point(k);
    if (y.is_zero()) continue;
    ++v.cases;
    const bool in_first = conical_member(spec, y);
    const HemispaceSpec& side = in_first ? spec : comp;
    bool found = false;
    for (auto i : support(y)) {
      bool inside = true;
      for (const auto& g : quasisector_gens(SectorId{y, SectorType::coordinate(i)})) {
        inside = inside && conical_member(side, g);
      }
      if (inside) {
        (in_first ? first : second).insert(i);
        found = true;
      }
    }
    if (!found) v.fail({y}, "no quasisector at this point stays on its side");
  }
  for (auto i : first) {
    if (second.count(i)) v.fail({}, "type " + std::to_string(i + 1) + " found on both sides");
  }
  if (v.passed) v.detail = "types " + type_list(first) + " | " + type_list(second);
  return v;
}

Verdict sector_union_check(const AffineHemispace& h, const GridSpec& grid) {
  Verdict v{"sector-union"};
  const HemispaceSpec w1 = defining_cone(h);
  const HemispaceSpec w2 = defining_cone(affine_complement(h));
  std::set<std::size_t> first, second;
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    const Vec y = grid.point(k);
    ++v.cases;
    const bool in_first = affine_member(h, y);
    const HemispaceSpec& side = in_first ? w1 : w2;
    bool found = false;
    for (auto i : support(append(y, Scalar::unit(y.model())))) {
      bool inside = true;
      for (const auto& g : homogenized_gens(y, i)) inside = inside && conical_member(side, g);
      if (inside) {
        (in_first ? first : second).insert(i);
        found = true;
      }
    }
    if (!found) v.fail({y}, "no sector at this point stays on its side");
  }
  for (auto i : first) {
    if (second.count(i)) v.fail({}, "type " + std::to_string(i + 1) + " found on both sides");
  }
  if (v.passed) v.detail = "types " + type_list(first) + " | " + type_list(second);
  return v;
}

Verdict multiorder_invariant_check(const PRDecomposition& d, const GridSpec& grid) {
  Verdict v{"multiorder"};
  std::vector<Vec> members;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    Vec x = grid.point(k);
    if (pr_member(x, d)) members.push_back(std::move(x));
  }
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    const Vec y = grid.point(k);
    ++v.cases;
    const bool in = pr_member(y, d);
    const auto sep = separating_type(y, d);
    if (in == sep.has_value()) {
      v.fail({y}, in ? "member has a separating sector" : "non-member has no separating sector");
      break;
    }
    // A member in every sector at y rebuilds (y, 1) from the homogenized
    // members, so y must be a member.
    const Vec yh = append(y, Scalar::unit(y.model()));
    std::vector<std::optional<Vec>> witnesses(yh.size());
    bool all_found = true;
    for (auto i : support(yh)) {
      const SectorType t = i == y.size() ? SectorType::homogenizing() : SectorType::coordinate(i);
      for (const auto& x : members) {
        if (sector_contains(SectorId{y, t}, x)) {
          witnesses[i] = append(x, Scalar::unit(y.model()));
          break;
        }
      }
      all_found = all_found && witnesses[i].has_value();
    }
    if (all_found && (!(assemble_from_witnesses(yh, witnesses) == yh) || !in)) {
      v.fail({y}, "members in every sector did not rebuild the point");
      break;
    }
    if (!sep) continue;
    const SectorId id{y, *sep};
    for (const auto& x : members) {
      if (sector_contains(id, x)) {
        v.fail({y, x}, "a member lies in the separating sector of type " + sep->to_string(y.size()));
        break;
      }
    }
  }
  return v;
}

Verdict sector_forms_check(const GridSpec& grid) {
  Verdict v{"sector-forms"};
  const std::vector<Vec> pts = grid.points();
  for (const auto& y : pts) {
    if (!v.passed) break;
    std::vector<SectorType> types{SectorType::homogenizing()};
    for (auto i : support(y)) types.push_back(SectorType::coordinate(i));
    for (const auto& t : types) {
      const SectorId id{y, t};
      const PRDecomposition d = sector_pr(id);
      std::optional<std::vector<Vec>> gens;
      if (!t.is_homogenizing()) gens = quasisector_gens(id);
      for (const auto& x : pts) {
        ++v.cases;
        if (sector_contains(id, x) != pr_member(x, d)) {
          v.fail({y, x}, "sector type " + t.to_string(y.size()) + " forms disagree");
          break;
        }
        if (gens && quasisector_contains(id, x) != cone_member_fg(x, *gens).member) {
          v.fail({y, x}, "quasisector type " + t.to_string(y.size()) + " forms disagree");
          break;
        }
      }
    }
  }
  return v;
}

Verdict homogenization_check(const PRDecomposition& d, const GridSpec& grid) {
  Verdict v{"homogenization"};
  const SectionResult back = section_unity(homogenize(d));
  if (back.section_empty != d.points.empty()) v.fail({}, "section emptiness flag is wrong");
  for (std::size_t k = 0; k < grid.size() && v.passed; ++k) {
    const Vec x = grid.point(k);
    ++v.cases;
    const bool direct = d.points.empty() ? cone_member_fg(x, d.rays).member
                                         : cone_member_fg(append(x, Scalar::unit(x.model())), homogenize(d)).member;
    if (pr_member(x, back.decomposition) != direct || pr_member(x, d) != direct) {
      v.fail({x}, "membership changes across homogenization");
    }
  }
  return v;
}

Scalar bisect_boundary(const MemberOracle& member, std::size_t i, std::size_t j, std::size_t n, Scalar lo,
                       Scalar hi, int iterations) {
  if (!lo.is_finite() || !hi.is_finite() || !(lo < hi)) {
    throw std::invalid_argument("bisect_boundary needs finite lo < hi");
  }
  const Model m = lo.model();
  auto probe = [&](const Scalar& l) {
    return member(oplus(Vec::unit_vector(m, i, n), scale(l, Vec::unit_vector(m, j, n))));
  };
  const bool at_lo = probe(lo);
  if (probe(hi) == at_lo) throw std::invalid_argument("bisect_boundary: no switch inside the window");
  for (int it = 0; it < iterations; ++it) {
    Scalar mid = Scalar::finite(m, (lo.value() + hi.value()) / 2);
    (probe(mid) == at_lo ? lo : hi) = mid;
  }
  return Scalar::finite(m, (lo.value() + hi.value()) / 2);
}

}  // namespace tropical
