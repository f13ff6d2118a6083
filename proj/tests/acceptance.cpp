// One line per acceptance criterion; exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "tropical/generators.hpp"
#include "tropical/halfspace.hpp"
#include "tropical/sectors.hpp"
#include "tropical/spec_io.hpp"
#include "tropical/verify.hpp"
#include "tropical_cli/render.hpp"

using namespace tropical;
using tropical::testing::generated_complement_member;
using tropical::testing::generated_cone_member;

namespace {

const Model M = Model::MaxTimes;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

Scalar q(long n, unsigned long d = 1) { return Scalar::finite(M, n, d); }

std::vector<Scalar> five_scalars(Model m) {
  if (m == Model::MaxPlus) {
    return {Scalar::finite(m, -2), Scalar::finite(m, -1), Scalar::unit(m), Scalar::finite(m, 1),
            Scalar::finite(m, 2)};
  }
  return {q(1, 4), q(1, 2), q(1), q(2), q(4)};
}

Outcome example_end_to_end() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  SpecFile f = read_spec_file(std::string(TROPICAL_TEST_DATA_DIR) + "/example4.json");
  o.require(!rank_one_check(f.raw).has_value(), "rank-one check reports a violation");
  HemispaceSpec v1 = HemispaceSpec::validate(f.raw);

  // The complement printed for this example: cone of e3, e3 + a e1 (a < 1),
  // e3 + b e2 (any b), e4 and e4 + c e2 (c < 1).
  RawSpec v2{M, 4, IndexSet{2, 3}, IndexSet{0, 1}, {}};
  v2.sigma.emplace(std::make_pair(2, 0), BoundarySet::make(q(1), false));
  v2.sigma.emplace(std::make_pair(2, 1), BoundarySet::everything(M));
  v2.sigma.emplace(std::make_pair(3, 0), BoundarySet::only_zero(M));
  v2.sigma.emplace(std::make_pair(3, 1), BoundarySet::make(q(1), false));
  HemispaceSpec comp = complement_spec(v1);
  o.require(comp.raw() == v2, "complement differs from the printed generator description");
  GridSpec grid(M, 4, default_grid_values(M));
  for (const auto& x : grid.points()) {
    o.require(conical_member(comp, x) == generated_cone_member(v2, x), "complement membership at " + to_string(x));
  }

  const std::vector<std::pair<std::string, bool>> cases{
      {"[0,2,0,1]", true}, {"[0,1,0,2]", false}, {"[2,0,1,0]", true}, {"[1,0,2,0]", false}};
  for (const auto& [text, expected] : cases) {
    o.require(conical_member(v1, parse_vec(M, text)) == expected, "membership of " + text);
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.require(ms < 1000, "took " + std::to_string(ms) + " ms");
  if (o.passed) o.detail = "4/4 membership cases, complement matches";
  return o;
}

Outcome partition_and_closure() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_rng(1001);
  std::vector<HemispaceSpec> specs{HemispaceSpec::validate(tropical::testing::example4_raw())};
  for (int k = 0; k < 100; ++k) specs.push_back(random_valid_spec(rng, M, 2 + k % 3));
  std::size_t cases = 0;
  for (const auto& s : specs) {
    GridSpec grid(M, s.dim(), with_thresholds(default_grid_values(M), s.raw()));
    Verdict p = partition_check(s, grid);
    o.require(p.passed, p.to_json());
    const HemispaceSpec c = complement_spec(s);
    for (const HemispaceSpec* side : {&s, &c}) {
      Verdict v = closure_check("closure", [side](const Vec& x) { return conical_member(*side, x); }, grid,
                                five_scalars(M));
      o.require(v.passed, v.to_json());
      cases += v.cases;
    }
    cases += p.cases;
  }
  const auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(s < 60, "took " + std::to_string(s) + " s");
  if (o.passed) o.detail = std::to_string(specs.size()) + " specs, " + std::to_string(cases) + " cases";
  return o;
}

Outcome rank_one_necessity() {
  Outcome o;
  Rng rng = make_rng(1002);
  const int count = 60;
  for (int k = 0; k < count; ++k) {
    RawSpec raw = random_violating_spec(rng, M, 4 + k % 2);
    ViolationWitness w = violation_witness(raw);
    o.require(!w.z.is_zero(), "zero witness");
    o.require(w.upper_gens.size() == 2 && w.lower_gens.size() == 2, "expected four witness generators");
    for (const auto& g : w.upper_gens) {
      for (const auto& c : g.coords()) o.require(!c.is_top(), "infinite generator coordinate");
    }
    o.require(cone_member_fg(w.z, w.upper_gens).member, "z outside the upper pair: " + to_string(w.z));
    o.require(cone_member_fg(w.z, w.lower_gens).member, "z outside the lower pair: " + to_string(w.z));
    o.require(generated_cone_member(raw, w.z) && generated_complement_member(raw, w.z),
              "z outside a generated cone: " + to_string(w.z));
  }
  if (o.passed) o.detail = std::to_string(count) + " violated specs certified";
  return o;
}

Outcome thin_laws() {
  Outcome o;
  Rng rng = make_rng(1003);
  const int count = 300;
  for (int k = 0; k < count; ++k) {
    Verdict v = thin_laws_check(random_valid_spec(rng, k % 2 ? M : Model::MaxPlus, 2 + k % 5));
    o.require(v.passed, v.to_json());
  }
  if (o.passed) o.detail = std::to_string(count) + " specs";
  return o;
}

Outcome closed_is_halfspace() {
  Outcome o;
  Rng rng = make_rng(1004);
  const int count = 60;
  for (int k = 0; k < count; ++k) {
    const Model m = k % 3 ? M : Model::MaxPlus;
    HemispaceSpec s = random_valid_spec(rng, m, 2 + k % 3, SpecShape{true, 0.15, 0.0});
    Verdict v = halfspace_check(s, GridSpec(m, s.dim(), with_thresholds(default_grid_values(m), s.raw())));
    o.require(v.passed, v.to_json());
    AffineHemispace h = random_affine(rng, m, 1 + k % 3, true);
    Verdict a = halfspace_check(h, GridSpec(m, h.dim(), with_thresholds(default_grid_values(m), h.base().raw())));
    o.require(a.passed, a.to_json());
  }
  if (o.passed) o.detail = std::to_string(count) + " conical and " + std::to_string(count) + " affine";
  return o;
}

Outcome sector_equivalences() {
  Outcome o;
  for (const GridSpec& g : {GridSpec(M, 2, default_grid_values(M)), GridSpec(Model::MaxPlus, 2, default_grid_values(Model::MaxPlus)),
                            GridSpec(M, 3, default_grid_values(M))}) {
    Verdict v = sector_forms_check(g);
    o.require(v.passed, v.to_json());
  }
  // Random bases in dimension 4 against the full grid.
  Rng rng = make_rng(1006);
  GridSpec g4(M, 4, default_grid_values(M));
  const auto pts = g4.points();
  for (int k = 0; k < 40; ++k) {
    Vec y = random_vec(rng, default_grid_values(M), 4);
    if (y.is_zero()) continue;
    for (auto i : support(y)) {
      SectorId id{y, SectorType::coordinate(i)};
      auto gens = quasisector_gens(id);
      for (const auto& x : pts) {
        o.require(quasisector_contains(id, x) == cone_member_fg(x, gens).member, "quasisector forms at " + to_string(x));
      }
    }
    SectorId h{y, SectorType::homogenizing()};
    PRDecomposition d = sector_pr(h);
    for (const auto& x : pts) o.require(sector_contains(h, x) == pr_member(x, d), "sector forms at " + to_string(x));
  }
  const std::vector<std::pair<Scalar, Scalar>> pairs{
      {q(1, 2), q(1)}, {q(1), q(2)}, {q(1, 4), q(4)}, {q(2), q(2)}, {Scalar::zero(M), q(1)}};
  std::size_t checked = 0;
  for (std::size_t n : {2, 3}) {
    GridSpec g(M, n, default_grid_values(M));
    for (const auto& y : g.points()) {
      for (const auto& [a, b] : pairs) {
        const SectorId small{scale(a, y), SectorType::homogenizing()};
        const SectorId big{scale(b, y), SectorType::homogenizing()};
        for (const auto& x : g.points()) {
          ++checked;
          if (sector_contains(small, x)) o.require(sector_contains(big, x), "monotonicity at " + to_string(x));
        }
      }
    }
  }
  if (o.passed) o.detail = "forms agree; monotonicity on " + std::to_string(checked) + " triples";
  return o;
}

Outcome homogenization_round_trip() {
  Outcome o;
  Rng rng = make_rng(1007);
  const int count = 120;
  for (int k = 0; k < count; ++k) {
    const Model m = k % 2 ? M : Model::MaxPlus;
    const std::size_t n = 1 + k % 4;
    PRDecomposition d = random_pr(rng, m, n, k % 3, 1 + k % 2);
    Verdict v = homogenization_check(d, GridSpec(m, n, default_grid_values(m)));
    o.require(v.passed, v.to_json());
  }
  std::size_t points = 0;
  for (int k = 0; k < 500; ++k) {
    const Model m = k % 2 ? M : Model::MaxPlus;
    const std::size_t n = 1 + k % 4;
    Vec x = random_vec(rng, default_grid_values(m), n), y = random_vec(rng, default_grid_values(m), n);
    for (auto i : support(x).intersect(support(y))) {
      const SectorType t = SectorType::coordinate(i);
      Vec z = common_point(x, y, t, Geometry::Conical);
      o.require(quasisector_contains({x, t}, z) && quasisector_contains({y, t}, z), "conical common point");
      Vec w = common_point(x, y, t, Geometry::Affine);
      o.require(sector_contains({x, t}, w) && sector_contains({y, t}, w), "affine common point");
      points += 2;
    }
    Vec w = common_point(x, y, SectorType::homogenizing(), Geometry::Affine);
    o.require(sector_contains({x, SectorType::homogenizing()}, w) && sector_contains({y, SectorType::homogenizing()}, w),
              "homogenizing common point");
    ++points;
  }
  if (o.passed) o.detail = std::to_string(count) + " decompositions, " + std::to_string(points) + " common points";
  return o;
}

Outcome catalog_2d() {
  Outcome o;
  std::vector<BoundarySet> kinds{BoundarySet::only_zero(M), BoundarySet::everything(M)};
  for (const Scalar& t : {q(1, 2), q(1), q(2)}) {
    kinds.push_back(BoundarySet::make(t, false));
    kinds.push_back(BoundarySet::make(t, true));
  }
  const std::vector<std::pair<IndexSet, IndexSet>> shapes{
      {IndexSet{2}, IndexSet{0, 1}}, {IndexSet{0, 2}, IndexSet{1}}, {IndexSet{1, 2}, IndexSet{0}}};
  const cli::RenderConfig config;
  GridSpec grid(M, 2, {Scalar::zero(M), q(1, 4), q(1, 2), q(3, 4), q(1), q(3, 2), q(2), q(3), q(4)});
  std::size_t rendered = 0, skipped = 0;
  std::uint64_t seed = 0;
  for (const auto& [rows, cols] : shapes) {
    for (std::size_t a = 0; a < kinds.size(); ++a) {
      for (std::size_t b = 0; b < kinds.size(); ++b) {
        RawSpec raw{M, 3, rows, cols, {}};
        std::size_t k = 0;
        for (auto i : rows) {
          for (auto j : cols) raw.sigma.emplace(std::make_pair(i, j), kinds[k++ == 0 ? a : b]);
        }
        if (rank_one_check(raw)) {
          ++skipped;
          continue;
        }
        HemispaceSpec base = HemispaceSpec::validate(raw);
        for (bool contains_zero : {true, false}) {
          std::optional<AffineHemispace> h;
          try {
            h = AffineHemispace::make(base, contains_zero);
          } catch (const SpecError&) {
            ++skipped;  // the whole plane or nothing
            continue;
          }
          cli::Scene scene = cli::build_scene({raw, contains_zero}, config);
          const std::string svg = cli::render_svg(scene, config, "catalog");
          o.require(!scene.cells.empty() && svg.find("</svg>") != std::string::npos, "empty rendering");
          const AffineHemispace hc = affine_complement(*h);
          for (const AffineHemispace* side : {static_cast<const AffineHemispace*>(&*h), &hc}) {
            Verdict v = segment_convexity_check("catalog", [side](const Vec& x) { return affine_member(*side, x); },
                                                grid, 500, 5, ++seed);
            o.require(v.passed, serialize_spec(*side) + v.to_json());
          }
          ++rendered;
        }
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(rendered) + " hemispaces rendered and convex on both sides, " + std::to_string(skipped) +
               " combinations not hemispaces";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example end to end", example_end_to_end},
      {"partition and closure on grids", partition_and_closure},
      {"rank-one necessity witnesses", rank_one_necessity},
      {"thin-structure laws", thin_laws},
      {"closed hemispaces are halfspaces", closed_is_halfspace},
      {"sector equivalences and monotonicity", sector_equivalences},
      {"homogenization round trip and common points", homogenization_round_trip},
      {"2-D catalog renders and is convex", catalog_2d},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "AC" << k + 1 << " " << (o.passed ? "PASS" : "FAIL") << " " << criteria[k].first << ": " << o.detail
         << " (" << static_cast<long>(ms) << " ms)";
    std::cout << line.str() << std::endl;
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
