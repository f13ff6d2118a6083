#include "tropical_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tropical/generators.hpp"
#include "tropical/halfspace.hpp"
#include "tropical/sectors.hpp"
#include "tropical/spec_io.hpp"
#include "tropical/verify.hpp"
#include "tropical_cli/render.hpp"

namespace tropical::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string model;
  std::uint64_t seed = 1;

  Model model_or(Model fallback) const { return model.empty() ? fallback : parse_model(model); }
};

SpecFile load(const std::string& path, const Globals& g) {
  SpecFile f = read_spec_file(path);
  if (!g.model.empty() && parse_model(g.model) != f.raw.model) {
    throw UsageError("--model " + g.model + " does not match the file's model " +
                     std::string(to_string(f.raw.model)));
  }
  return f;
}

// The validated hemispace of a file; affine files yield their conical base.
struct Loaded {
  SpecFile file;
  HemispaceSpec spec;
  std::optional<AffineHemispace> affine;
};

Loaded load_valid(const std::string& path, const Globals& g) {
  SpecFile f = load(path, g);
  HemispaceSpec spec = HemispaceSpec::validate(f.raw);
  std::optional<AffineHemispace> h;
  if (f.affine()) h = AffineHemispace::make(spec, *f.contains_zero);
  return {std::move(f), std::move(spec), std::move(h)};
}

Vec read_point(Model model, const std::string& text, std::size_t dim) {
  Vec x = parse_vec(model, text);
  if (x.size() != dim) {
    throw UsageError("point has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(dim));
  }
  return x;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError(path + ": cannot open for writing");
  f << text;
}

int cmd_check(const std::string& path, const Globals& g, std::ostream& out) {
  SpecFile f = load(path, g);
  check_structure(f.raw);
  if (auto v = rank_one_check(f.raw)) {
    out << "rank-one violation at (" << v->i1 + 1 << "," << v->i2 + 1 << "," << v->j1 + 1 << "," << v->j2 + 1
        << "), " << (v->side == Violation::Side::Direct ? "direct" : "mirrored") << " side\n";
    return kExitFailure;
  }
  HemispaceSpec spec = HemispaceSpec::validate(f.raw);
  if (f.affine()) AffineHemispace::make(spec, *f.contains_zero);
  out << "OK\n";
  return kExitOk;
}

int cmd_complement(const std::string& path, const std::string& output, const Globals& g, std::ostream& out) {
  Loaded l = load_valid(path, g);
  write_text(output, l.affine ? serialize_spec(affine_complement(*l.affine)) : serialize_spec(complement_spec(l.spec)),
             out);
  return kExitOk;
}

int cmd_member(const std::string& path, const std::string& point, bool complement, bool explain,
               const Globals& g, std::ostream& out) {
  Loaded l = load_valid(path, g);
  bool in = false;
  std::string why;
  if (l.affine) {
    AffineHemispace h = complement ? affine_complement(*l.affine) : *l.affine;
    Vec x = read_point(h.model(), point, h.dim());
    in = affine_member(h, x);
    HemispaceSpec cone = defining_cone(h);
    why = explain_member(cone, append(x, Scalar::unit(h.model()))).explain(cone);
  } else {
    HemispaceSpec spec = complement ? complement_spec(l.spec) : l.spec;
    Vec x = read_point(spec.model(), point, spec.dim());
    MembershipTrace t = explain_member(spec, x);
    in = t.member;
    why = t.explain(spec);
  }
  out << (in ? "IN" : "OUT") << "\n";
  if (explain) out << why << "\n";
  return in ? kExitOk : kExitFailure;
}

std::string gauge(const std::optional<Scalar>& s) { return s ? to_string(*s) : "-"; }

int cmd_thin(const std::string& path, const Globals& g, std::ostream& out) {
  Loaded l = load_valid(path, g);
  const ThinStructure& ts = l.spec.thin();
  for (std::size_t c = 0; c < ts.classes.size(); ++c) {
    const ThinClass& k = ts.classes[c];
    out << "class " << c + 1 << ": rows " << k.rows.to_string() << ", finite columns " << k.active.to_string()
        << ", infinite " << k.infinite.to_string() << ", zero " << k.zero.to_string() << "\n";
    out << "  row order:";
    for (auto i : k.row_order) out << " " << i + 1;
    out << "\n  column order:";
    for (auto j : k.col_order) out << " " << j + 1;
    out << "\n";
  }
  for (auto i : l.spec.rows()) {
    const RowPartition& p = ts.partition[i];
    out << "row " << i + 1 << ": beta " << gauge(ts.beta[i]) << ", strict " << p.strict.to_string() << ", weak "
        << p.weak.to_string() << ", zero " << p.zero.to_string() << ", infinite " << p.infinite.to_string() << "\n";
  }
  for (auto j : l.spec.cols()) out << "column " << j + 1 << ": gamma " << gauge(ts.gamma[j]) << "\n";
  for (const auto& a : alpha_matrix(l.spec, complement_spec(l.spec))) {
    static const char* owners[] = {"this side", "complement", "zero", "infinite"};
    out << "boundary (" << a.i + 1 << "," << a.j + 1 << "): " << to_string(a.value) << ", "
        << owners[static_cast<int>(a.owner)] << "\n";
  }
  return kExitOk;
}

int cmd_halfspace(const std::string& path, const Globals& g, std::ostream& out) {
  Loaded l = load_valid(path, g);
  out << (l.affine ? to_halfspace(*l.affine) : to_halfspace(l.spec)).to_string() << "\n";
  return kExitOk;
}

mpq_class parse_positive(const std::string& text) {
  Scalar s = parse_scalar(Model::MaxTimes, text);
  if (!s.is_finite()) throw UsageError("window must be a positive rational, got " + text);
  return s.value();
}

int cmd_render(const std::string& path, const std::string& output, const std::string& window, unsigned resolution,
               bool no_complement, bool no_ownership, const Globals& g, std::ostream& out, std::ostream& err) {
  SpecFile f = load(path, g);
  RenderConfig config;
  if (!window.empty()) {
    const auto comma = window.find(',');
    config.xmax = parse_positive(window.substr(0, comma));
    config.ymax = comma == std::string::npos ? *config.xmax : parse_positive(window.substr(comma + 1));
  }
  config.resolution = resolution;
  config.show_complement = !no_complement;
  config.show_boundary_ownership = !no_ownership;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Scene scene = build_scene(f, config);
  const std::size_t boundary =
      std::count_if(scene.edges.begin(), scene.edges.end(), [](const Edge& e) { return e.boundary; });
  std::string title = std::string(to_string(f.raw.model)) + (f.affine() ? " affine" : " conical") + " hemispace";
  write_text(output, render_svg(scene, config, title), out);
  err << "rendered " << scene.cells.size() << " cells, " << boundary << " boundary edges\n";
  return kExitOk;
}

struct SectorArgs {
  std::string base, point, kind = "sector";
  std::string type;
};

SectorId sector_id(Model model, const SectorArgs& a) {
  Vec y = parse_vec(model, a.base);
  long t = 0;
  try {
    t = std::stol(a.type);
  } catch (const std::exception&) {
    throw UsageError("--type must be an index, got " + a.type);
  }
  if (t < 1 || static_cast<std::size_t>(t) > y.size() + 1) {
    throw UsageError("--type must lie in 1.." + std::to_string(y.size() + 1));
  }
  if (static_cast<std::size_t>(t) == y.size() + 1) {
    if (a.kind == "quasi") throw UsageError("quasisectors have no homogenizing type");
    return {y, SectorType::homogenizing()};
  }
  if (y[t - 1].is_zero()) throw UsageError("--type must index a nonzero coordinate of --base");
  return {y, SectorType::coordinate(static_cast<std::size_t>(t - 1))};
}

int cmd_sector_test(const SectorArgs& a, const Globals& g, std::ostream& out) {
  const Model model = g.model_or(Model::MaxTimes);
  SectorId id = sector_id(model, a);
  Vec x = read_point(model, a.point, id.base.size());
  bool in = false;
  if (a.kind == "quasi") in = quasisector_contains(id, x);
  else if (a.kind == "semispace") in = semispace_contains(id, x);
  else in = sector_contains(id, x);
  out << (in ? "IN" : "OUT") << "\n";
  return in ? kExitOk : kExitFailure;
}

int cmd_sector_gens(const SectorArgs& a, const Globals& g, std::ostream& out) {
  const Model model = g.model_or(Model::MaxTimes);
  SectorId id = sector_id(model, a);
  if (a.kind == "quasi") {
    for (const auto& v : quasisector_gens(id)) out << to_string(v) << "\n";
    return kExitOk;
  }
  if (a.kind != "sector") throw UsageError("sector-gens supports --kind quasi or sector");
  PRDecomposition d = sector_pr(id);
  for (const auto& p : d.points) out << "point " << to_string(p) << "\n";
  for (const auto& r : d.rays) out << "ray " << to_string(r) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string file, grid, property = "all";
  std::size_t samples = 0;
  std::size_t dim = 3;
};

using Property = std::pair<std::string, std::function<Verdict()>>;

std::vector<Scalar> scalars_for(Model m) {
  if (m == Model::MaxPlus) {
    return {Scalar::finite(m, -2), Scalar::finite(m, -1), Scalar::unit(m), Scalar::finite(m, 1),
            Scalar::finite(m, 2)};
  }
  return {Scalar::finite(m, 1, 4), Scalar::finite(m, 1, 2), Scalar::unit(m), Scalar::finite(m, 2),
          Scalar::finite(m, 4)};
}

std::vector<Scalar> grid_values(Model model, const std::string& text) {
  if (text.empty()) return default_grid_values(model);
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_scalar(model, tok));
  if (out.empty()) throw UsageError("--grid needs at least one value");
  return out;
}

Verdict witness_verdict(const RawSpec& raw) {
  Verdict v("witness");
  ViolationWitness w = violation_witness(raw);
  v.cases = 1;
  if (w.z.is_zero() || !cone_member_fg(w.z, w.upper_gens).member || !cone_member_fg(w.z, w.lower_gens).member) {
    v.fail({w.z}, "witness is not in both generated cones");
  } else {
    v.detail = w.violation.to_string() + ", z = " + to_string(w.z);
  }
  return v;
}

std::vector<Property> file_properties(const std::string& path, const VerifyArgs& a, const Globals& g) {
  SpecFile f = load(path, g);
  check_structure(f.raw);
  const Model m = f.raw.model;
  std::vector<Property> props;
  if (rank_one_check(f.raw)) {
    props.emplace_back("witness", [raw = f.raw] { return witness_verdict(raw); });
    return props;
  }
  const std::size_t pairs = a.samples ? a.samples : 200;
  const HemispaceSpec spec = HemispaceSpec::validate(f.raw);
  const GridSpec grid(m, f.affine() ? f.raw.dim - 1 : f.raw.dim, with_thresholds(grid_values(m, a.grid), f.raw));
  const std::uint64_t seed = g.seed;
  if (f.affine()) {
    const AffineHemispace h = AffineHemispace::make(spec, *f.contains_zero);
    const AffineHemispace hc = affine_complement(h);
    props.emplace_back("partition", [=] { return partition_check(h, grid); });
    props.emplace_back("convexity", [=] {
      return segment_convexity_check("convexity", [&](const Vec& x) { return affine_member(h, x); }, grid, pairs,
                                     5, seed);
    });
    props.emplace_back("convexity-complement", [=] {
      return segment_convexity_check("convexity-complement", [&](const Vec& x) { return affine_member(hc, x); },
                                     grid, pairs, 5, seed + 1);
    });
    props.emplace_back("sectors", [=] { return sector_union_check(h, grid); });
    if (is_closed(h)) props.emplace_back("halfspace", [=] { return halfspace_check(h, grid); });
    return props;
  }
  const HemispaceSpec comp = complement_spec(spec);
  auto side = [](const HemispaceSpec& s) { return [s](const Vec& x) { return conical_member(s, x); }; };
  props.emplace_back("partition", [=] { return partition_check(spec, grid); });
  props.emplace_back("closure", [=] { return closure_check("closure", side(spec), grid, scalars_for(m)); });
  props.emplace_back("closure-complement",
                     [=] { return closure_check("closure-complement", side(comp), grid, scalars_for(m)); });
  props.emplace_back("convexity",
                     [=] { return segment_convexity_check("convexity", side(spec), grid, pairs, 5, seed); });
  props.emplace_back("convexity-complement", [=] {
    return segment_convexity_check("convexity-complement", side(comp), grid, pairs, 5, seed + 1);
  });
  props.emplace_back("thin-laws", [=] { return thin_laws_check(spec); });
  props.emplace_back("reflection", [=] { return reflection_check(spec, grid); });
  props.emplace_back("generators", [=] { return generators_check(spec); });
  props.emplace_back("sectors", [=] { return sector_union_check(spec, grid); });
  if (is_closed(spec)) props.emplace_back("halfspace", [=] { return halfspace_check(spec, grid); });
  return props;
}

// Runs check on `count` random instances and folds the results into one
// record: cases add up and the first failure is kept.
Verdict repeat(const std::string& name, std::size_t count, std::uint64_t seed, std::uint64_t stream,
               const std::function<Verdict(Rng&)>& check) {
  Verdict total(name);
  Rng rng = make_rng(seed, stream);
  for (std::size_t k = 0; k < count && total.passed; ++k) {
    Verdict v = check(rng);
    total.cases += v.cases;
    if (!v.passed) total.fail(v.counterexample, "instance " + std::to_string(k) + ": " + v.detail);
  }
  return total;
}

std::vector<Property> library_properties(const VerifyArgs& a, const Globals& g) {
  const Model m = g.model_or(Model::MaxTimes);
  const std::size_t n = std::max<std::size_t>(a.dim, 2);
  const std::size_t count = a.samples ? a.samples : 20;
  const std::uint64_t seed = g.seed;
  const std::vector<Scalar> values = grid_values(m, a.grid);
  auto grid_for = [m, values](std::size_t dim, const RawSpec& raw) {
    return GridSpec(m, dim, with_thresholds(values, raw));
  };
  std::vector<Property> props;
  auto add = [&](const std::string& name, std::function<Verdict(Rng&)> check) {
    const std::uint64_t stream = props.size();
    props.emplace_back(name, [=] { return repeat(name, count, seed, stream, check); });
  };
  add("partition", [=](Rng& rng) {
    HemispaceSpec s = random_valid_spec(rng, m, n);
    return partition_check(s, grid_for(n, s.raw()));
  });
  add("closure", [=](Rng& rng) {
    HemispaceSpec s = random_valid_spec(rng, m, n);
    HemispaceSpec c = complement_spec(s);
    GridSpec grid = grid_for(n, s.raw());
    Verdict v = closure_check("closure", [&](const Vec& x) { return conical_member(s, x); }, grid, scalars_for(m));
    if (!v.passed) return v;
    return closure_check("closure", [&](const Vec& x) { return conical_member(c, x); }, grid, scalars_for(m));
  });
  add("thin-laws", [=](Rng& rng) { return thin_laws_check(random_valid_spec(rng, m, n)); });
  add("reflection", [=](Rng& rng) {
    HemispaceSpec s = random_valid_spec(rng, m, n);
    return reflection_check(s, grid_for(n, s.raw()));
  });
  add("generators", [=](Rng& rng) { return generators_check(random_valid_spec(rng, m, n)); });
  add("sectors", [=](Rng& rng) {
    HemispaceSpec s = random_valid_spec(rng, m, n);
    return sector_union_check(s, grid_for(n, s.raw()));
  });
  add("halfspace", [=](Rng& rng) {
    HemispaceSpec s = random_valid_spec(rng, m, n, SpecShape{true, 0.15, 0.0});
    return halfspace_check(s, grid_for(n, s.raw()));
  });
  add("witness", [=](Rng& rng) { return witness_verdict(random_violating_spec(rng, m, std::max<std::size_t>(n, 4))); });
  add("affine-partition", [=](Rng& rng) {
    AffineHemispace h = random_affine(rng, m, n - 1, false);
    return partition_check(h, grid_for(n - 1, h.base().raw()));
  });
  add("affine-convexity", [=](Rng& rng) {
    AffineHemispace h = random_affine(rng, m, n - 1, false);
    AffineHemispace hc = affine_complement(h);
    GridSpec grid = grid_for(n - 1, h.base().raw());
    const std::uint64_t s = rng();
    Verdict v = segment_convexity_check("affine-convexity", [&](const Vec& x) { return affine_member(h, x); }, grid,
                                        50, 5, s);
    if (!v.passed) return v;
    return segment_convexity_check("affine-convexity", [&](const Vec& x) { return affine_member(hc, x); }, grid, 50,
                                   5, s + 1);
  });
  add("affine-sectors", [=](Rng& rng) {
    AffineHemispace h = random_affine(rng, m, n - 1, false);
    return sector_union_check(h, grid_for(n - 1, h.base().raw()));
  });
  add("multiorder", [=](Rng& rng) {
    PRDecomposition d = random_pr(rng, m, n - 1, 1 + rng() % 3, rng() % 3);
    return multiorder_invariant_check(d, GridSpec(m, n - 1, values));
  });
  add("homogenization", [=](Rng& rng) {
    const std::size_t points = rng() % 3;
    PRDecomposition d = random_pr(rng, m, n - 1, points, (points == 0) + rng() % 3);
    return homogenization_check(d, GridSpec(m, n - 1, values));
  });
  props.emplace_back("sector-forms", [=] { return sector_forms_check(GridSpec(m, std::min<std::size_t>(n, 3), values)); });
  return props;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::vector<Property> props = a.file.empty() ? library_properties(a, g) : file_properties(a.file, a, g);
  if (a.property != "all") {
    auto it = std::find_if(props.begin(), props.end(), [&](const Property& p) { return p.first == a.property; });
    if (it == props.end()) {
      std::string names;
      for (const auto& p : props) names += (names.empty() ? "" : ", ") + p.first;
      throw UsageError("unknown property " + a.property + "; available: " + names);
    }
    props = {*it};
  }
  std::size_t passed = 0;
  for (const auto& [name, check] : props) {
    Verdict v = check();
    out << v.to_json() << "\n";
    passed += v.passed;
    err << (v.passed ? "pass " : "FAIL ") << name << " (" << v.cases << " cases)";
    if (!v.passed) err << ": " << v.detail;
    err << "\n";
  }
  err << passed << "/" << props.size() << " properties passed\n";
  return passed == props.size() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical hemispaces: validation, complements, membership, pictures and checks", "tropical"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--model", g.model, "Arithmetic model")->check(CLI::IsMember({"max-plus", "max-times"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  std::function<int()> action;
  std::string file, output, point, window;
  bool complement = false, explain = false, no_complement = false, no_ownership = false;
  unsigned resolution = 0;

  auto* check = app.add_subcommand("check", "Validate a spec file and the rank-one condition");
  check->add_option("file", file, "Spec file")->required();
  check->callback([&] { action = [&] { return cmd_check(file, g, out); }; });

  auto* comp = app.add_subcommand("complement", "Print the complementary hemispace");
  comp->add_option("file", file, "Spec file")->required();
  comp->add_option("-o,--output", output, "Output file (default stdout)");
  comp->callback([&] { action = [&] { return cmd_complement(file, output, g, out); }; });

  auto* member = app.add_subcommand("member", "Decide membership of a point");
  member->add_option("file", file, "Spec file")->required();
  member->add_option("--point", point, "Point such as \"[2,0,1,0]\"")->required();
  member->add_flag("--complement", complement, "Test the complement instead");
  member->add_flag("--explain", explain, "Print the deciding class and condition");
  member->callback([&] { action = [&] { return cmd_member(file, point, complement, explain, g, out); }; });

  auto* thin = app.add_subcommand("thin", "Print the class structure, gauges and boundary multipliers");
  thin->add_option("file", file, "Spec file")->required();
  thin->callback([&] { action = [&] { return cmd_thin(file, g, out); }; });

  auto* half = app.add_subcommand("halfspace", "Print the inequality of a closed hemispace");
  half->add_option("file", file, "Spec file")->required();
  half->callback([&] { action = [&] { return cmd_halfspace(file, g, out); }; });

  auto* render = app.add_subcommand("render2d", "Write an SVG picture of a 2-D hemispace");
  render->add_option("file", file, "Spec file")->required();
  render->add_option("-o,--output", output, "SVG file (default stdout)");
  render->add_option("--window", window, "Upper window corner \"x,y\" or a single size");
  render->add_option("--resolution", resolution, "Pixels per unit (at least 16)");
  render->add_flag("--no-complement", no_complement, "Leave the complement unshaded");
  render->add_flag("--no-ownership", no_ownership, "Draw all boundaries alike");
  render->callback([&] {
    action = [&] { return cmd_render(file, output, window, resolution, no_complement, no_ownership, g, out, err); };
  });

  SectorArgs sa;
  auto sector_options = [&](CLI::App* c, bool with_point) {
    c->add_option("--base", sa.base, "Base point y")->required();
    c->add_option("--type", sa.type, "Type index, 1-based; n+1 is the homogenizing type")->required();
    c->add_option("--kind", sa.kind, "quasi, sector or semispace")
        ->check(CLI::IsMember({"quasi", "sector", "semispace"}));
    if (with_point) c->add_option("--point", sa.point, "Point to test")->required();
  };
  auto* sectors = app.add_subcommand("sectors", "Sector predicates and generators");
  sectors->require_subcommand(1);
  auto* stest = sectors->add_subcommand("test", "Test a point against a (quasi)sector or semispace");
  auto* sgens = sectors->add_subcommand("gens", "Print generators of a (quasi)sector");
  auto* stest_alias = app.add_subcommand("sector-test", "Same as \"sectors test\"");
  auto* sgens_alias = app.add_subcommand("sector-gens", "Same as \"sectors gens\"");
  for (auto* c : {stest, stest_alias}) {
    sector_options(c, true);
    c->callback([&] { action = [&] { return cmd_sector_test(sa, g, out); }; });
  }
  for (auto* c : {sgens, sgens_alias}) {
    sector_options(c, false);
    c->callback([&] { action = [&] { return cmd_sector_gens(sa, g, out); }; });
  }

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run property checks on a spec file or on random instances");
  verify->add_option("file", va.file, "Spec file; omit for library-wide random checks");
  verify->add_option("--grid", va.grid, "Grid values, comma separated");
  verify->add_option("--samples", va.samples, "Sampled pairs (with a file) or random instances (without)");
  verify->add_option("--property", va.property, "Property name or all");
  verify->add_option("--dim", va.dim, "Dimension of random instances")->check(CLI::Range(2, 5));
  verify->callback([&] { action = [&] { return cmd_verify(va, g, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const RankOneViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NotClosedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // ParseError, SpecError, UsageError and bad literals.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace tropical::cli
