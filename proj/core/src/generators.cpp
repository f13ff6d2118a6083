#include "tropical/generators.hpp"

#include <stdexcept>

namespace tropical {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::vector<Scalar> default_grid_values(Model model) {
  if (model == Model::MaxTimes) {
    return {Scalar::zero(model), Scalar::finite(model, 1, 2), Scalar::finite(model, 1),
            Scalar::finite(model, 2), Scalar::finite(model, 4)};
  }
  return {Scalar::zero(model), Scalar::finite(model, -1), Scalar::finite(model, 0), Scalar::finite(model, 1),
          Scalar::finite(model, 2)};
}

Scalar random_finite(Rng& rng, Model model, long lo_exp, long hi_exp) {
  std::uniform_int_distribution<long> d(lo_exp, hi_exp);
  return power(Scalar::finite(model, 2), d(rng));
}

Vec random_vec(Rng& rng, const std::vector<Scalar>& values, std::size_t n) {
  if (values.empty()) throw std::invalid_argument("random_vec: empty value set");
  std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < n; ++k) c.push_back(values[d(rng)]);
  return Vec(values.front().model(), std::move(c));
}

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void random_split(Rng& rng, std::size_t n, std::size_t min_side, IndexSet& rows, IndexSet& cols) {
  if (n < 2 * min_side) throw std::invalid_argument("dimension too small for the requested split");
  while (true) {
    rows = IndexSet();
    cols = IndexSet();
    for (std::size_t k = 0; k < n; ++k) (coin(rng, 0.5) ? rows : cols).insert(k);
    if (rows.size() >= min_side && cols.size() >= min_side) return;
  }
}

// Gauge mode draws σ_ij = β_i / γ_j; free mode draws thresholds
// independently. Zero and inf entries are mixed in at the given rates.
RawSpec fill(Rng& rng, Model model, std::size_t n, IndexSet rows, IndexSet cols, const SpecShape& shape,
             bool gauge) {
  RawSpec raw{model, n, std::move(rows), std::move(cols), {}};
  std::vector<Scalar> beta, gamma;
  for (std::size_t k = 0; k < n; ++k) {
    beta.push_back(random_finite(rng, model, -1, 1));
    gamma.push_back(random_finite(rng, model, -1, 1));
  }
  const double inf_rate = shape.closed_only ? 0.0 : shape.inf_rate;
  for (auto i : raw.rows) {
    for (auto j : raw.cols) {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      double r = u(rng);
      BoundarySet s = BoundarySet::only_zero(model);
      if (r < shape.zero_rate) {
        s = BoundarySet::only_zero(model);
      } else if (r < shape.zero_rate + inf_rate) {
        s = BoundarySet::everything(model);
      } else {
        Scalar t = gauge ? residual(beta[i], gamma[j]) : random_finite(rng, model, -1, 1);
        s = BoundarySet::make(t, shape.closed_only || coin(rng, 0.5));
      }
      raw.sigma.emplace(std::make_pair(i, j), s);
    }
  }
  return raw;
}

}  // namespace

RawSpec random_raw_spec(Rng& rng, Model model, std::size_t n, const SpecShape& shape) {
  IndexSet rows, cols;
  random_split(rng, n, 1, rows, cols);
  return fill(rng, model, n, rows, cols, shape, coin(rng, 0.5));
}

HemispaceSpec random_valid_spec(Rng& rng, Model model, std::size_t n, const SpecShape& shape) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RawSpec raw = random_raw_spec(rng, model, n, shape);
    if (!rank_one_check(raw)) return HemispaceSpec::validate(std::move(raw));
  }
  throw std::runtime_error("random_valid_spec: no valid spec found");
}

RawSpec random_violating_spec(Rng& rng, Model model, std::size_t n) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    IndexSet rows, cols;
    random_split(rng, n, 2, rows, cols);
    RawSpec raw = fill(rng, model, n, rows, cols, SpecShape{false, 0.1, 0.1}, false);
    if (rank_one_check(raw)) return raw;
  }
  throw std::runtime_error("random_violating_spec: no violating spec found");
}

AffineHemispace random_affine(Rng& rng, Model model, std::size_t n, bool closed) {
  const std::size_t last = n;
  SpecShape shape{closed, 0.15, 0.15};
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const bool contains_zero = coin(rng, 0.5);
    IndexSet rows, cols;
    random_split(rng, n + 1, 1, rows, cols);
    // The defining cone has the last coordinate as a row when it contains
    // zero, and as a column otherwise (its complement is the base).
    if (contains_zero != rows.contains(last)) {
      if (rows.contains(last)) {
        rows = rows.minus({last});
        cols.insert(last);
      } else {
        cols = cols.minus({last});
        rows.insert(last);
      }
      if (rows.empty() || cols.empty()) continue;
    }
    RawSpec raw = fill(rng, model, n + 1, rows, cols, shape, coin(rng, 0.5));
    if (rank_one_check(raw)) continue;
    HemispaceSpec cone = HemispaceSpec::validate(std::move(raw));
    HemispaceSpec base = contains_zero ? cone : complement_spec(cone);
    try {
      return AffineHemispace::make(base, contains_zero);
    } catch (const SpecError&) {
      continue;
    }
  }
  throw std::runtime_error("random_affine: no hemispace found");
}

PRDecomposition random_pr(Rng& rng, Model model, std::size_t n, std::size_t points, std::size_t rays) {
  std::vector<Scalar> values = default_grid_values(model);
  PRDecomposition d{model, n, {}, {}};
  for (std::size_t k = 0; k < points; ++k) d.points.push_back(random_vec(rng, values, n));
  for (std::size_t k = 0; k < rays; ++k) d.rays.push_back(random_vec(rng, values, n));
  return d;
}

}  // namespace tropical
