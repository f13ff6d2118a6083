#include "tropical/tlinalg.hpp"

#include <ostream>

namespace tropical {

namespace {

void require_dim(const Vec& x, std::size_t n, const char* where) {
  if (x.size() != n) {
    throw std::invalid_argument(std::string(where) + ": dimension " + std::to_string(x.size()) +
                                " does not match " + std::to_string(n));
  }
}

void require_same(const Vec& x, const Vec& y) {
  if (x.model() != y.model()) {
    throw ModelMismatch("cannot combine vectors of different models");
  }
  require_dim(y, x.size(), "vector operation");
}

}  // namespace

Vec::Vec(Model model, std::size_t n) : model_(model), coords_(n, Scalar::zero(model)) {}

Vec::Vec(Model model, std::vector<Scalar> coords) : model_(model), coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.model() != model_) throw ModelMismatch("vector coordinate has the wrong model");
    if (c.is_top()) throw std::domain_error("vector coordinates cannot be inf");
  }
}

Vec Vec::unit_vector(Model model, std::size_t i, std::size_t n) {
  if (i >= n) throw std::out_of_range("unit vector index out of range");
  Vec e(model, n);
  e.coords_[i] = Scalar::unit(model);
  return e;
}

void Vec::set(std::size_t i, Scalar value) {
  if (value.model() != model_) throw ModelMismatch("vector coordinate has the wrong model");
  if (value.is_top()) throw std::domain_error("vector coordinates cannot be inf");
  coords_.at(i) = std::move(value);
}

bool Vec::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const Vec& a, const Vec& b) {
  return a.model_ == b.model_ && a.coords_ == b.coords_;
}

IndexSet support(const Vec& x) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) s.push_back(i);
  }
  return IndexSet(std::move(s));
}

Vec oplus(const Vec& x, const Vec& y) {
  require_same(x, y);
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(oplus(x[i], y[i]));
  return Vec(x.model(), std::move(out));
}

Vec scale(const Scalar& lambda, const Vec& x) {
  if (lambda.is_top()) throw std::domain_error("cannot scale a vector by inf");
  std::vector<Scalar> out;
  out.reserve(x.size());
  for (const auto& c : x.coords()) out.push_back(otimes(lambda, c));
  return Vec(x.model(), std::move(out));
}

Vec restrict_to(const Vec& x, const std::vector<std::size_t>& keep) {
  std::vector<Scalar> out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(x[i]);
  return Vec(x.model(), std::move(out));
}

Vec append(const Vec& x, const Scalar& last) {
  std::vector<Scalar> out = x.coords();
  out.push_back(last);
  return Vec(x.model(), std::move(out));
}

Vec drop_last(const Vec& x) {
  if (x.size() == 0) throw std::invalid_argument("drop_last on an empty vector");
  std::vector<Scalar> out(x.coords().begin(), x.coords().end() - 1);
  return Vec(x.model(), std::move(out));
}

Vec parse_vec(Model model, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unbalanced brackets in vector '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Scalar> coords;
  if (text.empty()) return Vec(model, std::move(coords));
  while (true) {
    auto comma = text.find(',');
    coords.push_back(parse_scalar(model, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  for (const auto& c : coords) {
    if (c.is_top()) throw ParseError("vector coordinates cannot be inf");
  }
  return Vec(model, std::move(coords));
}

std::string to_string(const Vec& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += to_string(x[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const Vec& x) { return os << to_string(x); }

ConeMembership cone_member_fg(const Vec& x, const std::vector<Vec>& gens) {
  ConeMembership out;
  Vec combo(x.model(), x.size());
  out.coefficients.reserve(gens.size());
  for (const auto& g : gens) {
    require_same(x, g);
    std::optional<Scalar> lambda;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].is_zero()) continue;
      Scalar r = residual(x[k], g[k]);
      if (!lambda || r < *lambda) lambda = r;
    }
    Scalar l = lambda.value_or(Scalar::zero(x.model()));
    combo = oplus(combo, scale(l, g));
    out.coefficients.push_back(std::move(l));
  }
  out.member = combo == x;
  return out;
}

std::vector<Vec> segment_points(const Vec& x, const Vec& y, std::size_t k) {
  require_same(x, y);
  const Model m = x.model();
  const Scalar one = Scalar::unit(m);
  std::vector<Vec> out;
  auto push = [&](const Scalar& a, const Scalar& b) {
    if (out.size() < k) out.push_back(oplus(scale(a, x), scale(b, y)));
  };
  push(one, one);
  push(one, Scalar::zero(m));
  push(Scalar::zero(m), one);
  for (std::size_t i = 0; i < x.size() && out.size() < k; ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    Scalar t = residual(x[i], y[i]);
    if (t < one) push(one, t);
    else if (one < t) push(inverse(t), one);
  }
  const Scalar r = Scalar::finite(m, 2);
  for (long j = 1; out.size() < k; ++j) {
    Scalar s = power(r, -j);
    push(one, s);
    push(s, one);
  }
  return out;
}

std::vector<Vec> homogenize(const PRDecomposition& d) {
  std::vector<Vec> out;
  out.reserve(d.points.size() + d.rays.size());
  for (const auto& p : d.points) {
    require_dim(p, d.dim, "homogenize");
    out.push_back(append(p, Scalar::unit(d.model)));
  }
  for (const auto& r : d.rays) {
    require_dim(r, d.dim, "homogenize");
    out.push_back(append(r, Scalar::zero(d.model)));
  }
  return out;
}

SectionResult section_unity(const std::vector<Vec>& gens) {
  if (gens.empty()) throw std::invalid_argument("section_unity needs at least one generator");
  const Model m = gens.front().model();
  const std::size_t n1 = gens.front().size();
  if (n1 == 0) throw std::invalid_argument("section_unity needs dimension at least 1");
  SectionResult out{PRDecomposition{m, n1 - 1, {}, {}}, false};
  for (const auto& u : gens) {
    require_same(gens.front(), u);
    const Scalar& last = u[n1 - 1];
    if (last.is_zero()) {
      out.decomposition.rays.push_back(drop_last(u));
    } else {
      out.decomposition.points.push_back(drop_last(scale(inverse(last), u)));
    }
  }
  out.section_empty = out.decomposition.points.empty();
  return out;
}

bool pr_member(const Vec& x, const PRDecomposition& d) {
  require_dim(x, d.dim, "pr_member");
  if (d.points.empty()) return cone_member_fg(x, d.rays).member;
  return cone_member_fg(append(x, Scalar::unit(d.model)), homogenize(d)).member;
}

PRDecomposition gather(const std::vector<PRDecomposition>& parts, GatherMode mode) {
  if (parts.empty()) throw std::invalid_argument("gather needs at least one set");
  PRDecomposition out{parts.front().model, parts.front().dim, {}, {}};
  bool any_points = false;
  for (const auto& part : parts) any_points = any_points || !part.points.empty();
  for (std::size_t l = 0; l < parts.size(); ++l) {
    const auto& part = parts[l];
    if (part.model != out.model || part.dim != out.dim) {
      throw std::invalid_argument("gather: set " + std::to_string(l) + " has a different shape");
    }
    // An empty point list stands for {0}, whose support is empty.
    if (mode == GatherMode::SupportChecked && !part.points.empty()) {
      for (std::size_t zi = 0; zi < part.rays.size(); ++zi) {
        const IndexSet zs = support(part.rays[zi]);
        bool found = false;
        for (const auto& p : part.points) {
          if (support(p).subset_of(zs)) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw GatherError(l, zi, "gather: ray " + std::to_string(zi) + " of set " +
                                       std::to_string(l) + " (" + to_string(part.rays[zi]) +
                                       ") has no point with support inside its support");
        }
      }
    }
    if (part.points.empty() && any_points) out.points.push_back(Vec(out.model, out.dim));
    out.points.insert(out.points.end(), part.points.begin(), part.points.end());
    out.rays.insert(out.rays.end(), part.rays.begin(), part.rays.end());
  }
  return out;
}

std::vector<Scalar> lambda_ladder(Model model, long m) {
  std::vector<Scalar> out;
  const Scalar r = Scalar::finite(model, 2);
  for (long k = -m; k <= m; ++k) out.push_back(power(r, k));
  return out;
}

RecessionVerdict is_locally_recessive(const Vec& z, const Vec& x, const PRDecomposition& d,
                                      const std::vector<Scalar>& lambdas) {
  if (!pr_member(x, d)) {
    throw std::invalid_argument("is_locally_recessive: base point " + to_string(x) +
                                " is not in the set");
  }
  for (const auto& lambda : lambdas) {
    if (!pr_member(oplus(x, scale(lambda, z)), d)) return RecessionVerdict::No;
  }
  return RecessionVerdict::SampledYes;
}

}  // namespace tropical
