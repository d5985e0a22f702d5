#include "spearlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "spearlab/error.hpp"
#include "spearlab/parallel.hpp"

namespace spearlab::oracle {

namespace {

double fdot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec combine(const Vec& a, double sa, const Vec& b, double sb) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sa * a[i] + sb * b[i];
  return out;
}

double euclid(const Vec& a) { return std::sqrt(fdot(a, a)); }

FloatOp add_op(const FloatOp& a, double s, const FloatOp& b) {
  FloatOp out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = a.a[i] + s * b.a[i];
  return out;
}

void record(FuzzReport& report, double violation, std::vector<Vec> input) {
  if (report.worst_input.empty() || violation > report.max_violation) {
    report.max_violation = std::max(report.max_violation, violation);
    report.worst_input = std::move(input);
  }
}

void finish(FuzzReport& report) { report.passed = report.max_violation <= report.tolerance; }

}  // namespace

FloatSpace::FloatSpace(const PolyhedralSpace& space) : dim(space.dim()) {
  for (const auto& v : space.vertices()) vertices.push_back(to_double(v));
  for (const auto& f : space.dual_vertices()) dual_vertices.push_back(to_double(f));
}

double FloatSpace::norm(const Vec& x) const {
  double best = 0.0;
  for (const auto& f : dual_vertices) best = std::max(best, std::abs(fdot(f, x)));
  return best;
}

FloatOp::FloatOp(const RatMatrix& m) : rows(m.rows()), cols(m.cols()), a(m.rows() * m.cols()) {
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).to_double();
}

Vec FloatOp::apply(const Vec& x) const {
  Vec out(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += a[r * cols + c] * x[c];
  return out;
}

double operator_norm(const FloatOp& a, const FloatSpace& domain, const FloatSpace& codomain) {
  double best = 0.0;
  for (const auto& v : domain.vertices) best = std::max(best, codomain.norm(a.apply(v)));
  return best;
}

Vec sample_unit_vector(const FloatSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    Vec x(space.dim);
    for (auto& c : x) c = gauss(rng);
    double n = space.norm(x);
    if (n > 1e-12) {
      for (auto& c : x) c /= n;
      return x;
    }
  }
}

double spear_vector_violation(const FloatSpace& space, const Vec& z, const Vec& x) {
  double plus = space.norm(combine(z, 1.0, x, 1.0));
  double minus = space.norm(combine(z, 1.0, x, -1.0));
  return std::abs(2.0 - std::max(plus, minus));
}

FuzzReport fuzz_spear_vector_at(const PolyhedralSpace& space, const RatVector& z,
                                std::span<const Vec> points, double tol) {
  FloatSpace fs(space);
  const Vec zf = to_double(z);
  FuzzReport report;
  report.trials = points.size();
  report.tolerance = tol;
  for (const auto& x : points) record(report, spear_vector_violation(fs, zf, x), {x});
  finish(report);
  return report;
}

FuzzReport fuzz_spear_vector(const PolyhedralSpace& space, const RatVector& z, std::size_t trials,
                             double tol, std::uint64_t seed) {
  FloatSpace fs(space);
  std::mt19937_64 rng(seed);
  std::vector<Vec> points;
  points.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) points.push_back(sample_unit_vector(fs, rng));
  auto report = fuzz_spear_vector_at(space, z, points, tol);
  report.seed = seed;
  return report;
}

FuzzReport fuzz_spear_equation(const LinOp& g, std::size_t trials, double tol, std::uint64_t seed) {
  const FloatSpace dom(g.domain()), cod(g.codomain());
  const FloatOp gf(g.matrix());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Samples are drawn sequentially so the report does not depend on jobs().
  // Dense Gaussian T almost never exposes a failure confined to one summand
  // of a direct sum, since the other blocks dominate ‖T‖. So the samples
  // rotate through three shapes: dense; Gaussian on random row/column
  // supports; and face-structured rank-one x*⊗y, where x* is a random convex
  // combination of the dual vertices equal to 1 at a random ball vertex and
  // y one of the ball vertices on a random dual vertex's face.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> weight(1.0);
  auto mask = [&](std::size_t n) {
    const double p = unit(rng);
    std::vector<double> m(n);
    bool any = false;
    for (auto& e : m) any |= (e = unit(rng) < p ? 1.0 : 0.0) != 0.0;
    if (!any) m[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1.0;
    return m;
  };
  auto face_mixture = [&](const std::vector<Vec>& anchors, const std::vector<Vec>& pool) {
    const Vec& a = anchors[std::uniform_int_distribution<std::size_t>(0, anchors.size() - 1)(rng)];
    Vec out(pool.front().size(), 0.0);
    double total = 0.0;
    for (const auto& p : pool) {
      if (std::abs(fdot(a, p) - 1.0) > 1e-12) continue;
      const double w = weight(rng);
      total += w;
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += w * p[k];
    }
    for (auto& e : out) e /= total;
    return out;
  };
  std::vector<FloatOp> samples;
  samples.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    FloatOp t(gf.rows, gf.cols);
    if (i % 3 == 0) {
      for (auto& x : t.a) x = gauss(rng);
    } else if (i % 3 == 1) {
      const auto rm = mask(t.rows), cm = mask(t.cols);
      for (std::size_t r = 0; r < t.rows; ++r)
        for (std::size_t c = 0; c < t.cols; ++c) t.a[r * t.cols + c] = rm[r] * cm[c] * gauss(rng);
    } else {
      const Vec xs = face_mixture(dom.vertices, dom.dual_vertices);
      const Vec y = face_mixture(cod.dual_vertices, cod.vertices);
      const double s = std::abs(gauss(rng)) + 1e-3;
      for (std::size_t r = 0; r < t.rows; ++r)
        for (std::size_t c = 0; c < t.cols; ++c) t.a[r * t.cols + c] = s * y[r] * xs[c];
    }
    samples.push_back(std::move(t));
  }
  std::vector<double> violation(trials);
  parallel_for(trials, [&](std::size_t i) {
    const FloatOp& t = samples[i];
    double lhs = std::max(operator_norm(add_op(gf, 1.0, t), dom, cod),
                          operator_norm(add_op(gf, -1.0, t), dom, cod));
    violation[i] = std::abs(lhs - 1.0 - operator_norm(t, dom, cod));
  });

  FuzzReport report;
  report.trials = trials;
  report.tolerance = tol;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < samples[i].rows; ++r) {
      rows.emplace_back(samples[i].a.begin() + static_cast<std::ptrdiff_t>(r * samples[i].cols),
                        samples[i].a.begin() + static_cast<std::ptrdiff_t>((r + 1) * samples[i].cols));
    }
    record(report, violation[i], std::move(rows));
  }
  finish(report);
  return report;
}

namespace {

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& prefix,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(total);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t i = 0; i <= total; ++i) {
    prefix.push_back(i);
    compositions(parts, total - i, prefix, visit);
    prefix.pop_back();
  }
}

template <class F>
double golden_min(F&& f, double lo, double hi, int iterations) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return std::min({fc, fd, f(lo), f(hi)});
}

// min over the simplex conv(w[idx..]) scaled by `mass` and shifted by `base`.
double nested_min(const std::function<double(const Vec&)>& phi, const std::vector<Vec>& w,
                  std::size_t idx, const Vec& base, double mass, int iterations) {
  if (idx + 1 == w.size()) return phi(combine(base, 1.0, w[idx], mass));
  auto inner = [&](double a) {
    return nested_min(phi, w, idx + 1, combine(base, 1.0, w[idx], a), mass - a, iterations);
  };
  return golden_min(inner, 0.0, mass, iterations);
}

}  // namespace

double brute_numerical_index(const PolyhedralSpace& space, const RatVector& u,
                             std::size_t grid_density) {
  require(grid_density >= 1, ErrorCode::InvalidArgument, "grid density must be positive");
  std::vector<Vec> face;
  for (const auto& f : space.dual_vertices())
    if (dot(f, u) == Rational(1)) face.push_back(to_double(f));
  require(!face.empty(), ErrorCode::NotUnitNorm, "u is not a unit vector");
  auto phi = [&](const Vec& z) {
    double best = 0.0;
    for (const auto& f : face) best = std::max(best, std::abs(fdot(f, z)));
    return best;
  };

  const std::size_t d = space.dim();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : space.dual_vertex_representatives()) {
    std::vector<RatVector> on;
    for (const auto& v : space.vertices())
      if (dot(g, v) == Rational(1)) on.push_back(v);
    // Every d-subset of affinely independent facet vertices is a simplex in
    // the facet; together they cover it (Carathéodory).
    std::vector<std::size_t> pick;
    std::size_t simplices = 0;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (pick.size() == d) {
        std::vector<RatVector> rows;
        for (auto i : pick) {
          RatVector r = on[i];
          r.push_back(1);
          rows.push_back(std::move(r));
        }
        if (rank(rows, d + 1) != d) return;
        if (++simplices > 20000) throw ResourceError("facet cover exceeds 20000 simplices");
        std::vector<Vec> w;
        for (auto i : pick) w.push_back(to_double(on[i]));
        std::vector<std::size_t> prefix;
        compositions(d, grid_density, prefix, [&](const std::vector<std::size_t>& c) {
          Vec z(d, 0.0);
          for (std::size_t j = 0; j < d; ++j)
            z = combine(z, 1.0, w[j], static_cast<double>(c[j]) / static_cast<double>(grid_density));
          best = std::min(best, phi(z));
        });
        best = std::min(best, nested_min(phi, w, 0, Vec(d, 0.0), 1.0, 80));
        return;
      }
      for (std::size_t i = start; i < on.size(); ++i) {
        pick.push_back(i);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
  return best;
}

double distance_to_hull(const Vec& x, std::span<const Vec> points) {
  if (points.empty()) return std::numeric_limits<double>::infinity();
  std::vector<Vec> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(combine(p, 1.0, x, -1.0));
  std::size_t start = 0;
  for (std::size_t i = 1; i < q.size(); ++i)
    if (fdot(q[i], q[i]) < fdot(q[start], q[start])) start = i;
  Vec w = q[start];
  for (int iter = 0; iter < 20000; ++iter) {
    std::size_t s = 0;
    double best = fdot(q[0], w);
    for (std::size_t i = 1; i < q.size(); ++i) {
      double v = fdot(q[i], w);
      if (v < best) {
        best = v;
        s = i;
      }
    }
    const double gap = fdot(w, w) - best;
    if (gap <= 1e-15) break;
    Vec dir = combine(q[s], 1.0, w, -1.0);
    double dd = fdot(dir, dir);
    if (dd <= 0.0) break;
    double gamma = std::clamp(-fdot(w, dir) / dd, 0.0, 1.0);
    w = combine(w, 1.0, dir, gamma);
  }
  return euclid(w);
}

FuzzReport fuzz_lush_slices(const LinOp& g, std::size_t trials, double eps, std::uint64_t seed) {
  require(eps > 0.0, ErrorCode::NonpositiveEpsilon, "slice epsilon must be positive");
  const FloatSpace cod(g.codomain());
  const Rational eps_q = Rational::from_double(eps);
  const RatMatrix gt = g.matrix().transpose();
  const auto& xs = g.domain().vertices();
  const auto& fs = g.codomain().dual_vertices();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_x(0, xs.size() - 1);
  std::vector<std::size_t> x_index(trials);
  std::vector<Vec> ys(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    x_index[i] = pick_x(rng);
    ys[i] = sample_unit_vector(cod, rng);
  }

  std::vector<double> violation(trials);
  parallel_for(trials, [&](std::size_t i) {
    const RatVector& x0 = xs[x_index[i]];
    const Vec x0f = to_double(x0);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < fs.size() && best > 0.0; ++k) {
      if (fdot(cod.dual_vertices[k], ys[i]) <= 1.0 - eps) continue;
      auto slice = gslice_vertices(g.domain(), multiply(gt, fs[k]), eps_q);
      bool member = false;
      std::vector<Vec> hull;
      for (const auto& v : slice) {
        if (v == x0 || v == negate(x0)) member = true;
        hull.push_back(to_double(v));
        hull.push_back(to_double(negate(v)));
      }
      best = member ? 0.0 : std::min(best, distance_to_hull(x0f, hull));
    }
    violation[i] = best;
  });

  FuzzReport report;
  report.trials = trials;
  report.tolerance = eps;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    record(report, violation[i], {to_double(xs[x_index[i]]), ys[i]});
  }
  finish(report);
  return report;
}

double approx_vg_radius(const LinOp& g, const LinOp& t, double eps, std::size_t samples,
                        std::uint64_t seed) {
  const FloatSpace dom(g.domain()), cod(g.codomain());
  const FloatOp gf(g.matrix()), tf(t.matrix());
  std::vector<Vec> gx, tx;
  for (const auto& v : dom.vertices) {
    gx.push_back(gf.apply(v));
    tx.push_back(tf.apply(v));
  }
  std::vector<std::pair<std::size_t, std::size_t>> face_pairs;
  double best = 0.0;
  for (std::size_t i = 0; i < dom.vertices.size(); ++i) {
    for (std::size_t k = 0; k < cod.dual_vertices.size(); ++k) {
      const double level = fdot(cod.dual_vertices[k], gx[i]);
      if (level > 1.0 - eps) best = std::max(best, std::abs(fdot(cod.dual_vertices[k], tx[i])));
      if (level > 1.0 - 1e-12) face_pairs.emplace_back(i, k);
    }
  }
  if (face_pairs.empty()) return best;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_face(0, face_pairs.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_v(0, dom.vertices.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_f(0, cod.dual_vertices.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    auto [i, k] = face_pairs[pick_face(rng)];
    const std::size_t j = pick_v(rng), l = pick_f(rng);
    // Mixing weights concentrated near zero: a = U · 10^(-6 U').
    const double a = unit(rng) * std::pow(10.0, -6.0 * unit(rng));
    const double b = unit(rng) * std::pow(10.0, -6.0 * unit(rng));
    const Vec x_g = combine(gx[i], 1.0 - a, gx[j], a);
    const Vec x_t = combine(tx[i], 1.0 - a, tx[j], a);
    const Vec y = combine(cod.dual_vertices[k], 1.0 - b, cod.dual_vertices[l], b);
    if (fdot(y, x_g) > 1.0 - eps) best = std::max(best, std::abs(fdot(y, x_t)));
  }
  return best;
}

}  // namespace spearlab::oracle
