#include "spearlab/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <set>
#include <string>

#include "spearlab/error.hpp"
#include "spearlab/lp.hpp"

namespace spearlab {

void canonicalize(std::vector<RatVector>& points) {
  std::sort(points.begin(), points.end(), std::greater<>());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

namespace {

void check_dims(std::span<const RatVector> pts, std::size_t dim) {
  for (const auto& p : pts) {
    require(p.size() == dim, ErrorCode::DimensionMismatch,
            "point of length " + std::to_string(p.size()) + " in dimension " + std::to_string(dim));
  }
}

struct Ray {
  RatVector y;
  boost::dynamic_bitset<> zero;
};

// Inverse by Gauss-Jordan elimination; input is known to be nonsingular.
std::vector<RatVector> invert(std::vector<RatVector> a) {
  const std::size_t n = a.size();
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// Incremental row-echelon basis used to pick an initial nonsingular subsystem.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}
  std::size_t size() const { return rows_.size(); }

  bool try_add(const RatVector& v) {
    RatVector r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (r[c].is_zero()) continue;
      Rational f = r[c] / rows_[i][c];
      for (std::size_t k = 0; k < width_; ++k) r[k] -= f * rows_[i][k];
    }
    for (std::size_t c = 0; c < width_; ++c) {
      if (!r[c].is_zero()) {
        rows_.push_back(std::move(r));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t width_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Double description on the cone {y : h·y <= 0 for every row h}. Returns its
// extreme rays; the cone must be pointed.
std::vector<RatVector> cone_extreme_rays(std::vector<RatVector> rows, std::size_t width,
                                         const EnumerationCaps& caps) {
  for (auto& r : rows) r = primitive(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const RatVector& r) { return is_zero(r); }),
             rows.end());
  const std::size_t nrows = rows.size();

  EchelonBasis basis(width);
  std::vector<std::size_t> initial;
  for (std::size_t i = 0; i < nrows && initial.size() < width; ++i) {
    if (basis.try_add(rows[i])) initial.push_back(i);
  }
  require(initial.size() == width, ErrorCode::UnboundedBody,
          "constraint system has a nontrivial lineality space");

  std::vector<RatVector> a0;
  for (auto i : initial) a0.push_back(rows[i]);
  auto inv = invert(a0);

  std::vector<Ray> rays;
  for (std::size_t k = 0; k < width; ++k) {
    Ray ray{RatVector(width), boost::dynamic_bitset<>(nrows)};
    for (std::size_t r = 0; r < width; ++r) ray.y[r] = -inv[r][k];
    ray.y = primitive(ray.y);
    for (std::size_t j = 0; j < width; ++j)
      if (j != k) ray.zero.set(initial[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> is_initial(nrows, false);
  for (auto i : initial) is_initial[i] = true;
  const std::size_t min_common = width >= 2 ? width - 2 : 0;

  for (std::size_t j = 0; j < nrows; ++j) {
    if (is_initial[j]) continue;
    const auto& h = rows[j];
    std::vector<Rational> s(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(h, rays[r].y);
      if (s[r].sign() > 0) plus.push_back(r);
      else if (s[r].sign() < 0) minus.push_back(r);
      else zero.push_back(r);
    }
    if (plus.empty()) {
      for (auto r : zero) rays[r].zero.set(j);
      continue;
    }
    std::vector<Ray> next;
    next.reserve(minus.size() + zero.size());
    for (auto r : minus) next.push_back(rays[r]);
    for (auto r : zero) {
      next.push_back(rays[r]);
      next.back().zero.set(j);
    }
    for (auto p : plus) {
      for (auto n : minus) {
        boost::dynamic_bitset<> common = rays[p].zero & rays[n].zero;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray{RatVector(width), common};
        for (std::size_t k = 0; k < width; ++k) {
          ray.y[k] = s[p] * rays[n].y[k] - s[n] * rays[p].y[k];
        }
        ray.y = primitive(ray.y);
        ray.zero.set(j);
        next.push_back(std::move(ray));
        if (next.size() > caps.vertex_cap) {
          throw ResourceError("double description exceeded the vertex cap of " +
                              std::to_string(caps.vertex_cap));
        }
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

Facet normalized(Facet f) {
  if (f.offset.is_zero()) {
    f.normal = primitive(f.normal);
    return f;
  }
  Rational s = abs(f.offset);
  f.normal = scale(f.normal, Rational(1) / s);
  f.offset = f.offset / s;
  return f;
}

void sort_facets(std::vector<Facet>& facets) {
  std::sort(facets.begin(), facets.end(), std::greater<>());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
}

std::size_t affine_rank(const std::vector<const RatVector*>& pts, std::size_t dim) {
  std::vector<RatVector> rows;
  rows.reserve(pts.size());
  for (auto* p : pts) {
    RatVector r = *p;
    r.push_back(1);
    rows.push_back(std::move(r));
  }
  return rank(rows, dim + 1);
}

bool tight(const Facet& f, const RatVector& v) { return dot(f.normal, v) == f.offset; }

bool is_symmetric_set(const std::vector<RatVector>& sorted) {
  const std::size_t n = sorted.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != negate(sorted[n - 1 - i])) return false;
  }
  return true;
}

}  // namespace

std::vector<RatVector> enumerate_vertices(std::span<const Facet> inequalities, std::size_t dim,
                                          const EnumerationCaps& caps) {
  require(dim > 0, ErrorCode::InvalidArgument, "dimension must be positive");
  std::vector<RatVector> rows;
  rows.reserve(inequalities.size() + 1);
  for (const auto& f : inequalities) {
    require(f.normal.size() == dim, ErrorCode::DimensionMismatch,
            "facet normal of length " + std::to_string(f.normal.size()) + " in dimension " +
                std::to_string(dim));
    RatVector h = f.normal;
    h.push_back(-f.offset);
    rows.push_back(std::move(h));
  }
  RatVector t_nonneg(dim + 1);
  t_nonneg[dim] = -1;
  rows.push_back(t_nonneg);

  auto rays = cone_extreme_rays(std::move(rows), dim + 1, caps);
  std::vector<RatVector> vertices;
  bool recession = false;
  for (const auto& y : rays) {
    const Rational& t = y[dim];
    if (t.is_zero()) {
      recession = true;
      continue;
    }
    RatVector v(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(dim));
    vertices.push_back(scale(v, Rational(1) / t));
  }
  require(!vertices.empty(), ErrorCode::EmptyBody, "inequality system is infeasible");
  require(!recession, ErrorCode::UnboundedBody, "inequality system describes an unbounded body");
  canonicalize(vertices);
  return vertices;
}

std::vector<Facet> enumerate_facets(std::span<const RatVector> points, std::size_t dim,
                                    const EnumerationCaps& caps) {
  require(!points.empty(), ErrorCode::EmptyInput, "empty point set");
  check_dims(points, dim);
  std::vector<const RatVector*> ptrs;
  for (const auto& p : points) ptrs.push_back(&p);
  require(affine_rank(ptrs, dim) == dim + 1, ErrorCode::NotFullDimensional,
          "point set does not span the full dimension " + std::to_string(dim));

  RatVector centroid(dim);
  for (const auto& p : points) centroid = add(centroid, p);
  centroid = scale(centroid, Rational(1) / Rational(static_cast<long long>(points.size())));

  // Facets of conv(P - c) are the vertices of its polar {f : (p - c)·f <= 1}.
  std::vector<Facet> polar_system;
  polar_system.reserve(points.size());
  for (const auto& p : points) polar_system.push_back({sub(p, centroid), Rational(1)});
  auto normals = enumerate_vertices(polar_system, dim, caps);

  std::vector<Facet> facets;
  facets.reserve(normals.size());
  for (auto& f : normals) {
    Rational offset = Rational(1) + dot(f, centroid);
    facets.push_back(normalized({std::move(f), offset}));
  }
  sort_facets(facets);
  return facets;
}

Polytope::Polytope(std::size_t dim, std::vector<RatVector> vertices, std::vector<Facet> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets)) {
  symmetric_ = is_symmetric_set(vertices_);
  unit_offsets_ = std::all_of(facets_.begin(), facets_.end(),
                              [](const Facet& f) { return f.offset == Rational(1); });
}

Polytope Polytope::from_vertices(std::vector<RatVector> points, const EnumerationCaps& caps) {
  require(!points.empty(), ErrorCode::EmptyInput, "empty vertex list");
  const std::size_t dim = points.front().size();
  require(dim > 0, ErrorCode::InvalidArgument, "dimension must be positive");
  check_dims(points, dim);
  canonicalize(points);
  auto facets = enumerate_facets(points, dim, caps);

  std::vector<RatVector> vertices;
  for (auto& p : points) {
    std::vector<RatVector> normals;
    for (const auto& f : facets)
      if (tight(f, p)) normals.push_back(f.normal);
    if (rank(normals, dim) == dim) vertices.push_back(std::move(p));
  }
  return Polytope(dim, std::move(vertices), std::move(facets));
}

Polytope Polytope::from_facets(std::vector<Facet> facets, std::size_t dim,
                               const EnumerationCaps& caps) {
  require(!facets.empty(), ErrorCode::EmptyInput, "empty facet list");
  auto vertices = enumerate_vertices(facets, dim, caps);
  std::vector<const RatVector*> all;
  for (const auto& v : vertices) all.push_back(&v);
  require(affine_rank(all, dim) == dim + 1, ErrorCode::NotFullDimensional,
          "inequality system is not full-dimensional");

  std::vector<Facet> kept;
  for (auto& f : facets) {
    f = normalized(std::move(f));
    std::vector<const RatVector*> on;
    for (const auto& v : vertices)
      if (tight(f, v)) on.push_back(&v);
    if (on.size() >= dim && affine_rank(on, dim) == dim) kept.push_back(std::move(f));
  }
  sort_facets(kept);
  return Polytope(dim, std::move(vertices), std::move(kept));
}

Polytope Polytope::from_representations(std::vector<RatVector> vertices, std::vector<Facet> facets,
                                        std::size_t dim) {
  require(!vertices.empty() && !facets.empty(), ErrorCode::EmptyInput, "empty representation");
  check_dims(vertices, dim);
  for (const auto& f : facets) {
    require(f.normal.size() == dim, ErrorCode::DimensionMismatch, "facet normal length mismatch");
  }
  canonicalize(vertices);
  for (auto& f : facets) f = normalized(std::move(f));
  sort_facets(facets);

  std::vector<std::vector<std::size_t>> tight_facets(vertices.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    std::vector<const RatVector*> on;
    for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
      Rational val = dot(facets[fi].normal, vertices[vi]);
      require(val <= facets[fi].offset, ErrorCode::InvalidArgument,
              "vertex " + format(vertices[vi]) + " violates facet " + format(facets[fi].normal));
      if (val == facets[fi].offset) {
        on.push_back(&vertices[vi]);
        tight_facets[vi].push_back(fi);
      }
    }
    require(affine_rank(on, dim) == dim, ErrorCode::InvalidArgument,
            "facet " + format(facets[fi].normal) + " is not supported by a spanning vertex set");
  }
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    std::vector<RatVector> normals;
    for (auto fi : tight_facets[vi]) normals.push_back(facets[fi].normal);
    require(rank(normals, dim) == dim, ErrorCode::InvalidArgument,
            "point " + format(vertices[vi]) + " is not a vertex");
  }
  return Polytope(dim, std::move(vertices), std::move(facets));
}

bool Polytope::contains(const RatVector& x) const {
  require(x.size() == dim_, ErrorCode::DimensionMismatch,
          "point of length " + std::to_string(x.size()) + " in dimension " + std::to_string(dim_));
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x) <= f.offset; });
}

bool Polytope::origin_interior_by_lp() const {
  // maximize s  s.t.  sum l_i v_i = 0, sum l_i = 1, l_i >= s, s <= 1, l >= 0
  const std::size_t n = vertices_.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t k = 0; k < dim_; ++k) {
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = vertices_[i][k];
    cons.push_back({std::move(row), Relation::Equal, 0});
  }
  RatVector sum(n + 1, Rational(1));
  sum[n] = 0;
  cons.push_back({sum, Relation::Equal, 1});
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row(n + 1);
    row[i] = 1;
    row[n] = -1;
    cons.push_back({std::move(row), Relation::GreaterEqual, 0});
  }
  RatVector cap(n + 1);
  cap[n] = 1;
  cons.push_back({cap, Relation::LessEqual, 1});
  LpOptions opt;
  opt.nonnegative.assign(n + 1, true);
  opt.nonnegative[n] = false;
  auto res = solve_lp(cap, cons, Sense::Maximize, opt);
  return res.status == LpStatus::Optimal && res.value.sign() > 0;
}

Rational Polytope::gauge(const RatVector& x) const {
  require(unit_offsets_, ErrorCode::OriginNotInterior, "gauge requires the origin in the interior");
  require(x.size() == dim_, ErrorCode::DimensionMismatch, "gauge argument length mismatch");
  Rational best = 0;
  for (const auto& f : facets_) best = std::max(best, dot(f.normal, x));
  return best;
}

Polytope Polytope::polar() const {
  bool interior = symmetric_ ? true : origin_interior_by_lp();
  require(interior && unit_offsets_, ErrorCode::OriginNotInterior,
          "polar requires the origin strictly inside the body");
  std::vector<RatVector> pv;
  pv.reserve(facets_.size());
  for (const auto& f : facets_) pv.push_back(f.normal);
  std::vector<Facet> pf;
  pf.reserve(vertices_.size());
  for (const auto& v : vertices_) pf.push_back({v, Rational(1)});
  return Polytope(dim_, std::move(pv), std::move(pf));
}

}  // namespace spearlab
