#include "spearlab/space.hpp"

#include <algorithm>
#include <charconv>

#include "spearlab/error.hpp"

namespace spearlab {

namespace {

std::vector<RatVector> symmetrized(std::vector<RatVector> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) pts.push_back(negate(pts[i]));
  pts.erase(std::remove_if(pts.begin(), pts.end(), [](const RatVector& v) { return is_zero(v); }),
            pts.end());
  return pts;
}

std::size_t consistent_dim(const std::vector<RatVector>& pts) {
  require(!pts.empty(), ErrorCode::EmptyInput, "empty list");
  const std::size_t dim = pts.front().size();
  require(dim > 0, ErrorCode::InvalidArgument, "dimension must be positive");
  for (const auto& p : pts) {
    require(p.size() == dim, ErrorCode::DimensionMismatch, "inconsistent vector lengths");
  }
  return dim;
}

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  if (label.find_first_of("(), ") != std::string::npos) return "(" + label + ")*";
  return label + "*";
}

}  // namespace

PolyhedralSpace::PolyhedralSpace(Polytope ball, std::string label)
    : ball_(std::move(ball)), label_(std::move(label)) {
  require(!ball_.facets().empty(), ErrorCode::EmptyInput, "ball has no facets");
  require(ball_.is_centrally_symmetric(), ErrorCode::InvalidArgument,
          "unit ball must be centrally symmetric");
  dual_vertices_.reserve(ball_.facets().size());
  for (const auto& f : ball_.facets()) {
    require(f.offset == Rational(1), ErrorCode::OriginNotInterior,
            "unit ball must contain the origin in its interior");
    dual_vertices_.push_back(f.normal);
  }
}

PolyhedralSpace PolyhedralSpace::from_vertices(std::vector<RatVector> vertices, std::string label,
                                               const EnumerationCaps& caps) {
  const std::size_t dim = consistent_dim(vertices);
  auto pts = symmetrized(std::move(vertices));
  require(!pts.empty(), ErrorCode::NotFullDimensional, "only the zero vector was given");
  require(rank(pts, dim) == dim, ErrorCode::NotFullDimensional,
          "vertices do not span dimension " + std::to_string(dim));
  return PolyhedralSpace(Polytope::from_vertices(std::move(pts), caps), std::move(label));
}

PolyhedralSpace PolyhedralSpace::from_facet_normals(std::vector<RatVector> normals,
                                                    std::string label,
                                                    const EnumerationCaps& caps) {
  const std::size_t dim = consistent_dim(normals);
  auto ns = symmetrized(std::move(normals));
  require(!ns.empty() && rank(ns, dim) == dim, ErrorCode::UnboundedBody,
          "facet normals do not span dimension " + std::to_string(dim) +
              "; the body is unbounded");
  std::vector<Facet> facets;
  facets.reserve(ns.size());
  for (auto& n : ns) facets.push_back({std::move(n), Rational(1)});
  return PolyhedralSpace(Polytope::from_facets(std::move(facets), dim, caps), std::move(label));
}

PolyhedralSpace PolyhedralSpace::from_ball(Polytope ball, std::string label) {
  return PolyhedralSpace(std::move(ball), std::move(label));
}

std::span<const RatVector> PolyhedralSpace::vertex_representatives() const {
  return std::span<const RatVector>(vertices()).first(vertices().size() / 2);
}

std::span<const RatVector> PolyhedralSpace::dual_vertex_representatives() const {
  return std::span<const RatVector>(dual_vertices_).first(dual_vertices_.size() / 2);
}

Rational PolyhedralSpace::norm(const RatVector& x) const {
  require(x.size() == dim(), ErrorCode::DimensionMismatch,
          "vector of length " + std::to_string(x.size()) + " in space '" + label_ + "' of dimension " +
              std::to_string(dim()));
  Rational best = 0;
  for (const auto& f : dual_vertex_representatives()) best = std::max(best, abs(dot(f, x)));
  return best;
}

Rational PolyhedralSpace::dual_norm(const RatVector& f) const {
  require(f.size() == dim(), ErrorCode::DimensionMismatch,
          "functional of length " + std::to_string(f.size()) + " in space '" + label_ +
              "' of dimension " + std::to_string(dim()));
  Rational best = 0;
  for (const auto& v : vertex_representatives()) best = std::max(best, abs(dot(f, v)));
  return best;
}

SpacePtr make_space(std::vector<RatVector> vertices, std::string label, const EnumerationCaps& caps) {
  return std::make_shared<const PolyhedralSpace>(
      PolyhedralSpace::from_vertices(std::move(vertices), std::move(label), caps));
}

SpacePtr make_space_from_facets(std::vector<RatVector> normals, std::string label,
                                const EnumerationCaps& caps) {
  return std::make_shared<const PolyhedralSpace>(
      PolyhedralSpace::from_facet_normals(std::move(normals), std::move(label), caps));
}

SpacePtr dual_space(const PolyhedralSpace& space) {
  return std::make_shared<const PolyhedralSpace>(
      PolyhedralSpace::from_ball(space.ball().polar(), dual_label(space.label())));
}

Face face_of_ball(const PolyhedralSpace& space, const RatVector& functional) {
  Rational dn = space.dual_norm(functional);
  require(dn == Rational(1), ErrorCode::NotUnitDualNorm,
          "functional " + format(functional) + " has dual norm " + dn.to_string() + ", not 1");
  Face face{functional, {}, {}};
  const auto& verts = space.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (dot(functional, verts[i]) == Rational(1)) {
      face.vertex_indices.push_back(i);
      face.vertices.push_back(verts[i]);
    }
  }
  return face;
}

std::vector<RatVector> gslice_vertices(const PolyhedralSpace& space, const RatVector& functional,
                                       const Rational& epsilon) {
  require(epsilon.sign() > 0, ErrorCode::NonpositiveEpsilon, "slice epsilon must be positive");
  require(functional.size() == space.dim(), ErrorCode::DimensionMismatch,
          "functional length mismatch");
  const Rational level = Rational(1) - epsilon;
  std::vector<RatVector> out;
  for (const auto& v : space.vertices())
    if (dot(functional, v) > level) out.push_back(v);
  return out;
}

namespace {

std::vector<RatVector> embeddings(std::span<const SpacePtr> spaces,
                                  const std::vector<RatVector>& (PolyhedralSpace::*list)() const,
                                  std::size_t total) {
  std::vector<RatVector> out;
  std::size_t offset = 0;
  for (const auto& s : spaces) {
    for (const auto& v : ((*s).*list)()) {
      RatVector e(total);
      std::copy(v.begin(), v.end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
      out.push_back(std::move(e));
    }
    offset += s->dim();
  }
  return out;
}

std::vector<RatVector> products(std::span<const SpacePtr> spaces,
                                const std::vector<RatVector>& (PolyhedralSpace::*list)() const,
                                std::size_t cap) {
  std::size_t count = 1;
  for (const auto& s : spaces) {
    count *= ((*s).*list)().size();
    if (count > cap) {
      throw ResourceError("direct sum would have more than " + std::to_string(cap) + " vertices");
    }
  }
  std::vector<RatVector> out{RatVector{}};
  for (const auto& s : spaces) {
    std::vector<RatVector> next;
    next.reserve(out.size() * ((*s).*list)().size());
    for (const auto& prefix : out) {
      for (const auto& v : ((*s).*list)()) {
        RatVector e = prefix;
        e.insert(e.end(), v.begin(), v.end());
        next.push_back(std::move(e));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

SpacePtr direct_sum(std::span<const SpacePtr> spaces, SumKind kind, const EnumerationCaps& caps) {
  require(spaces.size() >= 2, ErrorCode::EmptyInput, "direct sum needs at least two summands");
  std::size_t total = 0;
  std::string label = kind == SumKind::Infinity ? "sum_inf(" : "sum_one(";
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    total += spaces[i]->dim();
    label += (i ? "," : "") + spaces[i]->label();
  }
  label += ")";

  std::vector<RatVector> vertices, normals;
  if (kind == SumKind::Infinity) {
    vertices = products(spaces, &PolyhedralSpace::vertices, caps.vertex_cap);
    normals = embeddings(spaces, &PolyhedralSpace::dual_vertices, total);
  } else {
    vertices = embeddings(spaces, &PolyhedralSpace::vertices, total);
    normals = products(spaces, &PolyhedralSpace::dual_vertices, caps.vertex_cap);
  }
  std::vector<Facet> facets;
  facets.reserve(normals.size());
  for (auto& n : normals) facets.push_back({std::move(n), Rational(1)});
  return std::make_shared<const PolyhedralSpace>(PolyhedralSpace::from_ball(
      Polytope::from_representations(std::move(vertices), std::move(facets), total), label));
}

namespace {

std::vector<RatVector> sign_vectors(std::size_t n) {
  std::vector<RatVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? -1 : 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatVector> signed_basis(std::size_t n) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(unit_vector(n, i));
    out.push_back(negate(unit_vector(n, i)));
  }
  return out;
}

SpacePtr polyhedral_lp(std::size_t n, bool one, const std::string& label) {
  require(n >= 1, ErrorCode::UnknownSpec, "dimension must be at least 1");
  require(n <= 8, ErrorCode::UnknownSpec, "l1/linf fixtures are limited to n <= 8");
  auto cross = signed_basis(n);
  auto cube = sign_vectors(n);
  std::vector<RatVector>& verts = one ? cross : cube;
  std::vector<RatVector>& normals = one ? cube : cross;
  std::vector<Facet> facets;
  for (auto& f : normals) facets.push_back({f, Rational(1)});
  return std::make_shared<const PolyhedralSpace>(PolyhedralSpace::from_ball(
      Polytope::from_representations(verts, std::move(facets), n), label));
}

bool parse_indexed(const std::string& name, const std::string& prefix, std::size_t& n) {
  if (name.rfind(prefix, 0) != 0) return false;
  const char* b = name.data() + prefix.size();
  const char* e = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(b, e, n);
  return ec == std::errc() && ptr == e && b != e;
}

}  // namespace

SpacePtr standard_space(const std::string& name) {
  std::size_t n = 0;
  if (parse_indexed(name, "l1:", n)) return polyhedral_lp(n, true, name);
  if (parse_indexed(name, "linf:", n)) return polyhedral_lp(n, false, name);
  if (name == "example52_X1") {
    std::vector<RatVector> verts;
    for (auto& v : sign_vectors(4)) {
      bool constant = std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v[0]; });
      if (!constant) verts.push_back(std::move(v));
    }
    return make_space(std::move(verts), name);
  }
  if (name == "example52_X2") return polyhedral_lp(4, true, name);
  if (name == "example52_Y1") return polyhedral_lp(4, false, name);
  if (name == "example52_Y2") {
    auto d = dual_space(*standard_space("example52_X1"));
    return std::make_shared<const PolyhedralSpace>(PolyhedralSpace::from_ball(d->ball(), name));
  }
  if (name == "hexagon") {
    return make_space({{1, 0}, {Rational(1, 2), 1}, {Rational(-1, 2), 1}}, name);
  }
  fail(ErrorCode::UnknownSpec, "unknown space fixture '" + name + "'");
}

std::vector<std::string> standard_space_names() {
  return {"l1:n", "linf:n", "example52_X1", "example52_X2", "example52_Y1", "example52_Y2",
          "hexagon"};
}

RatVector normalize(const PolyhedralSpace& space, const RatVector& z) {
  Rational n = space.norm(z);
  require(!n.is_zero(), ErrorCode::InvalidArgument, "cannot normalize the zero vector");
  return scale(z, Rational(1) / n);
}

std::vector<RatVector> split_blocks(const RatVector& x, std::span<const std::size_t> dims) {
  std::size_t total = 0;
  for (auto d : dims) total += d;
  require(total == x.size(), ErrorCode::DimensionMismatch, "block sizes do not add up");
  std::vector<RatVector> out;
  std::size_t off = 0;
  for (auto d : dims) {
    out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(off),
                     x.begin() + static_cast<std::ptrdiff_t>(off + d));
    off += d;
  }
  return out;
}

}  // namespace spearlab
