#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "spearlab/linalg.hpp"

namespace spearlab {

/// The half-space normal·x <= offset.
struct Facet {
  RatVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

struct EnumerationCaps {
  std::size_t vertex_cap = 50'000;
  std::size_t pivot_cap = 1'000'000;
};

/// Sorts in decreasing lexicographic order and removes duplicates. For a
/// centrally symmetric set the first half is then exactly the set of
/// lexicographically positive representatives, and entry i of the second half
/// is the negation of entry (n - 1 - i).
void canonicalize(std::vector<RatVector>& points);

/// Double-description vertex enumeration for a bounded full-dimensional
/// polyhedron {x : normal·x <= offset}. Inequalities are inserted in
/// lexicographic order of their homogenized normals.
///
/// Throws UnboundedBody, EmptyBody, ResourceError (vertex cap).
std::vector<RatVector> enumerate_vertices(std::span<const Facet> inequalities, std::size_t dim,
                                          const EnumerationCaps& caps = {});

/// Facets of conv(points). Offsets are normalized to +1 or -1 (or the normal
/// is made primitive when the facet passes through the origin).
///
/// Throws NotFullDimensional, ResourceError.
std::vector<Facet> enumerate_facets(std::span<const RatVector> points, std::size_t dim,
                                    const EnumerationCaps& caps = {});

/// A full-dimensional convex polytope held in both V- and H-representation.
/// Vertices are irredundant and canonically ordered (see canonicalize);
/// facets are irredundant, sorted the same way by normal.
class Polytope {
 public:
  static Polytope from_vertices(std::vector<RatVector> points, const EnumerationCaps& caps = {});
  static Polytope from_facets(std::vector<Facet> facets, std::size_t dim,
                              const EnumerationCaps& caps = {});
  /// Adopts representations known to describe the same body. Consistency is
  /// validated: every vertex satisfies every facet, every facet is tight on an
  /// affinely spanning vertex subset and every vertex is tight on a spanning
  /// facet subset. Throws InvalidArgument otherwise.
  static Polytope from_representations(std::vector<RatVector> vertices, std::vector<Facet> facets,
                                       std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool contains(const RatVector& x) const;
  bool is_centrally_symmetric() const { return symmetric_; }
  /// LP certificate that some strictly positive convex combination of the
  /// vertices is the origin (together with full-dimensionality this places
  /// the origin in the interior).
  bool origin_interior_by_lp() const;

  /// Minkowski gauge. Requires the origin in the interior.
  Rational gauge(const RatVector& x) const;

  /// Polar body {f : f·x <= 1 for all x}. Throws OriginNotInterior.
  Polytope polar() const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  Polytope(std::size_t dim, std::vector<RatVector> vertices, std::vector<Facet> facets);

  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<Facet> facets_;
  bool symmetric_ = false;
  bool unit_offsets_ = false;
};

}  // namespace spearlab
