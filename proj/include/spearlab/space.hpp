#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "spearlab/polytope.hpp"

namespace spearlab {

/// A real normed space whose unit ball is a centrally symmetric polytope.
///
/// The ball vertices are ext B_X and the facet normals (offsets normalized to
/// one) are ext B_{X*}. Both lists follow the canonical decreasing
/// lexicographic order, so the first half of each list holds one
/// representative of every +/- pair.
class PolyhedralSpace {
 public:
  /// Symmetrizes V into V ∪ -V and builds the ball conv(V ∪ -V).
  static PolyhedralSpace from_vertices(std::vector<RatVector> vertices, std::string label,
                                       const EnumerationCaps& caps = {});
  /// Builds the ball {x : |n·x| <= 1 for every listed normal n}.
  static PolyhedralSpace from_facet_normals(std::vector<RatVector> normals, std::string label,
                                            const EnumerationCaps& caps = {});
  /// Adopts an existing ball; it must be centrally symmetric with unit offsets.
  static PolyhedralSpace from_ball(Polytope ball, std::string label);

  std::size_t dim() const { return ball_.dim(); }
  const Polytope& ball() const { return ball_; }
  const std::string& label() const { return label_; }
  const std::vector<RatVector>& vertices() const { return ball_.vertices(); }
  const std::vector<RatVector>& dual_vertices() const { return dual_vertices_; }

  /// Lexicographically positive representatives of ext B_X.
  std::span<const RatVector> vertex_representatives() const;
  /// Lexicographically positive representatives of ext B_{X*}.
  std::span<const RatVector> dual_vertex_representatives() const;

  /// max over ext B_{X*} of |f·x|.
  Rational norm(const RatVector& x) const;
  /// Norm of a functional in X*: max over ext B_X of |f·v|.
  Rational dual_norm(const RatVector& f) const;

  friend bool operator==(const PolyhedralSpace& a, const PolyhedralSpace& b) {
    return a.ball_ == b.ball_;
  }

 private:
  PolyhedralSpace(Polytope ball, std::string label);

  Polytope ball_;
  std::vector<RatVector> dual_vertices_;
  std::string label_;
};

using SpacePtr = std::shared_ptr<const PolyhedralSpace>;

SpacePtr make_space(std::vector<RatVector> vertices, std::string label,
                    const EnumerationCaps& caps = {});
SpacePtr make_space_from_facets(std::vector<RatVector> normals, std::string label,
                                const EnumerationCaps& caps = {});

SpacePtr dual_space(const PolyhedralSpace& space);
inline SpacePtr dual_space(const SpacePtr& space) { return dual_space(*space); }

/// Face(B_X, f): the ball vertices on which f attains the value 1.
struct Face {
  RatVector functional;
  std::vector<std::size_t> vertex_indices;  // into space.vertices()
  std::vector<RatVector> vertices;
};

/// Throws NotUnitDualNorm unless the dual norm of the functional is exactly 1.
Face face_of_ball(const PolyhedralSpace& space, const RatVector& functional);

/// Ball vertices v with functional·v > 1 - epsilon. Throws NonpositiveEpsilon.
std::vector<RatVector> gslice_vertices(const PolyhedralSpace& space, const RatVector& functional,
                                       const Rational& epsilon);

enum class SumKind { Infinity, One };

/// X_1 ⊕∞ ... (max of component norms) or X_1 ⊕₁ ... (sum of component norms).
/// Throws EmptyInput for fewer than two summands.
SpacePtr direct_sum(std::span<const SpacePtr> spaces, SumKind kind,
                    const EnumerationCaps& caps = {});

/// Built-in spaces: "l1:n", "linf:n", "example52_X1", "example52_X2",
/// "example52_Y1", "example52_Y2", "hexagon". Throws UnknownSpec.
SpacePtr standard_space(const std::string& name);

/// The comma-free names accepted by standard_space (l1/linf shown as "l1:n").
std::vector<std::string> standard_space_names();

/// z / ‖z‖ (the norm of a rational vector is rational, so this is exact).
RatVector normalize(const PolyhedralSpace& space, const RatVector& z);

/// Splits a concatenated vector into the summand blocks of sizes `dims`.
std::vector<RatVector> split_blocks(const RatVector& x, std::span<const std::size_t> dims);

}  // namespace spearlab
