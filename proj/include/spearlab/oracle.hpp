#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spearlab/linop.hpp"

/// Floating-point, sampling-based checks of the exact deciders at the level of
/// the defining equations. Results gate regressions; they never certify.
namespace spearlab::oracle {

using Vec = std::vector<double>;

inline constexpr double kEqualityTolerance = 1e-9;
inline constexpr double kOptimizationTolerance = 1e-6;

struct FuzzReport {
  std::size_t trials = 0;
  double max_violation = 0.0;
  std::vector<Vec> worst_input;
  double tolerance = 0.0;
  bool passed = true;
  std::uint64_t seed = 0;
};

/// Float copy of a space: vertex and dual-vertex coordinates.
struct FloatSpace {
  std::size_t dim = 0;
  std::vector<Vec> vertices;
  std::vector<Vec> dual_vertices;

  explicit FloatSpace(const PolyhedralSpace& space);
  double norm(const Vec& x) const;
};

struct FloatOp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;  // row-major

  explicit FloatOp(const RatMatrix& m);
  FloatOp(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  Vec apply(const Vec& x) const;
};

/// ‖A‖ from the vertices of the domain ball, in floating point.
double operator_norm(const FloatOp& a, const FloatSpace& domain, const FloatSpace& codomain);

/// Gaussian direction scaled onto the unit sphere of the space.
Vec sample_unit_vector(const FloatSpace& space, std::mt19937_64& rng);

/// Violation |2 - max(‖z + x‖, ‖z - x‖)| at a single unit x.
double spear_vector_violation(const FloatSpace& space, const Vec& z, const Vec& x);

FuzzReport fuzz_spear_vector(const PolyhedralSpace& space, const RatVector& z, std::size_t trials,
                             double tol = kEqualityTolerance, std::uint64_t seed = 1);
/// Same check at caller-supplied unit vectors.
FuzzReport fuzz_spear_vector_at(const PolyhedralSpace& space, const RatVector& z,
                                std::span<const Vec> points, double tol = kEqualityTolerance);

/// |max(‖G + T‖, ‖G - T‖) - 1 - ‖T‖| over Gaussian T: dense, with random
/// row/column supports, and rank-one built on faces of the two balls.
FuzzReport fuzz_spear_equation(const LinOp& g, std::size_t trials, double tol = kEqualityTolerance,
                               std::uint64_t seed = 1);

/// min over S_X of max over Face(B_{X*}, u) of |f·z|, by a barycentric grid on
/// a simplicial cover of every facet followed by nested golden-section search
/// (the objective is convex on each simplex).
double brute_numerical_index(const PolyhedralSpace& space, const RatVector& u,
                             std::size_t grid_density);

/// For sampled x0 in ext B_X and unit y in Y, looks for a dual vertex y* with
/// y*·y > 1 - eps such that x0 is within eps (Euclidean) of
/// aconv(gslice_vertices(X, G*y*, eps)). Throws NonpositiveEpsilon.
FuzzReport fuzz_lush_slices(const LinOp& g, std::size_t trials, double eps, std::uint64_t seed = 1);

/// Sampled sup of |y*(Tx)| over x ∈ B_X, y* ∈ B_{Y*} with y*(Gx) > 1 - eps,
/// drawn from segments between extreme points near the face.
double approx_vg_radius(const LinOp& g, const LinOp& t, double eps, std::size_t samples,
                        std::uint64_t seed = 1);

/// Euclidean distance from x to the convex hull of points (Frank-Wolfe).
double distance_to_hull(const Vec& x, std::span<const Vec> points);

}  // namespace spearlab::oracle
