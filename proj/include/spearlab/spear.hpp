#pragma once

#include <string>
#include <vector>

#include "spearlab/space.hpp"

namespace spearlab {

enum class WitnessKind {
  DualVertex,     // an element of ext B_{X*}
  BallVertex,     // an element of ext B_X
  Vector,         // any other vector (a minimizer, an image G·x, ...)
};

std::string to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::Vector;
  RatVector vector;
  Rational value;
};

/// A decision together with exact witnesses that can be re-checked by direct
/// evaluation.
struct Certificate {
  bool decision = false;
  std::string criterion;
  std::vector<Witness> witnesses;
};

namespace criterion {
inline constexpr const char* kSpearVector = "ext-dual-modulus-one";
inline constexpr const char* kSpearSet = "gface-ext-dual";
inline constexpr const char* kDualFace = "aconv-face";
inline constexpr const char* kDomainIv = "fd-dom-iv";
inline constexpr const char* kDomainV = "fd-dom-v";
inline constexpr const char* kCodomainV = "fd-cod-v";
inline constexpr const char* kRankOne = "rank-one";
inline constexpr const char* kVgFace = "vg-face";
inline constexpr const char* kRankOneSweep = "adp-rank-one-sweep";
}  // namespace criterion

/// z is a spear vector iff |f·z| = 1 for every f in ext B_{X*}. On failure the
/// witness is the first offending dual vertex (canonical order) and its value
/// f·z. Throws NotUnitNorm unless ‖z‖ = 1 exactly.
Certificate is_spear_vector(const PolyhedralSpace& space, const RatVector& z);

/// Every spear vector is a ball vertex, so this filters ext B_X.
std::vector<RatVector> spear_vectors(const PolyhedralSpace& space);

/// Finite F ⊂ B_X is a spear set iff max over z in F of |f·z| = 1 for every
/// f in ext B_{X*}. Throws EmptyInput, ElementOutsideBall.
Certificate is_spear_set(const PolyhedralSpace& space, const std::vector<RatVector>& set);

/// B_X = aconv Face(S_X, z*), decided on vertices: every ball vertex is ± a
/// face vertex. Throws NotUnitDualNorm.
Certificate face_generates_ball(const PolyhedralSpace& space, const RatVector& z_star);

/// Re-evaluates every witness of an is_spear_vector certificate. Returns false
/// on any inconsistency.
bool verify_spear_vector(const PolyhedralSpace& space, const RatVector& z, const Certificate& cert);
bool verify_spear_set(const PolyhedralSpace& space, const std::vector<RatVector>& set,
                      const Certificate& cert);

}  // namespace spearlab
