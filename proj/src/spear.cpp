#include "spearlab/spear.hpp"

#include <algorithm>
#include <stdexcept>

#include "spearlab/error.hpp"

namespace spearlab {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::DualVertex: return "dual_vertex";
    case WitnessKind::BallVertex: return "ball_vertex";
    case WitnessKind::Vector: return "vector";
  }
  return "vector";
}

namespace {

bool modulus_one(const Rational& r) { return abs(r) == Rational(1); }

bool is_listed(const std::vector<RatVector>& list, const RatVector& v) {
  // Lists are sorted in decreasing lexicographic order.
  return std::binary_search(list.begin(), list.end(), v, std::greater<>());
}

}  // namespace

Certificate is_spear_vector(const PolyhedralSpace& space, const RatVector& z) {
  Rational n = space.norm(z);
  require(n == Rational(1), ErrorCode::NotUnitNorm,
          "vector " + format(z) + " has norm " + n.to_string() + ", not 1");
  Certificate cert{true, criterion::kSpearVector, {}};
  for (const auto& f : space.dual_vertex_representatives()) {
    Rational value = dot(f, z);
    if (!modulus_one(value)) {
      cert.decision = false;
      cert.witnesses.push_back({WitnessKind::DualVertex, f, value});
      return cert;
    }
  }
  if (!is_listed(space.vertices(), z)) {
    throw std::logic_error("spear vector " + format(z) + " is not a vertex of the ball");
  }
  return cert;
}

std::vector<RatVector> spear_vectors(const PolyhedralSpace& space) {
  std::vector<RatVector> out;
  for (const auto& v : space.vertices())
    if (is_spear_vector(space, v).decision) out.push_back(v);
  return out;
}

Certificate is_spear_set(const PolyhedralSpace& space, const std::vector<RatVector>& set) {
  require(!set.empty(), ErrorCode::EmptyInput, "spear set candidate is empty");
  for (const auto& z : set) {
    require(space.norm(z) <= Rational(1), ErrorCode::ElementOutsideBall,
            "element " + format(z) + " lies outside the unit ball");
  }
  Certificate cert{true, criterion::kSpearSet, {}};
  for (const auto& f : space.dual_vertex_representatives()) {
    Rational best = 0;
    for (const auto& z : set) best = std::max(best, abs(dot(f, z)));
    if (best != Rational(1)) {
      cert.decision = false;
      cert.witnesses.push_back({WitnessKind::DualVertex, f, best});
      return cert;
    }
  }
  return cert;
}

Certificate face_generates_ball(const PolyhedralSpace& space, const RatVector& z_star) {
  Face face = face_of_ball(space, z_star);
  std::vector<RatVector> sym = face.vertices;
  for (const auto& w : face.vertices) sym.push_back(negate(w));
  canonicalize(sym);

  // An extreme point of B_X lying in aconv(F) must be ± an element of F.
  Certificate cert{true, criterion::kDualFace, {}};
  for (const auto& v : space.vertex_representatives()) {
    if (!is_listed(sym, v)) {
      cert.decision = false;
      cert.witnesses.push_back({WitnessKind::BallVertex, v, dot(z_star, v)});
      break;
    }
  }
  auto dual = dual_space(space);
  if (is_spear_vector(*dual, z_star).decision != cert.decision) {
    throw std::logic_error("face generation disagrees with the spear decision in the dual");
  }
  return cert;
}

bool verify_spear_vector(const PolyhedralSpace& space, const RatVector& z, const Certificate& cert) {
  if (space.norm(z) != Rational(1)) return false;
  if (cert.decision) {
    if (!cert.witnesses.empty()) return false;
    for (const auto& f : space.dual_vertices())
      if (!modulus_one(dot(f, z))) return false;
    return true;
  }
  if (cert.witnesses.size() != 1) return false;
  const auto& w = cert.witnesses.front();
  return w.kind == WitnessKind::DualVertex && is_listed(space.dual_vertices(), w.vector) &&
         dot(w.vector, z) == w.value && !modulus_one(w.value);
}

bool verify_spear_set(const PolyhedralSpace& space, const std::vector<RatVector>& set,
                      const Certificate& cert) {
  auto best_for = [&](const RatVector& f) {
    Rational best = 0;
    for (const auto& z : set) best = std::max(best, abs(dot(f, z)));
    return best;
  };
  if (cert.decision) {
    for (const auto& f : space.dual_vertices())
      if (best_for(f) != Rational(1)) return false;
    return true;
  }
  if (cert.witnesses.size() != 1) return false;
  const auto& w = cert.witnesses.front();
  return is_listed(space.dual_vertices(), w.vector) && best_for(w.vector) == w.value &&
         w.value != Rational(1);
}

}  // namespace spearlab
