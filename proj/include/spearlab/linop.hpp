#pragma once

#include <span>
#include <string>
#include <vector>

#include "spearlab/space.hpp"

namespace spearlab {

/// A linear operator between two polyhedral spaces, stored as a
/// codomain.dim() x domain.dim() rational matrix.
class LinOp {
 public:
  /// Throws DimensionMismatch when the matrix shape does not fit the spaces.
  LinOp(SpacePtr domain, SpacePtr codomain, RatMatrix matrix, std::string label = {});

  static LinOp identity(SpacePtr space);
  static LinOp zero(SpacePtr domain, SpacePtr codomain);

  const PolyhedralSpace& domain() const { return *domain_; }
  const PolyhedralSpace& codomain() const { return *codomain_; }
  const SpacePtr& domain_ptr() const { return domain_; }
  const SpacePtr& codomain_ptr() const { return codomain_; }
  const RatMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }

  LinOp with_label(std::string label) const;

 private:
  SpacePtr domain_;
  SpacePtr codomain_;
  RatMatrix matrix_;
  std::string label_;
};

RatVector apply(const LinOp& op, const RatVector& x);

/// ‖G‖ = max over ext B_X of ‖Gv‖.
Rational operator_norm(const LinOp& op);

/// G*: Y* -> X*, the transposed matrix between the dual spaces.
LinOp adjoint(const LinOp& op);

/// x* ⊗ y : x -> x*(x) y.
LinOp rank_one(const RatVector& x_star, const RatVector& y, SpacePtr domain, SpacePtr codomain);

/// Block-diagonal operator between the corresponding direct sums.
LinOp block_sum(std::span<const LinOp> ops, SumKind kind);

/// b ∘ a. Throws SpaceMismatch unless a.codomain equals b.domain.
LinOp compose(const LinOp& b, const LinOp& a);

/// a + s·b between the same spaces. Throws SpaceMismatch.
LinOp add_scaled(const LinOp& a, const Rational& s, const LinOp& b);
LinOp scaled(const LinOp& a, const Rational& s);

bool same_spaces(const LinOp& a, const LinOp& b);

}  // namespace spearlab
