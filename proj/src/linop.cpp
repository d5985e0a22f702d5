#include "spearlab/linop.hpp"

#include <algorithm>

#include "spearlab/error.hpp"

namespace spearlab {

LinOp::LinOp(SpacePtr domain, SpacePtr codomain, RatMatrix matrix, std::string label)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      matrix_(std::move(matrix)),
      label_(std::move(label)) {
  require(domain_ && codomain_, ErrorCode::InvalidArgument, "operator spaces must be set");
  require(matrix_.rows() == codomain_->dim() && matrix_.cols() == domain_->dim(),
          ErrorCode::DimensionMismatch,
          "matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
              " but the operator maps dimension " + std::to_string(domain_->dim()) + " to " +
              std::to_string(codomain_->dim()));
}

LinOp LinOp::identity(SpacePtr space) {
  const std::size_t n = space->dim();
  return LinOp(space, space, RatMatrix::identity(n), "Id(" + space->label() + ")");
}

LinOp LinOp::zero(SpacePtr domain, SpacePtr codomain) {
  RatMatrix m(codomain->dim(), domain->dim());
  return LinOp(std::move(domain), std::move(codomain), std::move(m), "0");
}

LinOp LinOp::with_label(std::string label) const {
  LinOp copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

RatVector apply(const LinOp& op, const RatVector& x) {
  require(x.size() == op.domain().dim(), ErrorCode::DimensionMismatch,
          "vector of length " + std::to_string(x.size()) + " applied to an operator on dimension " +
              std::to_string(op.domain().dim()));
  return multiply(op.matrix(), x);
}

Rational operator_norm(const LinOp& op) {
  Rational best = 0;
  for (const auto& v : op.domain().vertex_representatives()) {
    best = std::max(best, op.codomain().norm(multiply(op.matrix(), v)));
  }
  return best;
}

LinOp adjoint(const LinOp& op) {
  std::string label = op.label().empty() ? std::string{} : op.label() + "*";
  return LinOp(dual_space(op.codomain()), dual_space(op.domain()), op.matrix().transpose(), label);
}

LinOp rank_one(const RatVector& x_star, const RatVector& y, SpacePtr domain, SpacePtr codomain) {
  require(x_star.size() == domain->dim(), ErrorCode::DimensionMismatch,
          "functional length does not match the domain dimension");
  require(y.size() == codomain->dim(), ErrorCode::DimensionMismatch,
          "vector length does not match the codomain dimension");
  return LinOp(std::move(domain), std::move(codomain), outer(y, x_star),
               format(x_star) + "⊗" + format(y));
}

LinOp block_sum(std::span<const LinOp> ops, SumKind kind) {
  require(ops.size() >= 2, ErrorCode::EmptyInput, "block sum needs at least two operators");
  std::vector<SpacePtr> doms, cods;
  std::size_t rows = 0, cols = 0;
  for (const auto& op : ops) {
    doms.push_back(op.domain_ptr());
    cods.push_back(op.codomain_ptr());
    rows += op.codomain().dim();
    cols += op.domain().dim();
  }
  RatMatrix m(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& op : ops) {
    const auto& a = op.matrix();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) m(r0 + r, c0 + c) = a(r, c);
    r0 += a.rows();
    c0 += a.cols();
  }
  return LinOp(direct_sum(doms, kind), direct_sum(cods, kind), std::move(m));
}

LinOp compose(const LinOp& b, const LinOp& a) {
  require(a.codomain() == b.domain(), ErrorCode::SpaceMismatch,
          "cannot compose: codomain '" + a.codomain().label() + "' differs from domain '" +
              b.domain().label() + "'");
  return LinOp(a.domain_ptr(), b.codomain_ptr(), multiply(b.matrix(), a.matrix()));
}

bool same_spaces(const LinOp& a, const LinOp& b) {
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

LinOp add_scaled(const LinOp& a, const Rational& s, const LinOp& b) {
  require(same_spaces(a, b), ErrorCode::SpaceMismatch,
          "operators act between different spaces");
  return LinOp(a.domain_ptr(), a.codomain_ptr(), add(a.matrix(), scale(b.matrix(), s)));
}

LinOp scaled(const LinOp& a, const Rational& s) {
  return LinOp(a.domain_ptr(), a.codomain_ptr(), scale(a.matrix(), s), a.label());
}

}  // namespace spearlab
