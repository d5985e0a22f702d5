#include "spearlab/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "spearlab/error.hpp"
#include "spearlab/lp.hpp"
#include "spearlab/parallel.hpp"

namespace spearlab {

namespace {

void require_norm_one(const LinOp& op) {
  Rational n = operator_norm(op);
  require(n == Rational(1), ErrorCode::NotNormOne,
          "operator has norm " + n.to_string() + "; a norm-one operator is required");
}

void require_same_spaces(const LinOp& g, const LinOp& t) {
  require(same_spaces(g, t), ErrorCode::SpaceMismatch,
          "operators do not act between the same pair of spaces");
}

bool modulus_one(const Rational& r) { return abs(r) == Rational(1); }

bool is_spear_image(const PolyhedralSpace& space, const RatVector& y) {
  return space.norm(y) == Rational(1) && is_spear_vector(space, y).decision;
}

}  // namespace

OperatorVerdict decide_operator(const LinOp& op) {
  require_norm_one(op);
  const auto& xs = op.domain().vertex_representatives();
  const auto& ys = op.codomain().dual_vertex_representatives();

  OperatorVerdict verdict;
  for (const auto& x : xs) {
    RatVector gx = multiply(op.matrix(), x);
    for (const auto& f : ys) {
      Rational value = dot(f, gx);
      if (!modulus_one(value)) {
        verdict.witness = PairWitness{x, f, value};
        break;
      }
    }
    if (verdict.witness) break;
  }
  const bool holds = !verdict.witness.has_value();

  bool images = true;
  for (const auto& x : xs) {
    if (!is_spear_image(op.codomain(), multiply(op.matrix(), x))) {
      images = false;
      break;
    }
  }
  if (images != holds) {
    throw std::logic_error("extreme-pair criterion and spear-image criterion disagree");
  }
  verdict.lush = verdict.spear = verdict.adp = holds;
  return verdict;
}

Certificate verdict_certificate(const OperatorVerdict& verdict) {
  Certificate cert{verdict.lush, criterion::kDomainIv, {}};
  if (verdict.witness) {
    cert.witnesses.push_back({WitnessKind::BallVertex, verdict.witness->x, verdict.witness->value});
    cert.witnesses.push_back(
        {WitnessKind::DualVertex, verdict.witness->y_star, verdict.witness->value});
  }
  return cert;
}

Certificate decide_by_images(const LinOp& op) {
  require_norm_one(op);
  Certificate cert{true, criterion::kDomainV, {}};
  for (const auto& x : op.domain().vertex_representatives()) {
    RatVector gx = multiply(op.matrix(), x);
    if (!is_spear_image(op.codomain(), gx)) {
      cert.decision = false;
      cert.witnesses.push_back({WitnessKind::BallVertex, x, op.codomain().norm(gx)});
      cert.witnesses.push_back({WitnessKind::Vector, gx, op.codomain().norm(gx)});
      break;
    }
  }
  return cert;
}

Certificate decide_by_adjoint_images(const LinOp& op) {
  require_norm_one(op);
  auto dual_domain = dual_space(op.domain());
  const RatMatrix gt = op.matrix().transpose();
  Certificate cert{true, criterion::kCodomainV, {}};
  for (const auto& f : op.codomain().dual_vertex_representatives()) {
    RatVector g_star_f = multiply(gt, f);
    if (!is_spear_image(*dual_domain, g_star_f)) {
      cert.decision = false;
      cert.witnesses.push_back({WitnessKind::DualVertex, f, dual_domain->norm(g_star_f)});
      cert.witnesses.push_back({WitnessKind::Vector, g_star_f, dual_domain->norm(g_star_f)});
      break;
    }
  }
  return cert;
}

Certificate decide_rank_one(const RatVector& x_star, const RatVector& y, SpacePtr domain,
                            SpacePtr codomain) {
  require(x_star.size() == domain->dim() && y.size() == codomain->dim(),
          ErrorCode::DimensionMismatch, "rank-one factors do not match the spaces");
  const Rational nx = domain->dual_norm(x_star);
  const Rational ny = codomain->norm(y);
  require(nx * ny == Rational(1), ErrorCode::NotNormOne,
          "rank-one operator has norm " + (nx * ny).to_string());
  // Rescale so that both factors are unit vectors.
  const RatVector x0 = scale(x_star, Rational(1) / nx);
  const RatVector y0 = scale(y, nx);
  auto dual_domain = dual_space(*domain);
  Certificate cert{true, criterion::kRankOne, {}};
  auto xs = is_spear_vector(*dual_domain, x0);
  auto ys = is_spear_vector(*codomain, y0);
  if (!xs.decision) {
    cert.decision = false;
    cert.witnesses.push_back({WitnessKind::Vector, x0, Rational(0)});
    cert.witnesses.insert(cert.witnesses.end(), xs.witnesses.begin(), xs.witnesses.end());
  } else if (!ys.decision) {
    cert.decision = false;
    cert.witnesses.push_back({WitnessKind::Vector, y0, Rational(0)});
    cert.witnesses.insert(cert.witnesses.end(), ys.witnesses.begin(), ys.witnesses.end());
  }
  return cert;
}

Certificate rank_one_sweep(const LinOp& op) {
  require_norm_one(op);
  auto dual_domain = dual_space(op.domain());
  Certificate cert{true, criterion::kRankOneSweep, {}};
  for (const auto& f : op.domain().dual_vertex_representatives()) {
    for (const auto& w : op.codomain().vertex_representatives()) {
      LinOp t = rank_one(f, w, op.domain_ptr(), op.codomain_ptr());
      auto eq = spear_equation(op, t);
      if (!eq.holds) {
        cert.decision = false;
        cert.witnesses.push_back({WitnessKind::DualVertex, f, eq.lhs});
        cert.witnesses.push_back({WitnessKind::BallVertex, w, eq.lhs});
        return cert;
      }
    }
  }
  return cert;
}

bool verify_verdict(const LinOp& op, const OperatorVerdict& verdict) {
  if (operator_norm(op) != Rational(1)) return false;
  if (verdict.lush != verdict.spear || verdict.spear != verdict.adp) return false;
  if (verdict.lush) {
    if (verdict.witness) return false;
    for (const auto& x : op.domain().vertices()) {
      RatVector gx = multiply(op.matrix(), x);
      for (const auto& f : op.codomain().dual_vertices())
        if (!modulus_one(dot(f, gx))) return false;
    }
    return true;
  }
  if (!verdict.witness) return false;
  const auto& w = *verdict.witness;
  const auto& xs = op.domain().vertices();
  const auto& fs = op.codomain().dual_vertices();
  if (!std::binary_search(xs.begin(), xs.end(), w.x, std::greater<>())) return false;
  if (!std::binary_search(fs.begin(), fs.end(), w.y_star, std::greater<>())) return false;
  Rational value = dot(w.y_star, multiply(op.matrix(), w.x));
  return value == w.value && !modulus_one(value);
}

RangeInterval numerical_range(const PolyhedralSpace& space, const RatVector& u, const RatVector& z) {
  Rational n = space.norm(u);
  require(n == Rational(1), ErrorCode::NotUnitNorm,
          "vector " + format(u) + " has norm " + n.to_string() + ", not 1");
  require(z.size() == space.dim(), ErrorCode::DimensionMismatch, "argument length mismatch");
  std::optional<RangeInterval> range;
  for (const auto& f : space.dual_vertices()) {
    if (dot(f, u) != Rational(1)) continue;
    Rational value = dot(f, z);
    if (!range) {
      range = RangeInterval{value, value};
    } else {
      range->lo = std::min(range->lo, value);
      range->hi = std::max(range->hi, value);
    }
  }
  // ‖u‖ = 1 is attained at some dual vertex, so the face is nonempty.
  return *range;
}

Rational numerical_radius(const PolyhedralSpace& space, const RatVector& u, const RatVector& z) {
  auto r = numerical_range(space, u, z);
  return std::max(abs(r.lo), abs(r.hi));
}

IndexResult numerical_index(const PolyhedralSpace& space, const RatVector& u) {
  Rational n = space.norm(u);
  require(n == Rational(1), ErrorCode::NotUnitNorm,
          "vector " + format(u) + " has norm " + n.to_string() + ", not 1");
  const std::size_t d = space.dim();
  std::vector<RatVector> face;
  for (const auto& f : space.dual_vertices())
    if (dot(f, u) == Rational(1)) face.push_back(f);

  // Variables (z, t). v(X,u,-z) = v(X,u,z), so one facet per ± pair suffices.
  const auto facets = space.dual_vertex_representatives();
  std::vector<LpResult> results(facets.size());
  parallel_for(facets.size(), [&](std::size_t k) {
    std::vector<LinearConstraint> cons;
    for (const auto& f : face) {
      RatVector up = f, lo = negate(f);
      up.push_back(-1);
      lo.push_back(-1);
      cons.push_back({std::move(up), Relation::LessEqual, 0});
      cons.push_back({std::move(lo), Relation::LessEqual, 0});
    }
    RatVector on = facets[k];
    on.push_back(0);
    cons.push_back({std::move(on), Relation::Equal, 1});
    for (const auto& h : space.dual_vertices()) {
      RatVector row = h;
      row.push_back(0);
      cons.push_back({std::move(row), Relation::LessEqual, 1});
    }
    RatVector objective(d + 1);
    objective[d] = 1;
    results[k] = solve_lp(objective, cons, Sense::Minimize);
  });

  std::optional<IndexResult> best;
  for (auto& r : results) {
    if (r.status != LpStatus::Optimal) throw std::logic_error("facet LP of the index is not optimal");
    if (!best || r.value < best->value) {
      r.point.pop_back();
      best = IndexResult{r.value, std::move(r.point)};
    }
  }
  if ((best->value == Rational(1)) != is_spear_vector(space, u).decision) {
    throw std::logic_error("numerical index disagrees with the spear-vector decision");
  }
  return *best;
}

VgResult vg_radius_witness(const LinOp& g, const LinOp& t) {
  require_same_spaces(g, t);
  require_norm_one(g);
  VgResult best{Rational(0), {}, {}};
  bool found = false;
  for (const auto& x : g.domain().vertex_representatives()) {
    const RatVector gx = multiply(g.matrix(), x);
    const RatVector tx = multiply(t.matrix(), x);
    for (const auto& f : g.codomain().dual_vertices()) {
      if (dot(f, gx) != Rational(1)) continue;
      Rational value = abs(dot(f, tx));
      if (!found || value > best.value) {
        best = VgResult{value, x, f};
        found = true;
      }
    }
  }
  return best;
}

Rational vg_radius(const LinOp& g, const LinOp& t) { return vg_radius_witness(g, t).value; }

SpearEquation spear_equation(const LinOp& g, const LinOp& t) {
  require_same_spaces(g, t);
  require_norm_one(g);
  SpearEquation eq;
  eq.lhs = std::max(operator_norm(add_scaled(g, Rational(1), t)),
                    operator_norm(add_scaled(g, Rational(-1), t)));
  eq.rhs = Rational(1) + operator_norm(t);
  eq.holds = eq.lhs == eq.rhs;
  return eq;
}

std::vector<LinOp> sample_operators(const SpacePtr& domain, const SpacePtr& codomain,
                                    std::size_t count, std::uint64_t seed, int grid_k, int grid_q) {
  require(grid_k >= 1 && grid_q >= 1, ErrorCode::InvalidArgument, "grid parameters must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-grid_k, grid_k);
  std::vector<LinOp> out;
  out.reserve(count);
  while (out.size() < count) {
    RatMatrix m(codomain->dim(), domain->dim());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(entry(rng), grid_q);
    if (m.is_zero()) continue;
    out.emplace_back(domain, codomain, std::move(m));
  }
  return out;
}

NgBound ng_upper_bound(const LinOp& g, std::span<const LinOp> candidates) {
  require_norm_one(g);
  require(!candidates.empty(), ErrorCode::EmptyInput, "no candidate operators");
  std::vector<Rational> values(candidates.size());
  std::vector<std::optional<LinOp>> normalized(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const LinOp& t = candidates[i];
    require_same_spaces(g, t);
    Rational n = operator_norm(t);
    require(!n.is_zero(), ErrorCode::InvalidArgument, "candidate operator is zero");
    normalized[i] = scaled(t, Rational(1) / n);
    values[i] = vg_radius(g, *normalized[i]);
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[arg]) arg = i;
  return NgBound{values[arg], *normalized[arg], candidates.size()};
}

NgBound ng_upper_bound(const LinOp& g, std::size_t samples, std::uint64_t seed) {
  require(samples >= 1, ErrorCode::InvalidArgument, "at least one sample is required");
  require_norm_one(g);
  auto candidates = sample_operators(g.domain_ptr(), g.codomain_ptr(), samples, seed);
  return ng_upper_bound(g, candidates);
}

}  // namespace spearlab
