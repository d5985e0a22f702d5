// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spearlab/analysis.hpp"
#include "spearlab/fixtures.hpp"
#include "spearlab/oracle.hpp"
#include "spearlab/spear.hpp"
#include "support.hpp"

using namespace spearlab;
using testing::as_set;
using testing::v;
using testing::vi;

namespace {

// A criterion collects failed checks; any failure fails the line.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 8) failures.push_back(what);
    else if (!ok) failures.emplace_back();
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool all_true(const OperatorVerdict& o) { return o.lush && o.spear && o.adp; }
bool all_false(const OperatorVerdict& o) { return !o.lush && !o.spear && !o.adp; }

const Rational kHexagonIndex(1, 2);  // frozen from the brute-force oracle

std::vector<RatVector> sign_vectors(std::size_t n) {
  std::vector<RatVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(x);
  }
  return out;
}

void ac1(Check& c) {
  auto t0 = Clock::now();
  auto x1 = standard_space("example52_X1");
  auto x2 = standard_space("example52_X2");
  auto y1 = standard_space("example52_Y1");
  auto y2 = standard_space("example52_Y2");
  c.expect(x1->vertices().size() == 14, "X1 has 14 vertices");
  c.expect(*x2 == *standard_space("l1:4"), "X2 = l1^4");
  c.expect(*y1 == *standard_space("linf:4"), "Y1 = linf^4");
  c.expect(*y2 == *dual_space(x1), "Y2 = X1*");

  LinOp g1(x1, y1, RatMatrix::identity(4), "G1");
  LinOp g2 = adjoint(g1);
  c.expect(g2.domain() == *x2 && g2.codomain() == *y2, "G1* : X2 -> Y2");
  std::vector<LinOp> parts{g1, g2};
  LinOp g = block_sum(parts, SumKind::Infinity);
  auto verdict = decide_operator(g);
  c.expect(all_true(verdict), "decide_operator(G) all true");

  auto id = LinOp::identity(g.domain_ptr());
  auto vid = decide_operator(id);
  c.expect(all_false(vid), "Id on X1 (+)inf X2 all false");
  c.expect(vid.witness.has_value() && verify_verdict(id, vid), "Id witness verifies");

  auto cert = is_spear_vector(*x1, vi({1, 1, -1, -1}));
  c.expect(!cert.decision, "(1,1,-1,-1) is not a spear vector of X1");
  c.expect(cert.witnesses.size() == 1 &&
               cert.witnesses[0].vector == v({"1/2", "1/2", "1/2", "1/2"}) &&
               cert.witnesses[0].value == 0,
           "witness (1/2,1/2,1/2,1/2) with value 0");
  c.expect(verify_spear_vector(*x1, vi({1, 1, -1, -1}), cert), "spear-vector witness verifies");
  auto dv = x1->dual_vertices();
  c.expect(std::find(dv.begin(), dv.end(), v({"1/2", "1/2", "1/2", "1/2"})) != dv.end(),
           "(1/2,1/2,1/2,1/2) in ext B_{X1*}");
  c.expect(seconds_since(t0) < 5.0, "under 5 s");
}

void ac2(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto l1 = standard_space("l1:" + std::to_string(n));
    std::set<RatVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
      basis.insert(unit_vector(n, i));
      basis.insert(negate(unit_vector(n, i)));
    }
    c.expect(as_set(spear_vectors(*l1)) == basis, "Spear(l1^" + std::to_string(n) + ")");
    auto li = standard_space("linf:" + std::to_string(n));
    c.expect(as_set(spear_vectors(*li)) == as_set(sign_vectors(n)),
             "Spear(linf^" + std::to_string(n) + ")");
  }
}

void ac3(Check& c) {
  c.expect(numerical_index(*standard_space("l1:2"), vi({1, 0})).value == 1, "N(l1^2, e1) = 1");
  c.expect(numerical_index(*standard_space("linf:2"), vi({1, 0})).value == 0, "N(linf^2, e1) = 0");
  auto hex = standard_space("hexagon");
  for (const auto& u : hex->vertices()) {
    c.expect(numerical_index(*hex, u).value == kHexagonIndex, "hexagon regression " + format(u));
    c.expect(std::abs(oracle::brute_numerical_index(*hex, u, 400) - kHexagonIndex.to_double()) <= 1e-6,
             "hexagon oracle " + format(u));
  }
  for (const char* name : {"l1:2", "linf:2", "hexagon", "l1:3", "linf:3"}) {
    auto s = standard_space(name);
    for (const auto& u : s->vertices()) {
      double exact = numerical_index(*s, u).value.to_double();
      double brute = oracle::brute_numerical_index(*s, u, s->dim() == 2 ? 200 : 24);
      std::ostringstream os;
      os << name << " u=" << format(u) << " exact " << exact << " brute " << brute;
      c.expect(std::abs(exact - brute) <= 1e-6, os.str());
    }
  }
}

std::vector<LinOp> lush_candidates() {
  std::vector<LinOp> out;
  for (const auto& name : standard_operator_names())
    if (name.rfind("id:", 0) != 0) out.push_back(standard_operator(name));
  for (const char* s : {"l1:1", "l1:2", "l1:3", "linf:2", "linf:3", "example52_X1", "hexagon"})
    out.push_back(standard_operator(std::string("id:") + s));
  return out;
}

void ac4(Check& c) {
  std::size_t lush_count = 0;
  for (const auto& g : lush_candidates()) {
    if (!all_true(decide_operator(g))) continue;
    ++lush_count;
    const std::string name = g.label().empty() ? g.domain().label() : g.label();
    bool rank_one_ok = true;
    for (const auto& f : g.domain().dual_vertices())
      for (const auto& w : g.codomain().vertices())
        rank_one_ok = rank_one_ok &&
                      spear_equation(g, rank_one(f, w, g.domain_ptr(), g.codomain_ptr())).holds;
    c.expect(rank_one_ok, name + ": exhaustive rank-one family");
    bool random_ok = true;
    for (const auto& t : sample_operators(g.domain_ptr(), g.codomain_ptr(), 200, 2024))
      random_ok = random_ok && spear_equation(g, t).holds;
    c.expect(random_ok, name + ": 200 random rational T");
    auto rep = oracle::fuzz_spear_equation(g, 1000, 1e-9, 1);
    std::ostringstream os;
    os << name << ": fuzz 1000 trials, max violation " << rep.max_violation;
    c.expect(rep.passed, os.str());
  }
  c.expect(lush_count >= 5, "at least five all-true fixtures exercised");
}

void ac5(Check& c) {
  // polar involution
  std::mt19937_64 rng(2024);
  bool polar_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t d = 2 + trial % 4;
    auto gens = testing::random_symmetric_generators(rng, d, d <= 3 ? 4 : 2);
    auto n = gens.size();
    for (std::size_t i = 0; i < n; ++i) gens.push_back(negate(gens[i]));
    Polytope p = Polytope::from_vertices(gens);
    polar_ok = polar_ok && p.is_centrally_symmetric() && p.polar().polar() == p;
  }
  c.expect(polar_ok, "polar involution on 200 random symmetric polytopes");

  // duality of sums
  std::vector<std::vector<SpacePtr>> families{
      {standard_space("l1:2"), standard_space("hexagon")},
      {standard_space("example52_X1"), standard_space("l1:4")},
      {standard_space("linf:2"), standard_space("l1:1"), standard_space("hexagon")}};
  for (const auto& fam : families) {
    std::vector<SpacePtr> duals;
    for (const auto& s : fam) duals.push_back(dual_space(s));
    c.expect(*dual_space(direct_sum(fam, SumKind::Infinity)) == *direct_sum(duals, SumKind::One),
             "dual(sum_inf) = sum_one(duals)");
    c.expect(*dual_space(direct_sum(fam, SumKind::One)) == *direct_sum(duals, SumKind::Infinity),
             "dual(sum_one) = sum_inf(duals)");
  }

  // adjoints
  auto fixtures = lush_candidates();
  for (const auto& g : fixtures) {
    auto a = adjoint(g);
    c.expect(operator_norm(a) == operator_norm(g), "‖G*‖ = ‖G‖ " + g.domain().label());
    auto vg = decide_operator(g), va = decide_operator(a);
    c.expect(vg.lush == va.lush && vg.spear == va.spear && vg.adp == va.adp,
             "verdict(G) = verdict(G*) " + g.domain().label());
    c.expect(decide_by_adjoint_images(g).decision == vg.lush, "codomain criterion agrees");
  }
  std::vector<SpacePtr> pool{standard_space("l1:2"), standard_space("linf:2"),
                             standard_space("hexagon"), standard_space("l1:3")};
  for (int trial = 0; trial < 100; ++trial) {
    auto x = pool[rng() % pool.size()], y = pool[rng() % pool.size()];
    RatMatrix m(y->dim(), x->dim());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = testing::random_rational(rng, 4, 3);
    LinOp t(x, y, m);
    c.expect(operator_norm(adjoint(t)) == operator_norm(t), "‖T*‖ = ‖T‖ random");
  }

  // sum stability, both directions
  std::vector<LinOp> lush_ops, other_ops;
  for (const auto& g : fixtures)
    if (g.domain().dim() <= 4) (decide_operator(g).lush ? lush_ops : other_ops).push_back(g);
  for (auto kind : {SumKind::Infinity, SumKind::One})
    for (std::size_t i = 0; i < lush_ops.size() + other_ops.size(); ++i)
      for (std::size_t j = 0; j < lush_ops.size() + other_ops.size(); j += 2) {
        const LinOp& a = i < lush_ops.size() ? lush_ops[i] : other_ops[i - lush_ops.size()];
        const LinOp& b = j < lush_ops.size() ? lush_ops[j] : other_ops[j - lush_ops.size()];
        if (a.domain().dim() + b.domain().dim() > 7) continue;
        std::vector<LinOp> ab{a, b};
        bool expect = decide_operator(a).lush && decide_operator(b).lush;
        c.expect(all_true(decide_operator(block_sum(ab, kind))) == expect &&
                     all_false(decide_operator(block_sum(ab, kind))) == !expect,
                 "sum stability");
      }

  // rank-one characterization
  std::size_t positives = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto x = pool[rng() % pool.size()], y = pool[rng() % pool.size()];
    RatVector f, w;
    if (trial % 2 == 0) {
      f = x->dual_vertices()[rng() % x->dual_vertices().size()];
      w = y->vertices()[rng() % y->vertices().size()];
    } else {
      do f = testing::random_vector(rng, x->dim()); while (is_zero(f));
      do w = testing::random_vector(rng, y->dim()); while (is_zero(w));
      f = scale(f, Rational(1) / x->dual_norm(f));
      w = normalize(*y, w);
    }
    bool lush = decide_operator(rank_one(f, w, x, y)).lush;
    positives += lush;
    c.expect(lush == (is_spear_vector(*dual_space(x), f).decision && is_spear_vector(*y, w).decision),
             "rank-one characterization");
  }
  c.expect(positives > 0, "rank-one sample includes lush operators");

  // N = 1 iff spear, every vertex of every fixture space
  for (const auto& name : standard_space_names()) {
    std::vector<std::string> names{name};
    if (name == "l1:n" || name == "linf:n") {
      names.clear();
      for (int n = 1; n <= 4; ++n) names.push_back(name.substr(0, name.size() - 1) + std::to_string(n));
    }
    for (const auto& nm : names) {
      auto s = standard_space(nm);
      for (const auto& u : s->vertices())
        c.expect((numerical_index(*s, u).value == 1) == is_spear_vector(*s, u).decision,
                 "N = 1 iff spear on " + nm + " " + format(u));
    }
  }
}

}  // namespace

int main() {
  auto start = Clock::now();
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "bijective lush operator on X1 (+)inf l1^4 (exact, < 5 s)", ac1},
      {"AC2", "spear vectors of l1^n and linf^n, n = 1..5", ac2},
      {"AC3", "numerical index: exact values, oracle agreement 1e-6, hexagon regression", ac3},
      {"AC4", "spear-equation soundness for all-true fixtures (exact + fuzz 1e-9)", ac4},
      {"AC5", "structural invariants (polar, sums, adjoints, rank-one, N = 1 iff spear)", ac5},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = Clock::now();
    std::string error;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    bool ok = c.failures.empty() && error.empty();
    failed += !ok;
    std::printf("[%s] %s %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, c.count,
                seconds_since(t0));
    for (const auto& f : c.failures)
      if (!f.empty()) std::printf("       failed: %s\n", f.c_str());
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
  }
  std::printf("[SKIP] AC6 infinite-dimensional headline results are out of scope (not counted)\n");
  double total = seconds_since(start);
  bool fast = total < 300.0;
  failed += !fast;
  std::printf("[%s] AC7 acceptance run completes within 5 minutes (%.2f s; every ctest entry also "
              "carries a 300 s timeout)\n",
              fast ? "PASS" : "FAIL", total);
  return failed == 0 ? 0 : 1;
}
