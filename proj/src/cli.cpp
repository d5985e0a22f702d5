#include "spearlab/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spearlab/error.hpp"
#include "spearlab/json_io.hpp"
#include "spearlab/parallel.hpp"

namespace spearlab {

namespace {

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPEARLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorCode::MalformedInput, std::string("SPEARLAB_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

struct Options {
  std::vector<std::string> files;
  std::size_t jobs = 1;
  bool verify = false;

  std::vector<std::string> labels;  // --fixture (repeatable for `space sum`)
  std::string kind = "inf";
  std::vector<std::string> vectors;
  std::string unit;
  std::string t_matrix;
  std::string t_label;
  std::size_t samples = 200;
  std::size_t trials = 500;
  std::size_t density = 100;
  double tol = oracle::kEqualityTolerance;
  double eps = 0.1;
  std::optional<std::uint64_t> seed;
};

const std::string& single_label(const Options& o) {
  require(o.labels.size() == 1, ErrorCode::InvalidArgument, "exactly one --fixture is required");
  return o.labels.front();
}

RatVector single_vector(const Options& o, bool allow_decimals = false) {
  require(o.vectors.size() == 1, ErrorCode::InvalidArgument, "exactly one --vector is required");
  return parse_vector_literal(o.vectors.front(), allow_decimals);
}

std::uint64_t seed_of(const Options& o) { return o.seed ? *o.seed : default_seed(); }

LinOp second_operator(const Workspace& ws, const Options& o, const LinOp& g) {
  require(o.t_matrix.empty() != o.t_label.empty(), ErrorCode::InvalidArgument,
          "give exactly one of --t (matrix literal) or --t-op (operator label)");
  if (!o.t_label.empty()) return ws.op(o.t_label);
  return LinOp(g.domain_ptr(), g.codomain_ptr(), parse_matrix_literal(o.t_matrix), "T");
}

void check(bool ok, const std::string& what) {
  if (!ok) throw VerifyFailure("verification failed: " + what);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spear/lush/aDP decisions on polyhedral normed spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--file", o.files, "JSON file with spaces and/or operators (repeatable)");
  app.add_option("--jobs", o.jobs, "Maximum worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--verify", o.verify, "Re-check every emitted witness by direct evaluation");

  std::string command;
  std::function<json(const Workspace&)> action;

  auto fixture_opt = [&](CLI::App* sub, bool many = false) {
    auto* opt = sub->add_option("--fixture,--space,--op", o.labels, "Space or operator label");
    if (!many) opt->expected(1);
    opt->required();
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<json(const Workspace&)> body) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&, name, parent, body] {
      command = parent->get_parent() ? parent->get_name() + " " + name : name;
      action = body;
    });
    return sub;
  };

  // space
  auto* space = app.add_subcommand("space", "Inspect and combine spaces")->require_subcommand(1);
  fixture_opt(leaf(space, "info", "Vertices, dual vertices and spear vectors", [&](const Workspace& ws) {
    auto s = ws.space(single_label(o));
    json j = space_to_json(*s);
    j["vertex_count"] = s->vertices().size();
    j["dual_vertex_count"] = s->dual_vertices().size();
    json spears = json::array();
    for (const auto& v : spear_vectors(*s)) spears.push_back(vector_to_json(v));
    j["spear_vectors"] = spears;
    return j;
  }));
  fixture_opt(leaf(space, "dual", "The dual space", [&](const Workspace& ws) {
    return space_to_json(*dual_space(ws.space(single_label(o))));
  }));
  {
    auto* sum = leaf(space, "sum", "Absolute sum of spaces", [&](const Workspace& ws) {
      std::vector<SpacePtr> parts;
      for (const auto& l : o.labels) parts.push_back(ws.space(l));
      return space_to_json(*direct_sum(parts, o.kind == "one" ? SumKind::One : SumKind::Infinity));
    });
    fixture_opt(sum, true);
    sum->add_option("--kind", o.kind, "inf or one")->check(CLI::IsMember({"inf", "one"}));
  }

  // vector
  auto* vector = app.add_subcommand("vector", "Vector-level queries")->require_subcommand(1);
  for (const std::string name : {"is-spear", "norm"}) {
    auto* sub = leaf(vector, name, name == "norm" ? "Exact norm" : "Spear-vector decision",
                     [&, name](const Workspace& ws) {
                       auto s = ws.space(single_label(o));
                       RatVector z = single_vector(o);
                       if (name == "norm") return json{{"norm", s->norm(z).to_string()}};
                       auto cert = is_spear_vector(*s, z);
                       if (o.verify) check(verify_spear_vector(*s, z, cert), "spear-vector witness");
                       return to_json(cert);
                     });
    fixture_opt(sub);
    sub->add_option("--vector", o.vectors, "Comma-separated scalars")->required()->expected(1);
  }

  // set
  auto* set = app.add_subcommand("set", "Spear-set queries")->require_subcommand(1);
  {
    auto* sub = leaf(set, "is-spear", "Spear-set decision for a finite set", [&](const Workspace& ws) {
      auto s = ws.space(single_label(o));
      std::vector<RatVector> f;
      for (const auto& v : o.vectors) f.push_back(parse_vector_literal(v));
      auto cert = is_spear_set(*s, f);
      if (o.verify) check(verify_spear_set(*s, f, cert), "spear-set witness");
      return to_json(cert);
    });
    fixture_opt(sub);
    sub->add_option("--vector", o.vectors, "Set element (repeatable)")->required();
  }

  // op
  auto* op = app.add_subcommand("op", "Operator-level queries")->require_subcommand(1);
  fixture_opt(leaf(op, "decide", "Lush / spear / aDP decision", [&](const Workspace& ws) {
    LinOp g = ws.op(single_label(o));
    auto verdict = decide_operator(g);
    if (o.verify) check(verify_verdict(g, verdict), "operator verdict witness");
    json j = to_json(verdict);
    j["codomain_criterion"] = to_json(decide_by_adjoint_images(g));
    return j;
  }));
  fixture_opt(leaf(op, "norm", "Exact operator norm", [&](const Workspace& ws) {
    return json{{"norm", operator_norm(ws.op(single_label(o))).to_string()}};
  }));
  fixture_opt(leaf(op, "adjoint", "The adjoint operator", [&](const Workspace& ws) {
    LinOp a = adjoint(ws.op(single_label(o)));
    json j = operator_to_json(a);
    j["domain_space"] = space_to_json(a.domain());
    j["codomain_space"] = space_to_json(a.codomain());
    return j;
  }));
  for (const std::string name : {"spear-eq", "vg"}) {
    auto* sub = leaf(op, name, name == "vg" ? "Radius v_G(T)" : "Spear equation ‖G + 𝕋T‖ = 1 + ‖T‖",
                     [&, name](const Workspace& ws) {
                       LinOp g = ws.op(single_label(o));
                       LinOp t = second_operator(ws, o, g);
                       if (name == "spear-eq") {
                         auto eq = spear_equation(g, t);
                         return json{{"holds", eq.holds},
                                     {"lhs", eq.lhs.to_string()},
                                     {"rhs", eq.rhs.to_string()}};
                       }
                       auto r = vg_radius_witness(g, t);
                       Certificate cert{true, criterion::kVgFace, {}};
                       if (!r.x.empty()) {
                         cert.witnesses.push_back({WitnessKind::BallVertex, r.x, r.value});
                         cert.witnesses.push_back({WitnessKind::DualVertex, r.y_star, r.value});
                       }
                       if (o.verify && !r.x.empty()) {
                         check(dot(r.y_star, spearlab::apply(g, r.x)) == Rational(1) &&
                                   abs(dot(r.y_star, spearlab::apply(t, r.x))) == r.value,
                               "v_G witness");
                       }
                       json j = to_json(cert);
                       j["value"] = r.value.to_string();
                       return j;
                     });
    fixture_opt(sub);
    sub->add_option("--t", o.t_matrix, "Matrix literal, rows separated by ';'");
    sub->add_option("--t-op", o.t_label, "Label of a loaded operator");
  }
  {
    auto* sub = leaf(op, "ng-bound", "Sampled upper bound on n_G", [&](const Workspace& ws) {
      LinOp g = ws.op(single_label(o));
      const auto seed = seed_of(o);
      auto r = ng_upper_bound(g, o.samples, seed);
      return json{{"bound", r.bound.to_string()},
                  {"argmin", operator_to_json(r.argmin)["matrix"]},
                  {"samples", r.evaluated},
                  {"seed", seed}};
    });
    fixture_opt(sub);
    sub->add_option("--samples", o.samples, "Number of random operators")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Sampling seed");
  }

  // index
  {
    auto* sub = leaf(&app, "index", "Numerical index N(X, u)", [&](const Workspace& ws) {
      auto s = ws.space(single_label(o));
      RatVector u = parse_vector_literal(o.unit);
      auto r = numerical_index(*s, u);
      if (o.verify) {
        check(s->norm(r.witness) == Rational(1) && numerical_radius(*s, u, r.witness) == r.value,
              "numerical index minimizer");
      }
      return json{{"value", r.value.to_string()}, {"witness", vector_to_json(r.witness)}};
    });
    sub->add_option("--space,--fixture", o.labels, "Space label")->required()->expected(1);
    sub->add_option("--unit", o.unit, "Unit vector u")->required();
  }

  // fuzz
  auto* fuzz = app.add_subcommand("fuzz", "Floating-point oracle checks")->require_subcommand(1);
  {
    auto* sub = leaf(fuzz, "spear-vector", "‖z ± x‖ = 2 on sampled unit x", [&](const Workspace& ws) {
      auto s = ws.space(single_label(o));
      return to_json(oracle::fuzz_spear_vector(*s, single_vector(o, true), o.trials, o.tol, seed_of(o)));
    });
    fixture_opt(sub);
    sub->add_option("--vector", o.vectors)->required()->expected(1);
    sub->add_option("--trials", o.trials);
    sub->add_option("--tol", o.tol);
    sub->add_option("--seed", o.seed);
  }
  {
    auto* sub = leaf(fuzz, "spear-eq", "Spear equation on sampled operators", [&](const Workspace& ws) {
      return to_json(oracle::fuzz_spear_equation(ws.op(single_label(o)), o.trials, o.tol, seed_of(o)));
    });
    fixture_opt(sub);
    sub->add_option("--trials", o.trials);
    sub->add_option("--tol", o.tol);
    sub->add_option("--seed", o.seed);
  }
  {
    auto* sub = leaf(fuzz, "lush", "Slice characterization of lushness", [&](const Workspace& ws) {
      return to_json(oracle::fuzz_lush_slices(ws.op(single_label(o)), o.trials, o.eps, seed_of(o)));
    });
    fixture_opt(sub);
    sub->add_option("--trials", o.trials);
    sub->add_option("--eps", o.eps);
    sub->add_option("--seed", o.seed);
  }
  {
    auto* sub = leaf(fuzz, "index", "Brute-force numerical index", [&](const Workspace& ws) {
      auto s = ws.space(single_label(o));
      double v = oracle::brute_numerical_index(*s, parse_vector_literal(o.unit, true), o.density);
      return json{{"value", v}, {"density", o.density}};
    });
    fixture_opt(sub);
    sub->add_option("--unit", o.unit)->required();
    sub->add_option("--density", o.density)->check(CLI::PositiveNumber);
  }

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Built-in fixtures")->require_subcommand(1);
  leaf(fixtures, "list", "List built-in spaces and operators", [&](const Workspace&) {
    return json{{"spaces", standard_space_names()}, {"operators", standard_operator_names()}};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    set_jobs(o.jobs);
    Workspace ws;
    for (const auto& f : o.files) ws.load_file(f);
    json result = action(ws);
    json report{{"schema", kSchema}, {"command", command}, {"result", result}};
    if (o.verify) report["verified"] = true;
    out << report.dump(2) << "\n";
    return kExitOk;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResourceError;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error [malformed-input]: " << e.what() << "\n";
    return kExitInputError;
  } catch (const VerifyFailure& e) {
    err << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace spearlab
