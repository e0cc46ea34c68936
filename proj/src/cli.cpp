// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vicyl/problems.hpp"

namespace vicyl {

namespace {

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

std::string point_human(const SplitPoint& z) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < z.p(); ++i) {
    if (i) s += ", ";
    s += fmt6(z.x()[i]);
  }
  s += " | ";
  for (Eigen::Index j = 0; j < z.q(); ++j) {
    if (j) s += ", ";
    s += fmt6(z.u()[j]);
  }
  s += ")";
  return s;
}

const char* status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged:
      return "converged";
    case SolveStatus::IterationCap:
      return "iteration_cap";
    case SolveStatus::MapError:
      return "map_error";
  }
  return "unknown";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<double> parse_witness_values(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &consumed);
    } catch (const std::exception&) {
      throw ParseError("witness entry \"" + token + "\" is not a number");
    }
    while (consumed < token.size() &&
           std::isspace(static_cast<unsigned char>(token[consumed]))) {
      ++consumed;
    }
    if (consumed != token.size()) {
      throw ParseError("witness entry \"" + token + "\" is not a number");
    }
    values.push_back(value);
  }
  if (values.empty()) throw ParseError("witness list is empty");
  return values;
}

// Streams either to an owned file or to the caller's ostream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void apply_overrides(SolveConfig& config, const std::optional<int>& max_iters,
                     const std::optional<double>& tol,
                     const std::optional<double>& order_tol) {
  if (max_iters) config.max_iters = *max_iters;
  if (tol) config.residual_tol = *tol;
  if (order_tol) config.order_tol = *order_tol;
}

void print_human_trace(std::ostream& out, const IterationTrace& trace,
                       Eigen::Index p, Eigen::Index q) {
  const int width = 14;
  out << std::left << std::setw(6) << "n";
  for (Eigen::Index i = 1; i <= p; ++i) {
    out << std::setw(width) << ("x" + std::to_string(i));
  }
  for (Eigen::Index j = 1; j <= q; ++j) {
    out << std::setw(width) << ("u" + std::to_string(j));
  }
  out << std::setw(width) << "residual" << "monotone" << '\n';
  for (size_t n = 0; n < trace.points.size(); ++n) {
    const SplitPoint& z = trace.points[n];
    out << std::left << std::setw(6) << n;
    for (Eigen::Index i = 0; i < p; ++i) {
      out << std::setw(width) << fmt6(z.x()[i]);
    }
    for (Eigen::Index j = 0; j < q; ++j) {
      out << std::setw(width) << fmt6(z.u()[j]);
    }
    out << std::setw(width) << fmt6(trace.residuals[n])
        << (trace.monotone_flags[n] ? '1' : '0') << '\n';
  }
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(const std::string& input_path, const std::string& output_path,
              const std::string& format, const std::optional<int>& max_iters,
              const std::optional<double>& tol,
              const std::optional<double>& order_tol, std::ostream& out_stream,
              std::ostream& err) {
  const ProblemDescription desc = load_problem(input_path);
  const VIProblem problem = build_problem(desc);
  SolveConfig config = desc.solve;
  apply_overrides(config, max_iters, tol, order_tol);

  const SolveResult result = solve(problem, desc.start, config);
  OutputTarget target(output_path, out_stream);
  std::ostream& out = target.stream();

  if (format == "csv") {
    out << trace_to_csv(result.trace, problem.p(), problem.q());
  } else {
    const auto [direct, sufficient] =
        check_start_condition(problem, result.trace.points.empty()
                                           ? desc.start
                                           : result.trace.points.front(),
                              config.order_tol);
    out << "status: " << status_name(result.status) << '\n'
        << "iterations: " << result.iterations << '\n'
        << "residual: " << fmt6(result.residual) << '\n'
        << "start_projected: " << yes_no(result.start_projected) << '\n'
        << "point: " << point_human(result.point) << '\n'
        << "start_condition_direct: " << yes_no(direct) << '\n'
        << "start_condition_sufficient: " << yes_no(sufficient) << '\n';
    if (!result.trace.monotone_flags.empty()) {
      const bool all_monotone =
          std::all_of(result.trace.monotone_flags.begin(),
                      result.trace.monotone_flags.end(),
                      [](bool b) { return b; });
      out << "trace_monotone: " << yes_no(all_monotone) << '\n';
    }
  }

  switch (result.status) {
    case SolveStatus::Converged:
      return kExitOk;
    case SolveStatus::IterationCap:
      return kExitIterationCap;
    case SolveStatus::MapError:
      err << "map evaluation failed: " << result.error << '\n';
      return kExitInputError;
  }
  return kExitInputError;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int cmd_table(const std::string& input_path, const std::string& output_path,
              const std::string& format, int rows,
              const std::optional<double>& order_tol,
              std::ostream& out_stream) {
  const ProblemDescription desc = load_problem(input_path);
  const VIProblem problem = build_problem(desc);
  const double tol = order_tol.value_or(desc.solve.order_tol);
  const IterationTrace trace =
      trace_iterations(problem, desc.start, rows - 1, tol);

  OutputTarget target(output_path, out_stream);
  std::ostream& out = target.stream();
  if (format == "csv") {
    out << trace_to_csv(trace, problem.p(), problem.q());
  } else {
    print_human_trace(out, trace, problem.p(), problem.q());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

void print_certificate(std::ostream& out, const char* label,
                       const Certificate& cert) {
  out << label << ": in_domain=" << (cert.in_domain ? 1 : 0)
      << " dominates_start=" << (cert.dominates_start ? 1 : 0)
      << " predicate=" << (cert.predicate ? 1 : 0)
      << " satisfied=" << (cert.satisfied ? 1 : 0) << '\n';
}

int cmd_verify(const std::string& input_path, const std::string& output_path,
               const std::string& witness_text, const std::string& cert_name,
               const std::string& variant_name,
               const std::optional<double>& tol,
               const std::optional<double>& order_tol,
               std::ostream& out_stream) {
  const ProblemDescription desc = load_problem(input_path);
  const VIProblem problem = build_problem(desc);

  const std::vector<double> values = parse_witness_values(witness_text);
  if (static_cast<Eigen::Index>(values.size()) != problem.p() + problem.q()) {
    throw ParseError("witness needs " +
                     std::to_string(problem.p() + problem.q()) +
                     " entries, got " + std::to_string(values.size()));
  }
  Eigen::VectorXd flat(static_cast<Eigen::Index>(values.size()));
  for (Eigen::Index i = 0; i < flat.size(); ++i) {
    flat[i] = values[static_cast<size_t>(i)];
  }
  const SplitPoint witness = SplitPoint::from_flat(flat, problem.p());

  const double ord_tol = order_tol.value_or(desc.solve.order_tol);
  const double check_tol = tol.value_or(1e-8);
  const SplitPoint& z0 = desc.start;

  const Certificate omega_prop = omega_certificate(
      problem, z0, witness, CertificateVariant::Proposition, ord_tol);
  const Certificate omega_lit = omega_certificate(
      problem, z0, witness, CertificateVariant::TheoremLiteral, ord_tol);
  const Certificate gamma_prop = gamma_certificate(
      problem, z0, witness, CertificateVariant::Proposition, ord_tol);
  const Certificate gamma_lit = gamma_certificate(
      problem, z0, witness, CertificateVariant::TheoremLiteral, ord_tol);
  const bool is_solution =
      verify_vi_solution(problem, witness, 1000, check_tol);

  OutputTarget target(output_path, out_stream);
  std::ostream& out = target.stream();
  out << "witness: " << point_human(witness) << '\n'
      << "start: " << point_human(z0) << '\n';
  print_certificate(out, "omega_proposition", omega_prop);
  print_certificate(out, "omega_theorem_literal", omega_lit);
  print_certificate(out, "gamma_proposition", gamma_prop);
  print_certificate(out, "gamma_theorem_literal", gamma_lit);
  out << "solution_check: " << (is_solution ? "pass" : "fail")
      << " (samples=1000, tol=" << fmt6(check_tol) << ")\n";

  bool holds = false;
  std::string requested = cert_name;
  if (cert_name == "solution") {
    holds = is_solution;
  } else {
    const bool literal = variant_name == "theorem";
    requested += literal ? " theorem_literal" : " proposition";
    const Certificate& chosen =
        cert_name == "omega" ? (literal ? omega_lit : omega_prop)
                             : (literal ? gamma_lit : gamma_prop);
    holds = chosen.satisfied;
  }
  out << "requested: " << requested << " -> "
      << (holds ? "holds" : "fails") << '\n';
  return holds ? kExitOk : kExitPredicateFail;
}

// ---------------------------------------------------------------------------
// props
// ---------------------------------------------------------------------------

BaseSet props_box(Eigen::Index q) {
  std::vector<IntervalBound> bounds;
  for (Eigen::Index j = 0; j < q; ++j) {
    bounds.emplace_back(-3.0 - static_cast<double>(j),
                        2.0 + static_cast<double>(j));
  }
  return BaseSet::box(std::move(bounds));
}

BaseSet props_ball(Eigen::Index q) {
  return BaseSet::ball(Eigen::VectorXd::Constant(q, 0.5),
                       2.0 + static_cast<double>(q));
}

long cylinder_isotonicity_violations(long samples) {
  long violations = 0;
  for (Eigen::Index p = 1; p <= 3; ++p) {
    for (Eigen::Index q = 1; q <= 3; ++q) {
      const ExtendedLorentzCone cone(p, q, 1e-12);
      for (const BaseSet& base : {props_box(q), props_ball(q)}) {
        const CylinderSet cylinder(p, base);
        OrderedPairSampler sampler(p, q, 10.0, samples,
                                   0x9e3779b9u + 64 * p + q);
        for (long n = 0; n < samples; ++n) {
          const auto [lo, hi] = sampler.next();
          if (!cone.leq(cylinder.project(lo), cylinder.project(hi))) {
            ++violations;
          }
        }
      }
    }
  }
  return violations;
}

long projection_oracle_mismatches(long samples) {
  std::mt19937_64 rng(0xfeedface);
  std::uniform_real_distribution<double> coord(-20.0, 20.0);
  std::uniform_int_distribution<int> endpoint_kind(0, 3);
  long mismatches = 0;
  const Eigen::Index q = 3;
  for (long n = 0; n < samples; ++n) {
    std::vector<IntervalBound> bounds;
    for (Eigen::Index j = 0; j < q; ++j) {
      const int kind = endpoint_kind(rng);
      double lo = coord(rng), hi = coord(rng);
      if (lo > hi) std::swap(lo, hi);
      if (lo == hi) hi = lo + 1.0;
      const double inf = std::numeric_limits<double>::infinity();
      if (kind == 1) lo = -inf;
      if (kind == 2) hi = inf;
      if (kind == 3) {
        lo = -inf;
        hi = inf;
      }
      bounds.emplace_back(lo, hi);
    }
    Eigen::VectorXd v(q);
    for (Eigen::Index j = 0; j < q; ++j) v[j] = coord(rng) * 2.0;
    const BaseSet base = BaseSet::box(bounds);
    const Eigen::VectorXd via_set = base.project(v);
    for (Eigen::Index j = 0; j < q; ++j) {
      if (via_set[j] != mid(bounds[static_cast<size_t>(j)], v[j])) {
        ++mismatches;
        break;
      }
    }
  }
  return mismatches;
}

long projection_metric_violations(long samples) {
  std::mt19937_64 rng(0xabad1dea);
  std::uniform_real_distribution<double> coord(-15.0, 15.0);
  long violations = 0;
  const Eigen::Index q = 3;
  Eigen::VectorXd axis(q);
  axis << 1.0, 0.0, 0.0;
  Eigen::VectorXd diag(q);
  diag << 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0);
  const std::vector<BaseSet> bases = {
      props_box(q), props_ball(q),
      BaseSet::halfspace_intersection(
          {Halfspace(axis, Eigen::VectorXd::Zero(q)),
           Halfspace(diag, Eigen::VectorXd::Constant(q, 0.5))})};
  for (const BaseSet& base : bases) {
    for (long n = 0; n < samples; ++n) {
      Eigen::VectorXd v(q), w(q), shift(q);
      for (Eigen::Index j = 0; j < q; ++j) {
        v[j] = coord(rng);
        w[j] = coord(rng);
        shift[j] = coord(rng);
      }
      const Eigen::VectorXd pv = base.project(v);
      const Eigen::VectorXd pw = base.project(w);
      if ((pv - pw).norm() > (v - w).norm() + 1e-12) ++violations;
      if ((base.project(pv) - pv).norm() > 1e-12) ++violations;
      const Eigen::VectorXd moved = base.translated(shift).project(v);
      const Eigen::VectorXd composed = shift + base.project(v - shift);
      if ((moved - composed).norm() > 1e-12) ++violations;
    }
  }
  return violations;
}

bool generator_suite_passes(std::ostream& out) {
  bool ok = true;
  for (Eigen::Index p = 1; p <= 5; ++p) {
    const ExtendedLorentzCone cone(p, 1, 0.0);
    const GeneratorSet primal = generators(cone, ConeSide::Primal);
    const GeneratorSet dual = generators(cone, ConeSide::Dual);
    const size_t expected_primal = p == 1 ? 2 : static_cast<size_t>(p) + 2;
    if (primal.points.size() != expected_primal ||
        dual.points.size() != static_cast<size_t>(2 * p)) {
      out << "  generator counts wrong at p=" << p << '\n';
      ok = false;
    }
    for (const SplitPoint& g : primal.points) {
      if (!cone.contains(g)) ok = false;
    }
    for (const SplitPoint& g : dual.points) {
      if (!cone.dual_contains(g)) ok = false;
    }
    if (!dual_pairing_nonnegative(p)) {
      out << "  dual pairing negative at p=" << p << '\n';
      ok = false;
    }
  }
  return ok;
}

int cmd_props(long samples, std::ostream& out_stream,
              const std::string& output_path) {
  OutputTarget target(output_path, out_stream);
  std::ostream& out = target.stream();
  bool all_ok = true;

  const long iso = cylinder_isotonicity_violations(samples);
  out << "cylinder_isotonicity: " << (iso == 0 ? "pass" : "fail") << " ("
      << iso << " violations over (p,q) in {1..3}^2, box and ball bases)\n";
  all_ok = all_ok && iso == 0;

  const long oracle = projection_oracle_mismatches(samples);
  out << "box_projection_oracle: " << (oracle == 0 ? "pass" : "fail") << " ("
      << oracle << " mismatches vs coordinatewise clamp)\n";
  all_ok = all_ok && oracle == 0;

  const long metric = projection_metric_violations(samples);
  out << "projection_metric: " << (metric == 0 ? "pass" : "fail") << " ("
      << metric
      << " violations of nonexpansiveness/idempotence/translation)\n";
  all_ok = all_ok && metric == 0;

  const bool gens = generator_suite_passes(out);
  out << "generators_q1: " << (gens ? "pass" : "fail")
      << " (p in {1..5}, counts, membership at tol 0, pairings)\n";
  all_ok = all_ok && gens;

  const VIProblem problem = example_problem();
  OrderedPairSampler sampler(2, 2, 20.0, samples, 0x51515151u);
  const ExtendedLorentzCone cone(2, 2, 1e-12);
  const IsotoneReport report = isotone_harness(
      [](const SplitPoint& z) { return eval_example_map(z); }, sampler, cone);
  out << "example_isotone_harness: " << (report.failed == 0 ? "pass" : "fail")
      << " (" << report.failed << " of " << (report.passed + report.failed)
      << " ordered pairs broke the hypothesis)\n";
  all_ok = all_ok && report.failed == 0;

  return all_ok ? kExitOk : kExitPredicateFail;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Variational inequalities on cylinders: monotone projected "
               "fixed-point solver and certificate checker"};
  app.require_subcommand(1);

  std::string input, output;
  std::string format = "table";
  std::optional<int> max_iters;
  std::optional<double> tol, order_tol;
  int rows = 11;
  std::string witness_text;
  std::string cert_name = "omega";
  std::string variant_name = "proposition";
  long samples = 10'000;

  const auto add_io = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) {
      cmd->add_option("--input", input, "problem description file (JSON)")
          ->required();
    }
    cmd->add_option("--output", output, "write data output to this file");
  };

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve a problem from a description file");
  add_io(solve_cmd, true);
  solve_cmd->add_option("--format", format, "table (human) or csv (trace)")
      ->check(CLI::IsMember({"table", "csv"}));
  solve_cmd->add_option("--max-iters", max_iters, "iteration budget override")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--tol", tol, "residual tolerance override")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--order-tol", order_tol, "order tolerance override")
      ->check(CLI::NonNegativeNumber);

  CLI::App* table_cmd =
      app.add_subcommand("table", "print the first iterates as a table");
  add_io(table_cmd, true);
  table_cmd->add_option("--format", format, "table (human) or csv (trace)")
      ->check(CLI::IsMember({"table", "csv"}));
  table_cmd->add_option("--rows", rows, "number of rows, including n = 0")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--order-tol", order_tol, "order tolerance override")
      ->check(CLI::NonNegativeNumber);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check solvability certificates and the solution test");
  add_io(verify_cmd, true);
  verify_cmd
      ->add_option("--witness", witness_text,
                   "comma-separated p+q coordinates")
      ->required();
  verify_cmd
      ->add_option("--cert", cert_name,
                   "which predicate decides the exit code")
      ->check(CLI::IsMember({"omega", "gamma", "solution"}));
  verify_cmd
      ->add_option("--variant", variant_name,
                   "certificate text: proposition or theorem")
      ->check(CLI::IsMember({"proposition", "theorem"}));
  verify_cmd->add_option("--tol", tol, "solution-check tolerance")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--order-tol", order_tol, "order tolerance override")
      ->check(CLI::NonNegativeNumber);

  CLI::App* props_cmd =
      app.add_subcommand("props", "run the library property suites");
  add_io(props_cmd, false);
  props_cmd->add_option("--samples", samples, "samples per suite")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) {
      return cmd_solve(input, output, format, max_iters, tol, order_tol, out,
                       err);
    }
    if (table_cmd->parsed()) {
      return cmd_table(input, output, format, rows, order_tol, out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(input, output, witness_text, cert_name, variant_name,
                        tol, order_tol, out);
    }
    if (props_cmd->parsed()) {
      return cmd_props(samples, out, output);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "no subcommand selected\n";
  return kExitInputError;
}

}  // namespace vicyl
