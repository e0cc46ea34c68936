// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/vi_solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "vicyl/errors.hpp"

namespace vicyl {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace

// ---------------------------------------------------------------------------
// VIProblem
// ---------------------------------------------------------------------------

VIProblem::VIProblem(CylinderSet domain, SplitMap map)
    : domain_(std::move(domain)), map_(std::move(map)) {
  if (!map_) throw MapEvaluationError("the split map is empty");
}

MapValue VIProblem::eval(const SplitPoint& z) const {
  if (z.p() != p() || z.q() != q()) {
    throw MapEvaluationError("point shape does not match the problem at " +
                             z.to_string());
  }
  MapValue value = map_(z);
  if (value.g.size() != p() || value.h.size() != q()) {
    throw MapEvaluationError("map output has wrong dimensions at " +
                             z.to_string());
  }
  if (!value.g.allFinite() || !value.h.allFinite()) {
    throw MapEvaluationError("map produced a non-finite value at " +
                             z.to_string());
  }
  return value;
}

// ---------------------------------------------------------------------------
// Picard iteration
// ---------------------------------------------------------------------------

SplitPoint picard_step(const VIProblem& problem, const SplitPoint& z) {
  const MapValue f = problem.eval(z);
  return SplitPoint(z.x() - f.g,
                    problem.domain().base().project(z.u() - f.h));
}

double natural_map_residual(const VIProblem& problem, const SplitPoint& z) {
  return (z - picard_step(problem, z)).norm();
}

SolveResult solve(const VIProblem& problem, const SplitPoint& z0,
                  const SolveConfig& config) {
  SplitPoint z = z0;
  bool projected = false;
  if (!problem.domain().contains(z, config.order_tol)) {
    z = problem.domain().project(z);
    projected = true;
  }

  SolveResult result{z, {}, SolveStatus::IterationCap, 0,
                     std::numeric_limits<double>::quiet_NaN(), projected, {}};
  if (config.record_trace) result.trace.points.push_back(z);

  try {
    for (;;) {
      const SplitPoint z_next = picard_step(problem, z);
      const double residual = (z - z_next).norm();
      if (config.record_trace) {
        result.trace.residuals.push_back(residual);
        if (config.monitor_monotonicity) {
          const ExtendedLorentzCone cone(problem.p(), problem.q(),
                                         config.order_tol);
          result.trace.monotone_flags.push_back(cone.leq(z, z_next));
        }
      }
      result.residual = residual;
      if (residual <= config.residual_tol) {
        result.status = SolveStatus::Converged;
        break;
      }
      if (result.iterations >= config.max_iters) {
        result.status = SolveStatus::IterationCap;
        break;
      }
      z = z_next;
      ++result.iterations;
      if (config.record_trace) result.trace.points.push_back(z);
    }
  } catch (const MapEvaluationError& e) {
    result.status = SolveStatus::MapError;
    result.error = e.what();
    if (config.record_trace &&
        result.trace.residuals.size() < result.trace.points.size()) {
      result.trace.residuals.push_back(
          std::numeric_limits<double>::quiet_NaN());
      if (config.monitor_monotonicity) {
        result.trace.monotone_flags.push_back(false);
      }
    }
  }
  result.point = z;
  return result;
}

IterationTrace trace_iterations(const VIProblem& problem, const SplitPoint& z0,
                                int updates, double order_tol) {
  if (updates < 0) throw DimensionError("update count must be nonnegative");
  SplitPoint z = problem.domain().contains(z0, order_tol)
                     ? z0
                     : problem.domain().project(z0);
  const ExtendedLorentzCone cone(problem.p(), problem.q(), order_tol);
  IterationTrace trace;
  trace.points.reserve(static_cast<size_t>(updates) + 1);
  for (int n = 0; n <= updates; ++n) {
    const SplitPoint z_next = picard_step(problem, z);
    trace.points.push_back(z);
    trace.residuals.push_back((z - z_next).norm());
    trace.monotone_flags.push_back(cone.leq(z, z_next));
    if (n < updates) z = z_next;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Solvability certificates
// ---------------------------------------------------------------------------

namespace {

Certificate make_certificate(const VIProblem& problem, CertificateKind kind,
                             const SplitPoint& z0, const SplitPoint& w,
                             CertificateVariant variant, double order_tol) {
  require_same_shape(z0, w);
  Certificate cert{kind,  variant, w,    z0,
                   false, false,   false, false};
  const ExtendedLorentzCone cone(problem.p(), problem.q(), order_tol);
  cert.in_domain = problem.domain().contains(w, order_tol);
  cert.dominates_start = cone.leq(z0, w);
  const MapValue f = problem.eval(w);
  switch (kind) {
    case CertificateKind::Omega:
      if (variant == CertificateVariant::Proposition) {
        cert.predicate = cone.contains(SplitPoint(f.g, f.h));
      } else {
        cert.predicate =
            cone.contains(SplitPoint(f.g - z0.x(), f.h - z0.u()));
      }
      break;
    case CertificateKind::Gamma:
      if (variant == CertificateVariant::Proposition) {
        cert.predicate = cone.leq(picard_step(problem, w), w);
      } else {
        const Eigen::VectorXd projected =
            problem.domain().base().project(w.u() - f.h);
        const double drop = (w.u() - z0.u() - projected).norm();
        cert.predicate = (f.g - z0.x()).minCoeff() >= drop - order_tol;
      }
      break;
  }
  cert.satisfied = cert.in_domain && cert.dominates_start && cert.predicate;
  return cert;
}

}  // namespace

Certificate omega_certificate(const VIProblem& problem, const SplitPoint& z0,
                              const SplitPoint& w, CertificateVariant variant,
                              double order_tol) {
  return make_certificate(problem, CertificateKind::Omega, z0, w, variant,
                          order_tol);
}

Certificate gamma_certificate(const VIProblem& problem, const SplitPoint& z0,
                              const SplitPoint& w, CertificateVariant variant,
                              double order_tol) {
  return make_certificate(problem, CertificateKind::Gamma, z0, w, variant,
                          order_tol);
}

std::pair<bool, bool> check_start_condition(const VIProblem& problem,
                                            const SplitPoint& z0,
                                            double order_tol) {
  const ExtendedLorentzCone cone(problem.p(), problem.q(), order_tol);
  const bool direct = cone.leq(z0, picard_step(problem, z0));
  const MapValue f = problem.eval(z0);
  const bool sufficient = cone.contains(SplitPoint(-f.g, f.h));
  return {direct, sufficient};
}

// ---------------------------------------------------------------------------
// Solution verification
// ---------------------------------------------------------------------------

namespace {

// Box vertices as test directions; infinite endpoints are replaced by far-out
// surrogate coordinates, which still lie inside the box.
std::vector<Eigen::VectorXd> box_probe_vertices(
    const std::vector<IntervalBound>& bounds, const Eigen::VectorXd& u) {
  const Eigen::Index q = static_cast<Eigen::Index>(bounds.size());
  std::vector<Eigen::VectorXd> vertices;
  if (q > 16) return vertices;  // exponential blowup guard
  const size_t count = size_t{1} << q;
  vertices.reserve(count);
  for (size_t mask = 0; mask < count; ++mask) {
    Eigen::VectorXd v(q);
    for (Eigen::Index j = 0; j < q; ++j) {
      const IntervalBound& b = bounds[static_cast<size_t>(j)];
      const double surrogate = 1e6 * (1.0 + std::abs(u[j]));
      if (mask & (size_t{1} << j)) {
        v[j] = b.bounded_above() ? b.upper : surrogate;
      } else {
        v[j] = b.bounded_below() ? b.lower : -surrogate;
      }
    }
    vertices.push_back(std::move(v));
  }
  return vertices;
}

Eigen::VectorXd random_base_point(const BaseSet& base, const Eigen::VectorXd& u,
                                  std::mt19937_64& rng) {
  const Eigen::Index q = base.dim();
  switch (base.kind()) {
    case BaseKind::Box: {
      Eigen::VectorXd v(q);
      for (Eigen::Index j = 0; j < q; ++j) {
        const IntervalBound& b = base.box_bounds()[static_cast<size_t>(j)];
        const double lo = b.bounded_below() ? b.lower : -1e6;
        const double hi = b.bounded_above() ? b.upper : 1e6;
        std::uniform_real_distribution<double> coord(lo, hi);
        v[j] = coord(rng);
      }
      return v;
    }
    case BaseKind::Ball: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Eigen::VectorXd dir(q);
      for (Eigen::Index j = 0; j < q; ++j) dir[j] = gauss(rng);
      const double len = dir.norm();
      if (len == 0.0) return base.ball_center();
      std::uniform_real_distribution<double> radial(0.0, 1.0);
      return base.ball_center() +
             (base.ball_radius() * radial(rng) / len) * dir;
    }
    case BaseKind::HalfspaceIntersection: {
      std::normal_distribution<double> gauss(0.0, 10.0);
      Eigen::VectorXd v(q);
      for (Eigen::Index j = 0; j < q; ++j) v[j] = u[j] + gauss(rng);
      return base.project(v);
    }
  }
  return u;
}

}  // namespace

bool verify_vi_solution(const VIProblem& problem, const SplitPoint& z,
                        int samples, double tol, std::uint64_t seed) {
  if (!problem.domain().contains(z, tol)) return false;
  const MapValue f = problem.eval(z);
  if (f.g.norm() > tol) return false;

  const auto passes = [&](const Eigen::VectorXd& v) {
    return (v - z.u()).dot(f.h) >= -tol;
  };

  const BaseSet& base = problem.domain().base();
  if (base.kind() == BaseKind::Box) {
    for (const Eigen::VectorXd& vertex :
         box_probe_vertices(base.box_bounds(), z.u())) {
      if (!passes(vertex)) return false;
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    if (!passes(random_base_point(base, z.u(), rng))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Trace serialization
// ---------------------------------------------------------------------------

std::string trace_to_csv(const IterationTrace& trace, Eigen::Index p,
                         Eigen::Index q) {
  std::ostringstream out;
  out << "iter";
  for (Eigen::Index i = 1; i <= p; ++i) out << ",x" << i;
  for (Eigen::Index j = 1; j <= q; ++j) out << ",u" << j;
  out << ",residual,monotone\n";
  const bool monitored = !trace.monotone_flags.empty();
  for (size_t n = 0; n < trace.points.size(); ++n) {
    const SplitPoint& z = trace.points[n];
    if (z.p() != p || z.q() != q) {
      throw DimensionError("trace point shape does not match the header");
    }
    out << n;
    for (Eigen::Index i = 0; i < p; ++i) out << ',' << format_g17(z.x()[i]);
    for (Eigen::Index j = 0; j < q; ++j) out << ',' << format_g17(z.u()[j]);
    out << ',' << format_g17(n < trace.residuals.size()
                                 ? trace.residuals[n]
                                 : std::numeric_limits<double>::quiet_NaN());
    out << ',';
    if (monitored && n < trace.monotone_flags.size()) {
      out << (trace.monotone_flags[n] ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vicyl
