// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vicyl/projections.hpp"

namespace vicyl {

/// One evaluation of the split map F = (G, H).
struct MapValue {
  Eigen::VectorXd g;  // G(x,u) in R^p
  Eigen::VectorXd h;  // H(x,u) in R^q
};

using SplitMap = std::function<MapValue(const SplitPoint&)>;

/// The variational inequality VI(F, K) on a cylinder K = R^p x C:
/// find z* in K with (y - z*)' F(z*) >= 0 for every y in K.
///
/// G and H must be total on finite inputs and deterministic; continuity is
/// the caller's contract.
class VIProblem {
 public:
  VIProblem(CylinderSet domain, SplitMap map);

  const CylinderSet& domain() const { return domain_; }
  Eigen::Index p() const { return domain_.p(); }
  Eigen::Index q() const { return domain_.q(); }

  /// Evaluates F = (G, H); throws MapEvaluationError (carrying the point)
  /// on wrong output dimensions or non-finite values.
  MapValue eval(const SplitPoint& z) const;

 private:
  CylinderSet domain_;
  SplitMap map_;
};

struct SolveConfig {
  int max_iters = 10'000;
  double residual_tol = 1e-10;
  double order_tol = 1e-12;
  bool monitor_monotonicity = true;
  bool record_trace = true;
};

/// The iterate history: points z^n, the natural-map residual at each point,
/// and (when monitored) the flag z^n <=_L z^{n+1} for each recorded point.
struct IterationTrace {
  std::vector<SplitPoint> points;
  std::vector<double> residuals;
  std::vector<bool> monotone_flags;
};

enum class SolveStatus { Converged, IterationCap, MapError };

struct SolveResult {
  SplitPoint point;           // last iterate
  IterationTrace trace;
  SolveStatus status;
  int iterations = 0;         // Picard updates applied
  double residual = 0.0;      // natural-map residual at `point`
  bool start_projected = false;
  std::string error;          // set when status == MapError
};

/// || z - P_K(z - F(z)) ||; zero exactly at the solutions of VI(F, K).
double natural_map_residual(const VIProblem& problem, const SplitPoint& z);

/// One update of the split Picard iteration:
///   x <- x - G(x,u),  u <- P_C(u - H(x,u)).
/// Coincides with P_K(z - F(z)) on the cylinder.
SplitPoint picard_step(const VIProblem& problem, const SplitPoint& z);

/// Picard-iterates from z0 (projected onto K first if outside, reported via
/// start_projected) until the natural-map residual drops to residual_tol or
/// the iteration budget runs out. Monotonicity monitoring is observational:
/// a step that breaks z^n <=_L z^{n+1} is flagged, never rejected.
///
/// A map-evaluation failure ends the run with status MapError and whatever
/// trace had accumulated.
SolveResult solve(const VIProblem& problem, const SplitPoint& z0,
                  const SolveConfig& config = {});

/// Exactly `updates` Picard updates from z0 (projected onto K first), with
/// no residual stopping rule; at a fixed point the rows simply repeat.
/// Used by table reproduction.
IterationTrace trace_iterations(const VIProblem& problem, const SplitPoint& z0,
                                int updates, double order_tol = 1e-12);

enum class CertificateKind { Omega, Gamma };

/// Which text of the solvability predicate is evaluated. Proposition uses
/// the unshifted membership F(w) in L (resp. P_K(w - F(w)) <=_L w); the
/// theorem-literal variant carries the "- x^0" / "- u^0" shifts exactly as
/// printed. The two disagree in general; both are kept observable.
enum class CertificateVariant { Proposition, TheoremLiteral };

/// A solvability witness w checked against a start z0. `satisfied` is the
/// conjunction of the three recorded parts; a witness outside K yields a
/// certificate with in_domain = false, never an exception.
struct Certificate {
  CertificateKind kind;
  CertificateVariant variant;
  SplitPoint witness;
  SplitPoint reference;          // the start z0
  bool in_domain = false;        // w in K
  bool dominates_start = false;  // z0 <=_L w
  bool predicate = false;        // the variant inequality at w
  bool satisfied = false;
};

/// Omega membership of w:
///   Proposition:     G(w) >= ||H(w)|| e          (i.e. F(w) in L)
///   TheoremLiteral:  G(w) - x^0 >= ||H(w) - u^0|| e
Certificate omega_certificate(const VIProblem& problem, const SplitPoint& z0,
                              const SplitPoint& w,
                              CertificateVariant variant,
                              double order_tol = 1e-12);

/// Gamma membership of w:
///   Proposition:     P_K(w - F(w)) <=_L w
///   TheoremLiteral:  G(w) - x^0 >= ||u - u^0 - P_C(u - H(w))|| e
Certificate gamma_certificate(const VIProblem& problem, const SplitPoint& z0,
                              const SplitPoint& w,
                              CertificateVariant variant,
                              double order_tol = 1e-12);

/// (direct, sufficient) for the start z0:
///   direct:     z0 <=_L picard_step(z0)   (the z^0 <= z^1 hypothesis)
///   sufficient: -F(z0) in L, i.e. -G(z0) >= ||H(z0)|| e
/// On a cylinder, sufficient implies direct.
std::pair<bool, bool> check_start_condition(const VIProblem& problem,
                                            const SplitPoint& z0,
                                            double order_tol = 1e-12);

/// Checks the cylinder reduction of the VI at z: ||G(z)|| <= tol and
/// (v - u)' H(z) >= -tol for `samples` random v from C plus, when C is a
/// box, all vertices (infinite endpoints replaced by far-out surrogates,
/// which still lie in C).
bool verify_vi_solution(const VIProblem& problem, const SplitPoint& z,
                        int samples, double tol,
                        std::uint64_t seed = 0x5eed5eedULL);

/// CSV with header iter,x1..xp,u1..uq,residual,monotone; numbers rendered
/// with 17 significant digits, flags as 1/0 (empty when not monitored).
std::string trace_to_csv(const IterationTrace& trace, Eigen::Index p,
                         Eigen::Index q);

}  // namespace vicyl
