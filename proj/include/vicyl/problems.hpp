// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "vicyl/vi_solver.hpp"

namespace vicyl {

// ---------------------------------------------------------------------------
// Built-in example: K = R^2 x [-10,10]^2 with the map defined through
//   (x - G, u - H) = f1 w1 + f2 w2,
//   f1 = (x1 + ||u|| + 12) / 12,   f2 = (x2 + ||u|| - 7.2) / 12,
//   w1 = (1, 1, 1/6, 1/3),         w2 = (1, 1, 1/3, 1/6).
// Its unique solution is (8/15, 8/15, 0, 4/15).
// ---------------------------------------------------------------------------

/// (f1, f2) at z; p = q = 2 required.
std::pair<double, double> example_weights(const SplitPoint& z);

/// (G, H) of the built-in example at z.
MapValue eval_example_map(const SplitPoint& z);

/// The full problem: the example map on R^2 x [-10,10]^2.
VIProblem example_problem();

/// The known unique solution (8/15, 8/15, 0, 4/15).
SplitPoint example_solution();

/// The start (43/30, 13/30, 2, 5) used by the worked certificate check.
SplitPoint example_start();

// ---------------------------------------------------------------------------
// Affine family: F(z) = M z + r, split into G (first p rows) and H (last q).
// A controllable test family; its isotonicity can be placed on either side of
// the Theorem hypothesis by choosing M.
// ---------------------------------------------------------------------------

struct AffineMap {
  Eigen::MatrixXd M;  // (p+q) x (p+q)
  Eigen::VectorXd r;  // p+q
  Eigen::Index p;
  Eigen::Index q;

  AffineMap(Eigen::MatrixXd mat, Eigen::VectorXd shift, Eigen::Index p_dim,
            Eigen::Index q_dim);

  MapValue operator()(const SplitPoint& z) const;

  SplitMap as_map() const;
};

// ---------------------------------------------------------------------------
// Ordered-pair sampling
// ---------------------------------------------------------------------------

/// Emits pairs (a, b) with a <=_L b by construction:
///   b = a + (||d|| e + s, d),  s >= 0 componentwise, d random.
/// Deterministic given seed; rejection against <=_L is never used.
class OrderedPairSampler {
 public:
  OrderedPairSampler(Eigen::Index p, Eigen::Index q, double scale, long count,
                     std::uint64_t seed);

  Eigen::Index p() const { return p_; }
  Eigen::Index q() const { return q_; }
  long count() const { return count_; }

  std::pair<SplitPoint, SplitPoint> next();

 private:
  Eigen::Index p_;
  Eigen::Index q_;
  double scale_;
  long count_;
  std::mt19937_64 rng_;
};

/// Outcome of sweeping the order-preservation hypothesis
///   a <=_L b  implies  (I - F)(a) <=_L (I - F)(b)
/// over sampled ordered pairs. Failures are data, not errors.
struct IsotoneReport {
  long passed = 0;
  long failed = 0;
  std::vector<std::pair<SplitPoint, SplitPoint>> failing_witnesses;  // <= 10
};

IsotoneReport isotone_harness(const SplitMap& map, OrderedPairSampler& sampler,
                              const ExtendedLorentzCone& cone);

// ---------------------------------------------------------------------------
// Declarative problem descriptions (JSON)
// ---------------------------------------------------------------------------

enum class MapKind { Example, Affine };

/// A parsed problem file: dimensions, base set, map, start and solve options.
/// Box bounds serialize as JSON numbers with "-inf"/"inf" strings for
/// infinite endpoints.
struct ProblemDescription {
  Eigen::Index p;
  Eigen::Index q;
  BaseSet base;
  MapKind map_kind;
  Eigen::MatrixXd affine_matrix;  // used when map_kind == Affine
  Eigen::VectorXd affine_shift;
  SplitPoint start;
  SolveConfig solve;

  ProblemDescription(Eigen::Index p_dim, Eigen::Index q_dim, BaseSet base_set,
                     MapKind kind, SplitPoint start_point);
};

/// Parses a problem description from JSON text. Throws ParseError with the
/// offending field named.
ProblemDescription parse_problem(const std::string& json_text);

/// Reads and parses a problem file.
ProblemDescription load_problem(const std::string& path);

/// Wires the described map to the described cylinder.
VIProblem build_problem(const ProblemDescription& desc);

}  // namespace vicyl
