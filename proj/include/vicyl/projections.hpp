// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vicyl/cone_order.hpp"
#include "vicyl/split_point.hpp"

namespace vicyl {

/// One closed interval [lower, upper], with -inf / +inf allowed as endpoints.
/// The interval is never a single point: lower < upper strictly.
struct IntervalBound {
  double lower;
  double upper;

  IntervalBound(double lo, double hi);

  bool bounded_below() const;
  bool bounded_above() const;

  /// The whole real line.
  static IntervalBound whole_line();
};

/// Three-way clamp: lower if t <= lower, upper if t >= upper, t otherwise.
/// Infinite endpoints never clamp. This is the coordinatewise projection
/// onto an interval.
double mid(const IntervalBound& bound, double t);

/// Coordinatewise interval clamp; the exact projection onto a box.
Eigen::VectorXd project_box(const std::vector<IntervalBound>& bounds,
                            const Eigen::VectorXd& v);

/// Closed halfspace { z : <z - anchor, normal> <= 0 } with unit normal
/// (checked to within 1e-12 at construction).
struct Halfspace {
  Eigen::VectorXd normal;
  Eigen::VectorXd anchor;

  Halfspace(Eigen::VectorXd n, Eigen::VectorXd a);
};

enum class BaseKind { Box, Ball, HalfspaceIntersection };

/// A closed convex base set C in R^q supporting exact metric projection:
/// a box, a Euclidean ball, or a finite intersection of halfspaces.
///
/// Boxes and balls project in closed form; a single halfspace does too.
/// Intersections of two or more halfspaces fall back to Dykstra's cyclic
/// projection (tolerance 1e-12, cycle cap 1e5); a nonempty intersection is
/// the caller's contract and is only detected when the iteration fails to
/// settle.
class BaseSet {
 public:
  static BaseSet box(std::vector<IntervalBound> bounds);
  static BaseSet ball(Eigen::VectorXd center, double radius);
  static BaseSet halfspace_intersection(std::vector<Halfspace> halfspaces);

  BaseKind kind() const { return kind_; }
  Eigen::Index dim() const;

  /// Nearest point of the set.
  Eigen::VectorXd project(const Eigen::VectorXd& v) const;

  bool contains(const Eigen::VectorXd& v, double tol = 1e-12) const;

  /// The set shifted by y: project onto (y + C) via P_{y+C}(v) = y + P_C(v-y).
  BaseSet translated(const Eigen::VectorXd& shift) const;

  const std::vector<IntervalBound>& box_bounds() const;
  const Eigen::VectorXd& ball_center() const;
  double ball_radius() const;
  const std::vector<Halfspace>& halfspaces() const;

 private:
  BaseSet(BaseKind kind) : kind_(kind) {}

  BaseKind kind_;
  std::vector<IntervalBound> bounds_;
  Eigen::VectorXd center_;
  double radius_ = 0.0;
  std::vector<Halfspace> halfspaces_;
};

/// The cylinder K = R^p x C. Projection leaves the x-part untouched and
/// projects the u-part onto the base.
class CylinderSet {
 public:
  CylinderSet(Eigen::Index p, BaseSet base);

  Eigen::Index p() const { return p_; }
  Eigen::Index q() const { return base_.dim(); }
  const BaseSet& base() const { return base_; }

  SplitPoint project(const SplitPoint& z) const;
  bool contains(const SplitPoint& z, double tol = 1e-12) const;

 private:
  Eigen::Index p_;
  BaseSet base_;
};

/// P_K(x, u) = (x, P_C(u)).
SplitPoint project_cylinder(const CylinderSet& cylinder, const SplitPoint& z);

/// Whether K = intersection of the given halfspaces of R^{p+q} (unit normals
/// gamma = (a, u)) is an L-isotone projection set, for p, q > 1. True iff
/// every normal either has a = 0, or has u = 0 with exactly one a-coordinate
/// +sqrt(2)/2, one -sqrt(2)/2 and the rest zero (all to within 1e-12).
///
/// Throws UnsupportedCaseError for p = 1 or q = 1; those cases are governed
/// by the cylinder criterion instead.
bool is_isotone_halfspace_set(const ExtendedLorentzCone& cone,
                              const std::vector<Halfspace>& halfspaces);

/// For a box K in R^{p+q}: nullopt when every x-part interval is the whole
/// line (K is then a cylinder and projection is L-isotone). Otherwise a pair
/// z_lo <=_L z_hi whose projections violate P_K(z_lo) <=_L P_K(z_hi),
/// built from the first x-interval with a finite endpoint: both endpoints of
/// the pair straddle the clamp at coordinate k so the projected x-difference
/// vanishes there while the u-parts keep their distance.
std::optional<std::pair<SplitPoint, SplitPoint>> box_isotonicity_counterexample(
    const ExtendedLorentzCone& cone, const std::vector<IntervalBound>& box);

}  // namespace vicyl
