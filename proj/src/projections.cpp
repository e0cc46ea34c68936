// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/projections.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace vicyl {

namespace {

constexpr double kUnitNormalTol = 1e-12;
constexpr double kDykstraTol = 1e-12;
constexpr int kDykstraMaxCycles = 100'000;

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

// ---------------------------------------------------------------------------
// Intervals and boxes
// ---------------------------------------------------------------------------

IntervalBound::IntervalBound(double lo, double hi) : lower(lo), upper(hi) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw DimensionError("interval endpoint is NaN");
  }
  if (!(lo < hi)) {
    throw DimensionError("interval requires lower < upper");
  }
}

bool IntervalBound::bounded_below() const { return std::isfinite(lower); }
bool IntervalBound::bounded_above() const { return std::isfinite(upper); }

IntervalBound IntervalBound::whole_line() { return IntervalBound(-kInf, kInf); }

double mid(const IntervalBound& bound, double t) {
  if (t <= bound.lower) return bound.lower;
  if (t >= bound.upper) return bound.upper;
  return t;
}

Eigen::VectorXd project_box(const std::vector<IntervalBound>& bounds,
                            const Eigen::VectorXd& v) {
  if (static_cast<Eigen::Index>(bounds.size()) != v.size()) {
    throw DimensionError("box dimension does not match the vector");
  }
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[i] = mid(bounds[static_cast<size_t>(i)], v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Halfspaces
// ---------------------------------------------------------------------------

Halfspace::Halfspace(Eigen::VectorXd n, Eigen::VectorXd a)
    : normal(std::move(n)), anchor(std::move(a)) {
  if (normal.size() != anchor.size() || normal.size() < 1) {
    throw DimensionError("halfspace normal and anchor sizes differ");
  }
  if (!normal.allFinite() || !anchor.allFinite()) {
    throw DimensionError("halfspace data must be finite");
  }
  if (std::abs(normal.norm() - 1.0) > kUnitNormalTol) {
    throw DimensionError("halfspace normal must have unit norm");
  }
}

namespace {

Eigen::VectorXd project_halfspace(const Halfspace& h, const Eigen::VectorXd& v) {
  const double excess = (v - h.anchor).dot(h.normal);
  if (excess <= 0.0) return v;
  return v - excess * h.normal;
}

// Dykstra's cyclic projection with per-set corrections. Stops when the
// corrections settle (Birgin/Raydan criterion); a cap overrun is treated as
// an ill-posed intersection.
Eigen::VectorXd project_halfspaces(const std::vector<Halfspace>& sets,
                                   const Eigen::VectorXd& v) {
  const size_t m = sets.size();
  Eigen::VectorXd z = v;
  std::vector<Eigen::VectorXd> corrections(
      m, Eigen::VectorXd::Zero(v.size()));
  for (int cycle = 0; cycle < kDykstraMaxCycles; ++cycle) {
    double drift_sq = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const Eigen::VectorXd w = z + corrections[i];
      z = project_halfspace(sets[i], w);
      const Eigen::VectorXd updated = w - z;
      drift_sq += (updated - corrections[i]).squaredNorm();
      corrections[i] = updated;
    }
    if (std::sqrt(drift_sq) <= kDykstraTol) return z;
  }
  throw InfeasibleSetError(
      "halfspace-intersection projection did not settle; the intersection "
      "is empty or ill-posed");
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseSet
// ---------------------------------------------------------------------------

BaseSet BaseSet::box(std::vector<IntervalBound> bounds) {
  if (bounds.empty()) throw DimensionError("box needs at least one interval");
  BaseSet s(BaseKind::Box);
  s.bounds_ = std::move(bounds);
  return s;
}

BaseSet BaseSet::ball(Eigen::VectorXd center, double radius) {
  if (center.size() < 1 || !center.allFinite()) {
    throw DimensionError("ball center must be a finite vector");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DimensionError("ball radius must be positive and finite");
  }
  BaseSet s(BaseKind::Ball);
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

BaseSet BaseSet::halfspace_intersection(std::vector<Halfspace> halfspaces) {
  if (halfspaces.empty()) {
    throw DimensionError("halfspace intersection needs at least one halfspace");
  }
  const Eigen::Index dim = halfspaces.front().normal.size();
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != dim) {
      throw DimensionError("halfspaces live in different dimensions");
    }
  }
  BaseSet s(BaseKind::HalfspaceIntersection);
  s.halfspaces_ = std::move(halfspaces);
  return s;
}

Eigen::Index BaseSet::dim() const {
  switch (kind_) {
    case BaseKind::Box:
      return static_cast<Eigen::Index>(bounds_.size());
    case BaseKind::Ball:
      return center_.size();
    case BaseKind::HalfspaceIntersection:
      return halfspaces_.front().normal.size();
  }
  return 0;
}

Eigen::VectorXd BaseSet::project(const Eigen::VectorXd& v) const {
  if (v.size() != dim()) {
    throw DimensionError("vector dimension does not match the base set");
  }
  switch (kind_) {
    case BaseKind::Box:
      return project_box(bounds_, v);
    case BaseKind::Ball: {
      const Eigen::VectorXd d = v - center_;
      const double dist = d.norm();
      if (dist <= radius_) return v;
      return center_ + (radius_ / dist) * d;
    }
    case BaseKind::HalfspaceIntersection:
      if (halfspaces_.size() == 1) return project_halfspace(halfspaces_[0], v);
      return project_halfspaces(halfspaces_, v);
  }
  return v;
}

bool BaseSet::contains(const Eigen::VectorXd& v, double tol) const {
  if (v.size() != dim()) {
    throw DimensionError("vector dimension does not match the base set");
  }
  switch (kind_) {
    case BaseKind::Box:
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        const IntervalBound& b = bounds_[static_cast<size_t>(i)];
        if (v[i] < b.lower - tol || v[i] > b.upper + tol) return false;
      }
      return true;
    case BaseKind::Ball:
      return (v - center_).norm() <= radius_ + tol;
    case BaseKind::HalfspaceIntersection:
      for (const Halfspace& h : halfspaces_) {
        if ((v - h.anchor).dot(h.normal) > tol) return false;
      }
      return true;
  }
  return false;
}

BaseSet BaseSet::translated(const Eigen::VectorXd& shift) const {
  if (shift.size() != dim()) {
    throw DimensionError("shift dimension does not match the base set");
  }
  switch (kind_) {
    case BaseKind::Box: {
      std::vector<IntervalBound> moved;
      moved.reserve(bounds_.size());
      for (Eigen::Index i = 0; i < shift.size(); ++i) {
        const IntervalBound& b = bounds_[static_cast<size_t>(i)];
        moved.emplace_back(b.lower + shift[i], b.upper + shift[i]);
      }
      return box(std::move(moved));
    }
    case BaseKind::Ball:
      return ball(center_ + shift, radius_);
    case BaseKind::HalfspaceIntersection: {
      std::vector<Halfspace> moved;
      moved.reserve(halfspaces_.size());
      for (const Halfspace& h : halfspaces_) {
        moved.emplace_back(h.normal, h.anchor + shift);
      }
      return halfspace_intersection(std::move(moved));
    }
  }
  return *this;
}

const std::vector<IntervalBound>& BaseSet::box_bounds() const {
  if (kind_ != BaseKind::Box) throw DimensionError("base set is not a box");
  return bounds_;
}

const Eigen::VectorXd& BaseSet::ball_center() const {
  if (kind_ != BaseKind::Ball) throw DimensionError("base set is not a ball");
  return center_;
}

double BaseSet::ball_radius() const {
  if (kind_ != BaseKind::Ball) throw DimensionError("base set is not a ball");
  return radius_;
}

const std::vector<Halfspace>& BaseSet::halfspaces() const {
  if (kind_ != BaseKind::HalfspaceIntersection) {
    throw DimensionError("base set is not a halfspace intersection");
  }
  return halfspaces_;
}

// ---------------------------------------------------------------------------
// Cylinders
// ---------------------------------------------------------------------------

CylinderSet::CylinderSet(Eigen::Index p, BaseSet base)
    : p_(p), base_(std::move(base)) {
  if (p < 1) throw DimensionError("cylinder needs p >= 1");
}

SplitPoint CylinderSet::project(const SplitPoint& z) const {
  if (z.p() != p_ || z.q() != q()) {
    throw DimensionError("point shape does not match the cylinder");
  }
  return SplitPoint(z.x(), base_.project(z.u()));
}

bool CylinderSet::contains(const SplitPoint& z, double tol) const {
  if (z.p() != p_ || z.q() != q()) {
    throw DimensionError("point shape does not match the cylinder");
  }
  return base_.contains(z.u(), tol);
}

SplitPoint project_cylinder(const CylinderSet& cylinder, const SplitPoint& z) {
  return cylinder.project(z);
}

// ---------------------------------------------------------------------------
// Isotonicity classification
// ---------------------------------------------------------------------------

bool is_isotone_halfspace_set(const ExtendedLorentzCone& cone,
                              const std::vector<Halfspace>& halfspaces) {
  if (cone.p() == 1 || cone.q() == 1) {
    throw UnsupportedCaseError(
        "the halfspace criterion applies only for p > 1 and q > 1; "
        "use the cylinder test otherwise");
  }
  const Eigen::Index p = cone.p();
  const Eigen::Index q = cone.q();
  const double tol = 1e-12;
  const double half_sqrt2 = std::sqrt(2.0) / 2.0;
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != p + q) {
      throw DimensionError("halfspace normal does not live in R^{p+q}");
    }
    const auto a = h.normal.head(p);
    const auto u = h.normal.tail(q);
    if (a.norm() <= tol) continue;  // condition (a)
    if (u.norm() > tol) return false;
    Eigen::Index plus = 0, minus = 0, zero = 0;
    for (Eigen::Index i = 0; i < p; ++i) {
      if (std::abs(a[i] - half_sqrt2) <= tol) {
        ++plus;
      } else if (std::abs(a[i] + half_sqrt2) <= tol) {
        ++minus;
      } else if (std::abs(a[i]) <= tol) {
        ++zero;
      } else {
        return false;
      }
    }
    if (plus != 1 || minus != 1 || plus + minus + zero != p) return false;
  }
  return true;
}

std::optional<std::pair<SplitPoint, SplitPoint>> box_isotonicity_counterexample(
    const ExtendedLorentzCone& cone, const std::vector<IntervalBound>& box) {
  const Eigen::Index p = cone.p();
  const Eigen::Index q = cone.q();
  if (static_cast<Eigen::Index>(box.size()) != p + q) {
    throw DimensionError("box must have p + q intervals");
  }

  // Locate a clamped x-coordinate. None means K is a cylinder.
  Eigen::Index clamp_index = -1;
  bool clamp_above = false;
  for (Eigen::Index i = 0; i < p; ++i) {
    const IntervalBound& b = box[static_cast<size_t>(i)];
    if (b.bounded_above()) {
      clamp_index = i;
      clamp_above = true;
      break;
    }
    if (b.bounded_below()) {
      clamp_index = i;
      clamp_above = false;
      break;
    }
  }
  if (clamp_index < 0) return std::nullopt;

  // Two distinct u-part points of C: a representative plus a step in the
  // first u-coordinate that stays inside its interval.
  Eigen::VectorXd u(q);
  for (Eigen::Index j = 0; j < q; ++j) {
    u[j] = mid(box[static_cast<size_t>(p + j)], 0.0);
  }
  const IntervalBound& first = box[static_cast<size_t>(p)];
  const double room_up = first.upper - u[0];
  const double room_down = u[0] - first.lower;
  double step = 0.0;
  if (room_up > 0.0) {
    step = std::min(1.0, room_up);
  } else if (room_down > 0.0) {
    step = -std::min(1.0, room_down);
  }
  if (step == 0.0) {
    throw DegenerateBaseError(
        "the u-part box admits no second point; cannot separate projections");
  }
  Eigen::VectorXd v = u;
  v[0] += step;
  const double dist = (v - u).norm();
  if (!(dist > 0.0)) {
    throw DegenerateBaseError(
        "the u-part box admits no second point; cannot separate projections");
  }

  // Proof construction: both x-parts clamp identically at clamp_index while
  // the pair differs by at least dist * e there, so the projected
  // x-difference vanishes at that coordinate and cannot dominate ||v - u||.
  Eigen::VectorXd x_lo = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd x_hi(p);
  if (clamp_above) {
    x_lo[clamp_index] = box[static_cast<size_t>(clamp_index)].upper;
    x_hi = x_lo.array() + dist;
    while (x_hi[clamp_index] - x_lo[clamp_index] < dist) {
      x_hi[clamp_index] = std::nextafter(x_hi[clamp_index], kInf);
    }
  } else {
    x_hi = Eigen::VectorXd::Zero(p);
    x_hi[clamp_index] = box[static_cast<size_t>(clamp_index)].lower;
    x_lo = x_hi.array() - dist;
    while (x_hi[clamp_index] - x_lo[clamp_index] < dist) {
      x_lo[clamp_index] = std::nextafter(x_lo[clamp_index], -kInf);
    }
  }
  return std::make_pair(SplitPoint(x_lo, u), SplitPoint(x_hi, v));
}

}  // namespace vicyl
