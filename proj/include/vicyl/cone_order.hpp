// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "vicyl/split_point.hpp"

namespace vicyl {

/// The extended Lorentz cone
///
///   L  = { (x, u) in R^p x R^q : x >= ||u|| e }
///   L* = { (x, u) : x'e >= ||u||, x >= 0 }
///
/// together with the partial order it defines, a <=_L b iff b - a in L.
/// For p = 1, L is the classical (q+1)-dimensional Lorentz cone.
///
/// Membership and order tests share a single nonnegative comparison slack:
/// tol = 0 keeps them exact for rational-friendly data, 1e-12 is the
/// solver-facing default.
class ExtendedLorentzCone {
 public:
  ExtendedLorentzCone(Eigen::Index p, Eigen::Index q, double tol = 0.0);

  Eigen::Index p() const { return p_; }
  Eigen::Index q() const { return q_; }
  double tol() const { return tol_; }

  /// z in L:  min_i x_i >= ||u|| - tol.
  bool contains(const SplitPoint& z) const;

  /// z in L*:  sum_i x_i >= ||u|| - tol  and  min_i x_i >= -tol.
  bool dual_contains(const SplitPoint& z) const;

  /// a <=_L b, i.e. contains(b - a).
  bool leq(const SplitPoint& a, const SplitPoint& b) const;

  /// Same cone with a different comparison slack.
  ExtendedLorentzCone with_tol(double tol) const {
    return ExtendedLorentzCone(p_, q_, tol);
  }

 private:
  void require_shape(const SplitPoint& z) const;

  Eigen::Index p_;
  Eigen::Index q_;
  double tol_;
};

enum class ConeSide { Primal, Dual };

/// A minimal generator list for L or L* in the polyhedral case q = 1.
struct GeneratorSet {
  ConeSide side;
  std::vector<SplitPoint> points;
};

/// Minimal generators of L (Primal) or L* (Dual); defined only for q = 1,
/// the one case where these cones are polyhedral.
///
/// Primal, p = 1: {(1,1), (1,-1)}.  Primal, p > 1: {(e,1), (e,-1)} plus the
/// p points (e^i, 0), giving p+2 generators.  Dual: {(e^i, 1), (e^i, -1)},
/// 2p generators.
///
/// Throws UnsupportedCaseError when cone.q() != 1; the ball cross-sections
/// for q > 1 admit no finite generator list and are never approximated here.
GeneratorSet generators(const ExtendedLorentzCone& cone, ConeSide side);

/// Every primal generator paired with every dual generator has inner
/// product >= 0 (q = 1 implicit).
bool dual_pairing_nonnegative(Eigen::Index p);

}  // namespace vicyl
