// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/cone_order.hpp"

namespace vicyl {

ExtendedLorentzCone::ExtendedLorentzCone(Eigen::Index p, Eigen::Index q,
                                         double tol)
    : p_(p), q_(q), tol_(tol) {
  if (p < 1 || q < 1) {
    throw DimensionError("extended Lorentz cone needs p >= 1 and q >= 1");
  }
  if (!(tol >= 0.0)) {
    throw DimensionError("comparison tolerance must be nonnegative");
  }
}

void ExtendedLorentzCone::require_shape(const SplitPoint& z) const {
  if (z.p() != p_ || z.q() != q_) {
    throw DimensionError("point shape does not match the cone's (p, q)");
  }
}

bool ExtendedLorentzCone::contains(const SplitPoint& z) const {
  require_shape(z);
  return z.x().minCoeff() >= z.u().norm() - tol_;
}

bool ExtendedLorentzCone::dual_contains(const SplitPoint& z) const {
  require_shape(z);
  return z.x().sum() >= z.u().norm() - tol_ && z.x().minCoeff() >= -tol_;
}

bool ExtendedLorentzCone::leq(const SplitPoint& a, const SplitPoint& b) const {
  require_shape(a);
  require_shape(b);
  return contains(b - a);
}

namespace {

SplitPoint make_generator(const Eigen::VectorXd& x, double u1) {
  Eigen::VectorXd u(1);
  u << u1;
  return SplitPoint(x, u);
}

}  // namespace

GeneratorSet generators(const ExtendedLorentzCone& cone, ConeSide side) {
  if (cone.q() != 1) {
    throw UnsupportedCaseError(
        "generator lists exist only for q = 1; the cone is polyhedral "
        "if and only if q = 1");
  }
  const Eigen::Index p = cone.p();
  GeneratorSet set{side, {}};
  if (side == ConeSide::Primal) {
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(p);
    set.points.push_back(make_generator(ones, 1.0));
    set.points.push_back(make_generator(ones, -1.0));
    if (p > 1) {
      for (Eigen::Index i = 0; i < p; ++i) {
        set.points.push_back(make_generator(Eigen::VectorXd::Unit(p, i), 0.0));
      }
    }
  } else {
    for (Eigen::Index i = 0; i < p; ++i) {
      const Eigen::VectorXd ei = Eigen::VectorXd::Unit(p, i);
      set.points.push_back(make_generator(ei, 1.0));
      set.points.push_back(make_generator(ei, -1.0));
    }
  }
  return set;
}

bool dual_pairing_nonnegative(Eigen::Index p) {
  const ExtendedLorentzCone cone(p, 1, 0.0);
  const GeneratorSet primal = generators(cone, ConeSide::Primal);
  const GeneratorSet dual = generators(cone, ConeSide::Dual);
  for (const SplitPoint& g : primal.points) {
    for (const SplitPoint& d : dual.points) {
      if (g.flat().dot(d.flat()) < 0.0) return false;
    }
  }
  return true;
}

}  // namespace vicyl
