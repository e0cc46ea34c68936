// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <string>

#include "vicyl/errors.hpp"

namespace vicyl {

/// A point z = (x, u) of R^p x R^q with the p/q split kept explicit.
///
/// Immutable after construction; every entry is finite (infinities belong to
/// interval bounds, never to points). All iterates, bounds and certificate
/// witnesses in the library are SplitPoints.
class SplitPoint {
 public:
  SplitPoint(Eigen::VectorXd x, Eigen::VectorXd u);

  /// Split a flat (p+q)-vector into its x/u parts.
  static SplitPoint from_flat(const Eigen::VectorXd& z, Eigen::Index p);

  const Eigen::VectorXd& x() const { return x_; }
  const Eigen::VectorXd& u() const { return u_; }
  Eigen::Index p() const { return x_.size(); }
  Eigen::Index q() const { return u_.size(); }

  /// Concatenated (x, u) as one vector of length p+q.
  Eigen::VectorXd flat() const;

  bool same_shape(const SplitPoint& other) const {
    return p() == other.p() && q() == other.q();
  }

  /// Euclidean norm on R^{p+q}.
  double norm() const;

  /// "(x1, ..., xp | u1, ..., uq)" with 17 significant digits.
  std::string to_string() const;

  friend SplitPoint operator+(const SplitPoint& a, const SplitPoint& b);
  friend SplitPoint operator-(const SplitPoint& a, const SplitPoint& b);
  friend SplitPoint operator*(double t, const SplitPoint& a);
  friend bool operator==(const SplitPoint& a, const SplitPoint& b);

 private:
  Eigen::VectorXd x_;
  Eigen::VectorXd u_;
};

/// Throws DimensionError unless a and b share the same (p, q) split.
void require_same_shape(const SplitPoint& a, const SplitPoint& b);

}  // namespace vicyl
