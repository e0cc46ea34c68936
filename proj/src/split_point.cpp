// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/split_point.hpp"

#include <cstdio>
#include <utility>

namespace vicyl {

namespace {

void require_finite(const Eigen::VectorXd& v, const char* part) {
  if (!v.allFinite()) {
    throw DimensionError(std::string("non-finite entry in the ") + part +
                         " part of a point");
  }
}

}  // namespace

SplitPoint::SplitPoint(Eigen::VectorXd x, Eigen::VectorXd u)
    : x_(std::move(x)), u_(std::move(u)) {
  if (x_.size() < 1 || u_.size() < 1) {
    throw DimensionError("a split point needs p >= 1 and q >= 1");
  }
  require_finite(x_, "x");
  require_finite(u_, "u");
}

SplitPoint SplitPoint::from_flat(const Eigen::VectorXd& z, Eigen::Index p) {
  if (p < 1 || z.size() <= p) {
    throw DimensionError("flat vector too short for the requested split");
  }
  return SplitPoint(z.head(p), z.tail(z.size() - p));
}

Eigen::VectorXd SplitPoint::flat() const {
  Eigen::VectorXd z(p() + q());
  z << x_, u_;
  return z;
}

double SplitPoint::norm() const { return flat().norm(); }

std::string SplitPoint::to_string() const {
  std::string s = "(";
  char buf[40];
  for (Eigen::Index i = 0; i < x_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", x_[i]);
    if (i > 0) s += ", ";
    s += buf;
  }
  s += " | ";
  for (Eigen::Index i = 0; i < u_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", u_[i]);
    if (i > 0) s += ", ";
    s += buf;
  }
  s += ")";
  return s;
}

SplitPoint operator+(const SplitPoint& a, const SplitPoint& b) {
  require_same_shape(a, b);
  return SplitPoint(a.x_ + b.x_, a.u_ + b.u_);
}

SplitPoint operator-(const SplitPoint& a, const SplitPoint& b) {
  require_same_shape(a, b);
  return SplitPoint(a.x_ - b.x_, a.u_ - b.u_);
}

SplitPoint operator*(double t, const SplitPoint& a) {
  return SplitPoint(t * a.x_, t * a.u_);
}

bool operator==(const SplitPoint& a, const SplitPoint& b) {
  return a.x_ == b.x_ && a.u_ == b.u_;
}

void require_same_shape(const SplitPoint& a, const SplitPoint& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("split points have different (p, q) shapes");
  }
}

}  // namespace vicyl
