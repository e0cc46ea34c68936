// Copyright 2026 vicyl Contributors
// Licensed under Apache 2.0

#include "vicyl/problems.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "vicyl/errors.hpp"

namespace vicyl {

// ---------------------------------------------------------------------------
// Built-in example
// ---------------------------------------------------------------------------

std::pair<double, double> example_weights(const SplitPoint& z) {
  if (z.p() != 2 || z.q() != 2) {
    throw DimensionError("the built-in example lives in R^2 x R^2");
  }
  const double norm_u = z.u().norm();
  const double f1 = (z.x()[0] + norm_u + 12.0) / 12.0;
  const double f2 = (z.x()[1] + norm_u - 7.2) / 12.0;
  return {f1, f2};
}

MapValue eval_example_map(const SplitPoint& z) {
  const auto [f1, f2] = example_weights(z);
  // (x - G, u - H) = f1 (1, 1, 1/6, 1/3) + f2 (1, 1, 1/3, 1/6).
  Eigen::VectorXd g(2);
  g << z.x()[0] - (f1 + f2), z.x()[1] - (f1 + f2);
  Eigen::VectorXd h(2);
  h << z.u()[0] - (f1 / 6.0 + f2 / 3.0), z.u()[1] - (f1 / 3.0 + f2 / 6.0);
  return {std::move(g), std::move(h)};
}

VIProblem example_problem() {
  std::vector<IntervalBound> bounds{IntervalBound(-10.0, 10.0),
                                    IntervalBound(-10.0, 10.0)};
  CylinderSet domain(2, BaseSet::box(std::move(bounds)));
  return VIProblem(std::move(domain),
                   [](const SplitPoint& z) { return eval_example_map(z); });
}

SplitPoint example_solution() {
  Eigen::VectorXd x(2), u(2);
  x << 8.0 / 15.0, 8.0 / 15.0;
  u << 0.0, 4.0 / 15.0;
  return SplitPoint(std::move(x), std::move(u));
}

SplitPoint example_start() {
  Eigen::VectorXd x(2), u(2);
  x << 43.0 / 30.0, 13.0 / 30.0;
  u << 2.0, 5.0;
  return SplitPoint(std::move(x), std::move(u));
}

// ---------------------------------------------------------------------------
// Affine family
// ---------------------------------------------------------------------------

AffineMap::AffineMap(Eigen::MatrixXd mat, Eigen::VectorXd shift,
                     Eigen::Index p_dim, Eigen::Index q_dim)
    : M(std::move(mat)), r(std::move(shift)), p(p_dim), q(q_dim) {
  if (p < 1 || q < 1) throw DimensionError("affine map needs p, q >= 1");
  const Eigen::Index n = p + q;
  if (M.rows() != n || M.cols() != n || r.size() != n) {
    throw DimensionError("affine map data must be (p+q) x (p+q) and p+q");
  }
  if (!M.allFinite() || !r.allFinite()) {
    throw DimensionError("affine map data must be finite");
  }
}

MapValue AffineMap::operator()(const SplitPoint& z) const {
  if (z.p() != p || z.q() != q) {
    throw MapEvaluationError("point shape does not match the affine map at " +
                             z.to_string());
  }
  const Eigen::VectorXd y = M * z.flat() + r;
  return {y.head(p), y.tail(q)};
}

SplitMap AffineMap::as_map() const {
  return [map = *this](const SplitPoint& z) { return map(z); };
}

// ---------------------------------------------------------------------------
// Ordered-pair sampling
// ---------------------------------------------------------------------------

OrderedPairSampler::OrderedPairSampler(Eigen::Index p, Eigen::Index q,
                                       double scale, long count,
                                       std::uint64_t seed)
    : p_(p), q_(q), scale_(scale), count_(count), rng_(seed) {
  if (p < 1 || q < 1) throw DimensionError("sampler needs p, q >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DimensionError("sampler scale must be positive and finite");
  }
  if (count < 0) throw DimensionError("sampler count must be nonnegative");
}

std::pair<SplitPoint, SplitPoint> OrderedPairSampler::next() {
  std::uniform_real_distribution<double> symmetric(-scale_, scale_);
  std::uniform_real_distribution<double> nonnegative(0.0, scale_);
  Eigen::VectorXd ax(p_), au(q_), d(q_), s(p_);
  for (Eigen::Index i = 0; i < p_; ++i) ax[i] = symmetric(rng_);
  for (Eigen::Index j = 0; j < q_; ++j) au[j] = symmetric(rng_);
  for (Eigen::Index j = 0; j < q_; ++j) d[j] = symmetric(rng_);
  for (Eigen::Index i = 0; i < p_; ++i) s[i] = nonnegative(rng_);
  SplitPoint a(ax, au);
  const double lift = d.norm();
  const Eigen::VectorXd bx = (ax.array() + lift).matrix() + s;
  SplitPoint b(bx, au + d);
  return {std::move(a), std::move(b)};
}

IsotoneReport isotone_harness(const SplitMap& map, OrderedPairSampler& sampler,
                              const ExtendedLorentzCone& cone) {
  IsotoneReport report;
  for (long n = 0; n < sampler.count(); ++n) {
    const auto [a, b] = sampler.next();
    const MapValue fa = map(a);
    const MapValue fb = map(b);
    const SplitPoint ta(a.x() - fa.g, a.u() - fa.h);
    const SplitPoint tb(b.x() - fb.g, b.u() - fb.h);
    if (cone.leq(ta, tb)) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.failing_witnesses.size() < 10) {
        report.failing_witnesses.emplace_back(a, b);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Declarative problem descriptions
// ---------------------------------------------------------------------------

ProblemDescription::ProblemDescription(Eigen::Index p_dim, Eigen::Index q_dim,
                                       BaseSet base_set, MapKind kind,
                                       SplitPoint start_point)
    : p(p_dim),
      q(q_dim),
      base(std::move(base_set)),
      map_kind(kind),
      start(std::move(start_point)) {}

namespace {

using nlohmann::json;

[[noreturn]] void fail_field(const std::string& field, const std::string& why) {
  throw ParseError("field \"" + field + "\": " + why);
}

double parse_endpoint(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    fail_field(field, "expected a number or \"inf\"/\"-inf\", got \"" + s +
                          "\"");
  }
  fail_field(field, "expected a number or \"inf\"/\"-inf\"");
}

Eigen::VectorXd parse_vector(const json& value, Eigen::Index expected,
                             const std::string& field) {
  if (!value.is_array()) fail_field(field, "expected an array of numbers");
  if (static_cast<Eigen::Index>(value.size()) != expected) {
    fail_field(field, "expected " + std::to_string(expected) + " entries, got " +
                          std::to_string(value.size()));
  }
  Eigen::VectorXd out(expected);
  for (Eigen::Index i = 0; i < expected; ++i) {
    const json& entry = value[static_cast<size_t>(i)];
    if (!entry.is_number()) fail_field(field, "entries must be numbers");
    out[i] = entry.get<double>();
  }
  return out;
}

BaseSet parse_base(const json& node, Eigen::Index q) {
  if (!node.is_object()) fail_field("base", "expected an object");
  const std::string kind = node.value("kind", std::string{});
  if (kind == "box") {
    if (!node.contains("bounds") || !node["bounds"].is_array()) {
      fail_field("base.bounds", "expected an array of [lower, upper] pairs");
    }
    const json& raw = node["bounds"];
    if (static_cast<Eigen::Index>(raw.size()) != q) {
      fail_field("base.bounds", "expected q = " + std::to_string(q) +
                                    " intervals");
    }
    std::vector<IntervalBound> bounds;
    bounds.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
      const json& pair = raw[i];
      const std::string field = "base.bounds[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) {
        fail_field(field, "expected [lower, upper]");
      }
      const double lo = parse_endpoint(pair[0], field);
      const double hi = parse_endpoint(pair[1], field);
      try {
        bounds.emplace_back(lo, hi);
      } catch (const Error& e) {
        fail_field(field, e.what());
      }
    }
    return BaseSet::box(std::move(bounds));
  }
  if (kind == "ball") {
    if (!node.contains("center")) fail_field("base.center", "missing");
    if (!node.contains("radius") || !node["radius"].is_number()) {
      fail_field("base.radius", "expected a number");
    }
    try {
      return BaseSet::ball(parse_vector(node["center"], q, "base.center"),
                           node["radius"].get<double>());
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_field("base", e.what());
    }
  }
  if (kind == "halfspaces") {
    if (!node.contains("halfspaces") || !node["halfspaces"].is_array() ||
        node["halfspaces"].empty()) {
      fail_field("base.halfspaces", "expected a nonempty array");
    }
    std::vector<Halfspace> halfspaces;
    for (size_t i = 0; i < node["halfspaces"].size(); ++i) {
      const json& entry = node["halfspaces"][i];
      const std::string field = "base.halfspaces[" + std::to_string(i) + "]";
      if (!entry.is_object()) fail_field(field, "expected an object");
      try {
        halfspaces.emplace_back(
            parse_vector(entry.at("normal"), q, field + ".normal"),
            parse_vector(entry.at("anchor"), q, field + ".anchor"));
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        fail_field(field, e.what());
      }
    }
    return BaseSet::halfspace_intersection(std::move(halfspaces));
  }
  fail_field("base.kind", "expected \"box\", \"ball\" or \"halfspaces\"");
}

Eigen::Index parse_dimension(const json& root, const std::string& field) {
  if (!root.contains(field) || !root[field].is_number_integer()) {
    fail_field(field, "expected a positive integer");
  }
  const auto value = root[field].get<long long>();
  if (value < 1 || value > 1'000'000) {
    fail_field(field, "expected a positive integer (at most 10^6)");
  }
  return static_cast<Eigen::Index>(value);
}

}  // namespace

ProblemDescription parse_problem(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be an object");

  const Eigen::Index p = parse_dimension(root, "p");
  const Eigen::Index q = parse_dimension(root, "q");
  if (!root.contains("base")) fail_field("base", "missing");
  BaseSet base = parse_base(root["base"], q);

  if (!root.contains("map") || !root["map"].is_object()) {
    fail_field("map", "expected an object");
  }
  const json& map_node = root["map"];
  const std::string map_kind_name = map_node.value("kind", std::string{});

  if (!root.contains("start")) fail_field("start", "missing");
  const Eigen::VectorXd start_flat = parse_vector(root["start"], p + q, "start");
  SplitPoint start = SplitPoint::from_flat(start_flat, p);

  MapKind kind = MapKind::Example;
  Eigen::MatrixXd M;
  Eigen::VectorXd r;
  if (map_kind_name == "example") {
    if (p != 2 || q != 2) {
      fail_field("map.kind", "the built-in example requires p = q = 2");
    }
  } else if (map_kind_name == "affine") {
    kind = MapKind::Affine;
    const Eigen::Index n = p + q;
    if (!map_node.contains("M") || !map_node["M"].is_array()) {
      fail_field("map.M", "expected a row-major array of (p+q)^2 numbers");
    }
    const Eigen::VectorXd flat =
        parse_vector(map_node["M"], n * n, "map.M");
    M.resize(n, n);
    for (Eigen::Index row = 0; row < n; ++row) {
      for (Eigen::Index col = 0; col < n; ++col) {
        M(row, col) = flat[row * n + col];
      }
    }
    if (!map_node.contains("r")) fail_field("map.r", "missing");
    r = parse_vector(map_node["r"], n, "map.r");
  } else {
    fail_field("map.kind", "expected \"example\" or \"affine\"");
  }

  ProblemDescription desc(p, q, std::move(base), kind, std::move(start));
  desc.affine_matrix = std::move(M);
  desc.affine_shift = std::move(r);

  if (root.contains("solve")) {
    const json& solve_node = root["solve"];
    if (!solve_node.is_object()) fail_field("solve", "expected an object");
    if (solve_node.contains("max_iters")) {
      if (!solve_node["max_iters"].is_number_integer() ||
          solve_node["max_iters"].get<long long>() < 1) {
        fail_field("solve.max_iters", "expected a positive integer");
      }
      desc.solve.max_iters = solve_node["max_iters"].get<int>();
    }
    const auto read_tol = [&](const char* name, double& target) {
      if (!solve_node.contains(name)) return;
      if (!solve_node[name].is_number() ||
          !(solve_node[name].get<double>() >= 0.0)) {
        fail_field(std::string("solve.") + name,
                   "expected a nonnegative number");
      }
      target = solve_node[name].get<double>();
    };
    read_tol("residual_tol", desc.solve.residual_tol);
    read_tol("order_tol", desc.solve.order_tol);
  }
  return desc;
}

ProblemDescription load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

VIProblem build_problem(const ProblemDescription& desc) {
  CylinderSet domain(desc.p, desc.base);
  if (desc.map_kind == MapKind::Example) {
    return VIProblem(std::move(domain), [](const SplitPoint& z) {
      return eval_example_map(z);
    });
  }
  AffineMap map(desc.affine_matrix, desc.affine_shift, desc.p, desc.q);
  return VIProblem(std::move(domain), map.as_map());
}

}  // namespace vicyl
