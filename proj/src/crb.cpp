#include "rssloc/crb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rssloc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559005768;
}

FisherMatrix fisher(const PathLossModel& model, const Deployment& deployment,
                    const Position& truth) {
  validate(model);
  validate(deployment);
  if (deployment.size() < 2) {
    throw std::invalid_argument("fisher: at least two RSUs required");
  }
  if (!(model.shadow_sigma_db > 0)) {
    throw std::invalid_argument(
        "fisher: shadow_sigma_db must be > 0 (a noiseless channel has "
        "unbounded information)");
  }

  // coef = (a * exponent / sigma)^2 with a = 10/ln(10), kept as the square
  // of a single quotient so scaling sigma by a power of two scales every
  // entry exactly.
  const double a = 10.0 / std::log(10.0);
  const double root = a * model.exponent / model.shadow_sigma_db;
  const double coef = root * root;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < deployment.size(); ++i) {
    const double dx = deployment.rsus[i].x - truth.x;
    const double dy = deployment.rsus[i].y - truth.y;
    const double d_sq = dx * dx + dy * dy;
    if (std::sqrt(d_sq) < model.ref_distance_m) {
      throw GeometryError("fisher: point lies within the reference distance "
                          "of RSU " +
                          std::to_string(i));
    }
    const double d4 = d_sq * d_sq;
    sxx += dx * dx / d4;
    sxy += dx * dy / d4;
    syy += dy * dy / d4;
  }
  return {coef * sxx, coef * sxy, coef * syy};
}

PositionCovariance crb_covariance(const FisherMatrix& f) {
  const double det = f.i_xx * f.i_yy - f.i_xy * f.i_xy;
  if (!(det > 0) || !(f.i_xx > 0) || !std::isfinite(det)) {
    throw GeometryError(
        "crb_covariance: Fisher matrix is singular or indefinite (degenerate "
        "RSU geometry, e.g. all RSUs collinear with the point)");
  }
  PositionCovariance c;
  c.c_xx = f.i_yy / det;
  c.c_xy = -f.i_xy / det;
  c.c_yy = f.i_xx / det;
  c.rho_sq = c.c_xx + c.c_yy;
  return c;
}

ConfidenceEllipse confidence_ellipse(const PositionCovariance& cov,
                                     const Position& center,
                                     double confidence) {
  if (!(confidence > 0) || !(confidence < 1)) {
    throw std::invalid_argument(
        "confidence_ellipse: confidence must lie in (0, 1)");
  }
  const double a = cov.c_xx;
  const double b = cov.c_xy;
  const double c = cov.c_yy;
  if (!(a > 0) || !(a * c - b * b > 0)) {
    throw GeometryError(
        "confidence_ellipse: covariance is not positive definite");
  }

  // Closed-form eigenvalues of the symmetric 2x2 covariance.
  const double mean = 0.5 * (a + c);
  const double diff = 0.5 * (a - c);
  const double disc = std::sqrt(diff * diff + b * b);
  const double lambda_major = mean + disc;
  const double lambda_minor = mean - disc;
  if (!(lambda_minor > 0)) {
    throw GeometryError(
        "confidence_ellipse: covariance is not positive definite");
  }

  // Principal eigenvector: both (b, l-a) and (l-c, b) solve (C - lI)v = 0;
  // take the one with the larger norm to avoid cancellation.
  double vx = b;
  double vy = lambda_major - a;
  const double wx = lambda_major - c;
  const double wy = b;
  if (wx * wx + wy * wy > vx * vx + vy * vy) {
    vx = wx;
    vy = wy;
  }
  double theta = (vx == 0.0 && vy == 0.0) ? 0.0 : std::atan2(vy, vx);
  if (theta < 0) theta += kTwoPi;
  if (theta >= kTwoPi) theta = 0.0;

  ConfidenceEllipse e;
  e.center = center;
  e.confidence = confidence;
  e.k_scale = -2.0 * std::log1p(-confidence);
  e.theta_rad = theta;
  e.semi_major_m = std::sqrt(e.k_scale * lambda_major);
  e.semi_minor_m = std::sqrt(e.k_scale * lambda_minor);
  return e;
}

bool ellipse_contains(const ConfidenceEllipse& e, const Position& p) {
  const double dx = p.x - e.center.x;
  const double dy = p.y - e.center.y;
  const double ct = std::cos(e.theta_rad);
  const double st = std::sin(e.theta_rad);
  const double along = ct * dx + st * dy;
  const double across = st * dx - ct * dy;
  const double q = along * along / (e.semi_major_m * e.semi_major_m) +
                   across * across / (e.semi_minor_m * e.semi_minor_m);
  return q <= 1.0;
}

std::vector<Position> ellipse_boundary(const ConfidenceEllipse& e,
                                       int n_points) {
  if (n_points < 3) {
    throw std::invalid_argument("ellipse_boundary: need at least 3 points");
  }
  const double ct = std::cos(e.theta_rad);
  const double st = std::sin(e.theta_rad);
  std::vector<Position> pts;
  pts.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) {
    const double t = kTwoPi * k / n_points;
    const double u = e.semi_major_m * std::cos(t);
    const double v = e.semi_minor_m * std::sin(t);
    pts.push_back({e.center.x + ct * u - st * v,
                   e.center.y + st * u + ct * v});
  }
  return pts;
}

double distance_crb(double exponent, double shadow_sigma_db,
                    double distance_m) {
  if (!(exponent > 0) || !(shadow_sigma_db > 0) || !(distance_m > 0)) {
    throw std::invalid_argument("distance_crb: all arguments must be > 0");
  }
  return std::log(10.0) * shadow_sigma_db * distance_m / (10.0 * exponent);
}

namespace {

void validate(const SizingConfig& cfg) {
  if (!(cfg.exponent > 0) || !(cfg.shadow_sigma_db > 0) ||
      !(cfg.d0_m > 0) || !(cfg.calibration > 0)) {
    throw std::invalid_argument("sizing config: parameters must be > 0");
  }
  if (!(cfg.distance_scale_m > cfg.d0_m)) {
    throw std::invalid_argument(
        "sizing config: distance_scale_m must exceed d0_m");
  }
  if (cfg.eval_distance_m && !(*cfg.eval_distance_m > 0)) {
    throw std::invalid_argument("sizing config: eval_distance_m must be > 0");
  }
  if (cfg.max_neurons < 1) {
    throw std::invalid_argument("sizing config: max_neurons must be >= 1");
  }
}

}  // namespace

double rectangle_error(const SizingConfig& cfg, int neurons) {
  validate(cfg);
  if (neurons < 1) {
    throw std::invalid_argument("rectangle_error: neurons must be >= 1");
  }

  // Work in the unit coordinate u over the RSS interval of the map: the
  // distance f at mean RSS r is d0 * (D/d0)^(1-u) with u linear in r, so the
  // transmit power and reference loss drop out entirely.
  const double ratio = cfg.distance_scale_m / cfg.d0_m;
  const auto map = [&](double u) {
    return cfg.d0_m * std::pow(ratio, 1.0 - u);
  };
  const int p = neurons;
  std::vector<double> step_value(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    step_value[static_cast<std::size_t>(k)] = map((k + 0.5) / p);
  }

  // Dense evaluation including both endpoints (the sup lives at u = 0).
  constexpr int kSamples = 200001;
  double sup = 0.0;
  double sum_sq = 0.0;
  for (int j = 0; j < kSamples; ++j) {
    const double u = static_cast<double>(j) / (kSamples - 1);
    const int k = std::min(p - 1, static_cast<int>(u * p));
    const double err = step_value[static_cast<std::size_t>(k)] - map(u);
    sup = std::max(sup, std::abs(err));
    sum_sq += err * err;
  }
  return cfg.error_norm == ErrorNorm::kSup ? sup
                                           : std::sqrt(sum_sq / kSamples);
}

int size_hidden_layer(const SizingConfig& cfg) {
  validate(cfg);
  const double eval_d = cfg.eval_distance_m.value_or(cfg.distance_scale_m);
  const double threshold =
      distance_crb(cfg.exponent, cfg.shadow_sigma_db, eval_d) /
      cfg.calibration;
  double best = 0.0;
  for (int p = 1; p <= cfg.max_neurons; ++p) {
    best = rectangle_error(cfg, p);
    if (best < threshold) return p;
  }
  throw std::runtime_error(
      "size_hidden_layer: no neuron count up to " +
      std::to_string(cfg.max_neurons) + " reaches error " +
      std::to_string(threshold) + " m (best " + std::to_string(best) + " m)");
}

}  // namespace rssloc
