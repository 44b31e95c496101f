#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rssloc/types.hpp"

namespace rssloc {

// Raised when the RSU geometry carries no usable position information at a
// point (transmitter on top of an RSU, all RSUs collinear with it, ...).
// Callers that scan many points catch this to exclude the point instead of
// aborting.
struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symmetric 2x2 Fisher information matrix of the position estimate, 1/m^2.
struct FisherMatrix {
  double i_xx = 0.0;
  double i_xy = 0.0;  // equals i_yx
  double i_yy = 0.0;
};

// Inverse Fisher matrix, m^2: the covariance lower bound for any unbiased
// position estimator. rho_sq = c_xx + c_yy is its scalar summary.
struct PositionCovariance {
  double c_xx = 0.0;
  double c_xy = 0.0;
  double c_yy = 0.0;
  double rho_sq = 0.0;
};

struct ConfidenceEllipse {
  Position center;
  double theta_rad = 0.0;    // major-axis orientation, in [0, 2*pi)
  double semi_major_m = 0.0;
  double semi_minor_m = 0.0;
  double confidence = 0.0;   // = 1 - exp(-k_scale / 2)
  double k_scale = 0.0;
};

// Fisher information of the position under log-normal shadowing with known
// exponent and sigma. With a = 10/ln(10):
//   I_xx = (a g / s)^2 * sum_i (x_i - x0)^2 / d_i^4        (g = exponent,
//   I_yy = (a g / s)^2 * sum_i (y_i - y0)^2 / d_i^4         s = sigma)
//   I_xy = (a g / s)^2 * sum_i (x_i - x0)(y_i - y0) / d_i^4
// Independent of transmit power and reference loss. Needs at least two RSUs,
// sigma > 0, and every RSU at distance >= ref_distance_m from `truth`.
FisherMatrix fisher(const PathLossModel& model, const Deployment& deployment,
                    const Position& truth);

// Closed-form 2x2 inverse; throws GeometryError unless the Fisher matrix is
// positive definite.
PositionCovariance crb_covariance(const FisherMatrix& f);

// K = -2 ln(1 - confidence); semi axes are sqrt(K * lambda) along the
// covariance eigenvectors, theta the angle of the principal eigenvector.
ConfidenceEllipse confidence_ellipse(const PositionCovariance& cov,
                                     const Position& center,
                                     double confidence);

// Membership test
//   [cos(t) dx + sin(t) dy]^2 / semi_major^2
//     + [sin(t) dx - cos(t) dy]^2 / semi_minor^2  <= 1
// with (dx, dy) the offset from the ellipse center. The denominators are the
// squared semi-axis lengths; that is the only scaling under which the
// containment rate of Gaussian samples reproduces 1 - exp(-K/2).
bool ellipse_contains(const ConfidenceEllipse& e, const Position& p);

// n_points boundary samples, counter-clockwise from the major axis.
std::vector<Position> ellipse_boundary(const ConfidenceEllipse& e,
                                       int n_points);

// CRB on a single ranging estimate under log-normal shadowing:
// ln(10) * shadow_sigma_db * distance / (10 * exponent), in meters.
double distance_crb(double exponent, double shadow_sigma_db,
                    double distance_m);

enum class ErrorNorm { kRms, kSup };

// Inputs of the hidden-layer sizing rule. The rule works on the map from
// mean RSS to distance over d in [d0_m, distance_scale_m]; that map spans an
// RSS interval of width 10 * exponent * log10(D/d0) dB regardless of
// transmit power or reference loss.
struct SizingConfig {
  double exponent = 3.0;
  double shadow_sigma_db = 5.0;
  double distance_scale_m = 100.0;  // D: largest distance the map must cover
  double d0_m = 1.0;
  ErrorNorm error_norm = ErrorNorm::kSup;
  std::optional<double> eval_distance_m;  // CRB threshold distance; D if unset
  double calibration = kDefaultSizingCalibration;
  int max_neurons = 128;
  // Threshold divisor kappa. The default is calibrated so that the reference
  // channel (exponent 3, sigma 5 dB, D = 100 m) is sized at 9 hidden neurons
  // and the sigma 3..8 dB family stays within 5..15.
  static constexpr double kDefaultSizingCalibration = 1.6;
};

// Approximation error, in meters, of the RSS->distance map when replaced by
// `neurons` equal-width steps in RSS, each step taking the map's midpoint
// value: the accuracy a hidden layer of that many saturated units can reach.
// Evaluated numerically on a dense RSS grid under cfg.error_norm.
double rectangle_error(const SizingConfig& cfg, int neurons);

// Smallest neuron count whose rectangle_error drops below
// distance_crb(exponent, sigma, eval_distance) / calibration; throws when
// max_neurons is exhausted.
int size_hidden_layer(const SizingConfig& cfg);

}  // namespace rssloc
