#pragma once

#include <cstddef>
#include <vector>

#include "rssloc/rng.hpp"
#include "rssloc/types.hpp"

namespace rssloc {

// Axis-aligned measurement area [0, width] x [0, height] in meters.
struct Area {
  double width_m = 200.0;
  double height_m = 200.0;
};

// Mean path loss in dB at the given distance. The model is not defined below
// its reference distance; smaller distances are rejected.
double mean_path_loss(const PathLossModel& model, double distance_m);

// One RSS vector for a transmitter at `truth`:
//   r_i = transmit_power_dbm - mean_path_loss(d_i) - X_i,
// with X_i ~ N(0, shadow_sigma_db^2) drawn independently per RSU in
// deployment order.
std::vector<double> sample_rss(const PathLossModel& model,
                               const Deployment& deployment,
                               const Position& truth, Rng& rng);

// Synthetic measurement campaign over a regular grid covering `area`
// (spacing grid_spacing_m, boundary included, rows enumerated y-major with x
// varying fastest, `repeats_per_point` consecutive samples per point).
// Grid points closer than ref_distance_m to any RSU are skipped; the number
// of skipped points is reported through `skipped_grid_points` when non-null.
// The sample order is randomized by `rng` after generation.
Dataset generate_campaign(const PathLossModel& model,
                          const Deployment& deployment, const Area& area,
                          double grid_spacing_m, int repeats_per_point,
                          Rng& rng,
                          std::size_t* skipped_grid_points = nullptr);

// Uniformly random disjoint train/test split with
// |test| = round(test_fraction * total); both parts must end up non-empty.
Dataset split_dataset(Dataset dataset, double test_fraction, Rng& rng);

}  // namespace rssloc
