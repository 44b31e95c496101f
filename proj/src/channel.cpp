#include "rssloc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rssloc {

double mean_path_loss(const PathLossModel& model, double distance_m) {
  validate(model);
  if (!(distance_m >= model.ref_distance_m)) {
    throw std::invalid_argument(
        "mean_path_loss: distance " + std::to_string(distance_m) +
        " m is below the reference distance " +
        std::to_string(model.ref_distance_m) + " m");
  }
  return model.ref_loss_db +
         10.0 * model.exponent * std::log10(distance_m / model.ref_distance_m);
}

std::vector<double> sample_rss(const PathLossModel& model,
                               const Deployment& deployment,
                               const Position& truth, Rng& rng) {
  validate(deployment);
  std::vector<double> rss;
  rss.reserve(deployment.size());
  for (const Position& rsu : deployment.rsus) {
    const double d = distance(truth, rsu);
    const double loss = mean_path_loss(model, d);
    rss.push_back(model.transmit_power_dbm - loss -
                  model.shadow_sigma_db * rng.normal());
  }
  return rss;
}

Dataset generate_campaign(const PathLossModel& model,
                          const Deployment& deployment, const Area& area,
                          double grid_spacing_m, int repeats_per_point,
                          Rng& rng, std::size_t* skipped_grid_points) {
  validate(model);
  validate(deployment);
  if (!(area.width_m > 0) || !(area.height_m > 0)) {
    throw std::invalid_argument("generate_campaign: degenerate area");
  }
  if (!(grid_spacing_m > 0)) {
    throw std::invalid_argument("generate_campaign: grid spacing must be > 0");
  }
  if (repeats_per_point < 1) {
    throw std::invalid_argument(
        "generate_campaign: repeats_per_point must be >= 1");
  }

  // Grid cross sections including both boundaries; the epsilon keeps e.g.
  // 200 / 5 from flooring to 39 intervals under floating-point division.
  const auto axis_count = [&](double extent) {
    return static_cast<std::size_t>(
               std::floor(extent / grid_spacing_m + 1e-9)) +
           1;
  };
  const std::size_t nx = axis_count(area.width_m);
  const std::size_t ny = axis_count(area.height_m);

  Dataset ds;
  ds.deployment = deployment;
  ds.model = model;
  std::size_t skipped = 0;
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const Position p{static_cast<double>(ix) * grid_spacing_m,
                       static_cast<double>(iy) * grid_spacing_m};
      bool too_close = false;
      for (const Position& rsu : deployment.rsus) {
        if (distance(p, rsu) < model.ref_distance_m) {
          too_close = true;
          break;
        }
      }
      if (too_close) {
        ++skipped;
        continue;
      }
      for (int rep = 0; rep < repeats_per_point; ++rep) {
        ds.samples.push_back({p, sample_rss(model, deployment, p, rng)});
      }
    }
  }
  if (skipped_grid_points) *skipped_grid_points = skipped;
  if (ds.samples.empty()) {
    throw std::runtime_error(
        "generate_campaign: empty campaign, all " + std::to_string(skipped) +
        " grid points lie within the reference distance of an RSU");
  }
  rng.shuffle(ds.samples);
  return ds;
}

Dataset split_dataset(Dataset dataset, double test_fraction, Rng& rng) {
  validate(dataset);
  if (!(test_fraction > 0) || !(test_fraction < 1)) {
    throw std::invalid_argument(
        "split_dataset: test_fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.samples.size();
  const auto n_test = static_cast<std::size_t>(
      std::llround(test_fraction * static_cast<double>(n)));
  if (n_test == 0 || n_test >= n) {
    throw std::invalid_argument(
        "split_dataset: split would leave an empty partition (" +
        std::to_string(n_test) + " of " + std::to_string(n) +
        " samples in test)");
  }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  rng.shuffle(idx);

  DatasetSplit split;
  split.test.assign(idx.begin(), idx.begin() + static_cast<long>(n_test));
  split.train.assign(idx.begin() + static_cast<long>(n_test), idx.end());
  std::sort(split.test.begin(), split.test.end());
  std::sort(split.train.begin(), split.train.end());
  dataset.split = std::move(split);
  return dataset;
}

}  // namespace rssloc
