#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rssloc {

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;
};

double distance(const Position& a, const Position& b);

// Log-normal shadowing channel: the loss at distance d is
// ref_loss_db + 10 * exponent * log10(d / ref_distance_m) plus zero-mean
// Gaussian noise with standard deviation shadow_sigma_db (all in dB).
struct PathLossModel {
  double transmit_power_dbm = 20.0;
  double ref_loss_db = 40.0;
  double ref_distance_m = 1.0;
  double exponent = 3.0;
  double shadow_sigma_db = 5.0;
};

// The fixed receivers (road side units) at publicly known positions.
struct Deployment {
  std::vector<Position> rsus;

  std::size_t size() const { return rsus.size(); }
};

// One measurement: where the transmitter really was and the RSS vector
// (dBm, one entry per RSU, in deployment order) observed there.
struct LabeledSample {
  Position position;
  std::vector<double> rss;
};

// Disjoint index sets into Dataset::samples that together cover it.
struct DatasetSplit {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

struct Dataset {
  Deployment deployment;
  PathLossModel model;
  std::vector<LabeledSample> samples;
  std::optional<DatasetSplit> split;
};

// Each throws std::invalid_argument naming the violated constraint.
void validate(const PathLossModel& model);
void validate(const Deployment& deployment);
void validate(const Dataset& dataset);

}  // namespace rssloc
