#include "rssloc/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rssloc {

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void validate(const PathLossModel& model) {
  if (!(model.ref_distance_m > 0)) {
    throw std::invalid_argument("path-loss model: ref_distance_m must be > 0");
  }
  if (!(model.exponent > 0)) {
    throw std::invalid_argument("path-loss model: exponent must be > 0");
  }
  if (!(model.shadow_sigma_db >= 0)) {
    throw std::invalid_argument(
        "path-loss model: shadow_sigma_db must be >= 0");
  }
  if (!std::isfinite(model.transmit_power_dbm) ||
      !std::isfinite(model.ref_loss_db)) {
    throw std::invalid_argument("path-loss model: parameters must be finite");
  }
}

void validate(const Deployment& deployment) {
  if (deployment.rsus.empty()) {
    throw std::invalid_argument("deployment: at least one RSU required");
  }
  for (std::size_t i = 0; i < deployment.rsus.size(); ++i) {
    const Position& p = deployment.rsus[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("deployment: RSU " + std::to_string(i) +
                                  " has non-finite coordinates");
    }
    for (std::size_t j = i + 1; j < deployment.rsus.size(); ++j) {
      if (p.x == deployment.rsus[j].x && p.y == deployment.rsus[j].y) {
        throw std::invalid_argument("deployment: RSUs " + std::to_string(i) +
                                    " and " + std::to_string(j) +
                                    " share a position");
      }
    }
  }
}

void validate(const Dataset& dataset) {
  validate(dataset.model);
  validate(dataset.deployment);
  const std::size_t n_rsus = dataset.deployment.size();
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    if (dataset.samples[i].rss.size() != n_rsus) {
      throw std::invalid_argument(
          "dataset: sample " + std::to_string(i) + " has " +
          std::to_string(dataset.samples[i].rss.size()) + " RSS values, " +
          "deployment has " + std::to_string(n_rsus) + " RSUs");
    }
  }
  if (dataset.split) {
    // train/test must be disjoint and together cover every sample
    std::vector<int> seen(dataset.samples.size(), 0);
    const auto mark = [&](const std::vector<std::size_t>& idx,
                          const char* part) {
      for (std::size_t i : idx) {
        if (i >= seen.size()) {
          throw std::invalid_argument(std::string("dataset split: ") + part +
                                      " index " + std::to_string(i) +
                                      " out of range");
        }
        if (seen[i]++) {
          throw std::invalid_argument("dataset split: sample " +
                                      std::to_string(i) +
                                      " appears more than once");
        }
      }
    };
    mark(dataset.split->train, "train");
    mark(dataset.split->test, "test");
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) {
        throw std::invalid_argument("dataset split: sample " +
                                    std::to_string(i) +
                                    " belongs to neither part");
      }
    }
  }
}

}  // namespace rssloc
