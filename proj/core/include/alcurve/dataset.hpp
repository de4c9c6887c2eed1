#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace alcurve {

// Row-major feature matrix with binary labels and stable sample ids.
// Subsets produced by splitting keep the original ids.
struct Dataset {
  int n = 0;
  int d = 0;
  std::vector<double> features;  // n * d, row-major
  std::vector<int> labels;       // values in {0, 1}
  std::vector<int> ids;

  std::span<const double> row(int i) const {
    return {features.data() + static_cast<std::size_t>(i) * d, static_cast<std::size_t>(d)};
  }
  // Row index of a sample id, or -1.
  int index_of(int id) const;
  Dataset subset(const std::vector<int>& keep_ids) const;
};

// Two isotropic unit-variance Gaussian blobs in 2-D: the majority class at
// the origin and round(n * positive_fraction) minority samples at
// (2.5, 2.5). Row order is shuffled; everything is deterministic per seed.
Dataset gen_synthetic(int n, double positive_fraction, std::uint64_t seed);

// Stratified split into (AL set, evaluation set) preserving class fractions
// within one sample per class. Throws TooSmallClass when a class cannot
// contribute at least one sample to each side.
std::pair<Dataset, Dataset> split_eval(const Dataset& ds, double eval_fraction,
                                       std::uint64_t seed);

}  // namespace alcurve
