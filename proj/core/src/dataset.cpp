#include "alcurve/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "alcurve/errors.hpp"
#include "alcurve/rng.hpp"

namespace alcurve {

int Dataset::index_of(int id) const {
  for (int i = 0; i < n; ++i) {
    if (ids[i] == id) return i;
  }
  return -1;
}

Dataset Dataset::subset(const std::vector<int>& keep_ids) const {
  std::unordered_map<int, int> row_of;
  row_of.reserve(ids.size());
  for (int i = 0; i < n; ++i) row_of.emplace(ids[i], i);

  Dataset out;
  out.n = static_cast<int>(keep_ids.size());
  out.d = d;
  out.features.reserve(static_cast<std::size_t>(out.n) * d);
  out.labels.reserve(out.n);
  out.ids = keep_ids;
  for (const int id : keep_ids) {
    const int i = row_of.at(id);
    const auto r = row(i);
    out.features.insert(out.features.end(), r.begin(), r.end());
    out.labels.push_back(labels[i]);
  }
  return out;
}

Dataset gen_synthetic(int n, double positive_fraction, std::uint64_t seed) {
  if (n < 2) {
    throw BadFraction("gen_synthetic: need at least 2 samples");
  }
  if (!(positive_fraction > 0.0 && positive_fraction < 1.0)) {
    throw BadFraction("gen_synthetic: positive_fraction must lie in (0, 1)");
  }
  const int n_minority = static_cast<int>(std::llround(n * positive_fraction));
  if (n_minority == 0 || n_minority == n) {
    throw BadFraction("gen_synthetic: fraction rounds a class to zero samples");
  }

  Rng rng(derive_seed(seed, 0xda7a));
  Dataset ds;
  ds.n = n;
  ds.d = 2;
  ds.features.resize(static_cast<std::size_t>(n) * 2);
  ds.labels.resize(n);
  ds.ids.resize(n);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);

  for (int i = 0; i < n; ++i) {
    // The first n_minority slots of the shuffled order are class 1 at
    // (2.5, 2.5); the rest class 0 at the origin.
    const int row = order[i];
    const bool minority = i < n_minority;
    const double cx = minority ? 2.5 : 0.0;
    ds.features[2 * row] = cx + rng.normal();
    ds.features[2 * row + 1] = cx + rng.normal();
    ds.labels[row] = minority ? 1 : 0;
    ds.ids[row] = row;
  }
  return ds;
}

std::pair<Dataset, Dataset> split_eval(const Dataset& ds, double eval_fraction,
                                       std::uint64_t seed) {
  if (!(eval_fraction > 0.0 && eval_fraction < 1.0)) {
    throw BadFraction("split_eval: eval_fraction must lie in (0, 1)");
  }
  std::map<int, std::vector<int>> by_class;
  for (int i = 0; i < ds.n; ++i) by_class[ds.labels[i]].push_back(ds.ids[i]);

  Rng rng(derive_seed(seed, 0x5e17));
  std::vector<int> eval_ids;
  std::vector<int> al_ids;
  for (auto& [label, members] : by_class) {
    const int n_eval =
        static_cast<int>(std::llround(static_cast<double>(members.size()) * eval_fraction));
    if (n_eval == 0 || n_eval == static_cast<int>(members.size())) {
      throw TooSmallClass("split_eval: class " + std::to_string(label) + " with " +
                          std::to_string(members.size()) +
                          " samples cannot populate both sides");
    }
    rng.shuffle(members);
    eval_ids.insert(eval_ids.end(), members.begin(), members.begin() + n_eval);
    al_ids.insert(al_ids.end(), members.begin() + n_eval, members.end());
  }
  std::sort(eval_ids.begin(), eval_ids.end());
  std::sort(al_ids.begin(), al_ids.end());
  return {ds.subset(al_ids), ds.subset(eval_ids)};
}

}  // namespace alcurve
