// SPDX-License-Identifier: Apache-2.0
#include "ojs/outage.hpp"

#include <algorithm>
#include <limits>

#include "ojs/errors.hpp"
#include "ojs/rates.hpp"

namespace ojs {

OutageSamples sample_eve_rate_distribution(const SystemConfig& config, int trials,
                                           const SeededRng& id) {
  if (trials < 1) throw EmptySamples("need at least one trial");
  OutageSamples out;
  out.config = config;
  out.master_seed = id.master_seed;
  out.values.reserve(static_cast<std::size_t>(trials));
  const Rng base(id);
  std::vector<Eigen::MatrixXcd> jam(static_cast<std::size_t>(config.k));
  for (int t = 0; t < trials; ++t) {
    // One substream per trial: the sample set does not depend on evaluation
    // order, and disjoint trial ranges are independent.
    Rng rng = base.substream(static_cast<std::uint64_t>(t));
    const Eigen::MatrixXcd g0 = draw_gaussian_matrix(config.ne, config.nt, rng);
    for (int k = 0; k < config.k; ++k)
      jam[static_cast<std::size_t>(k)] = draw_gaussian_matrix(config.ne, config.nj, rng);
    out.values.push_back(eve_saturated_rate(g0, jam, config));
  }
  return out;
}

double outage_probability(const OutageSamples& samples, double r) {
  if (samples.values.empty()) throw EmptySamples("no rate samples");
  const auto hits = std::count_if(samples.values.begin(), samples.values.end(),
                                  [r](double v) { return v >= r; });
  return static_cast<double>(hits) / static_cast<double>(samples.values.size());
}

double rate_for_outage(const OutageSamples& samples, double epsilon) {
  if (samples.values.empty()) throw EmptySamples("no rate samples");
  std::vector<double> sorted = samples.values;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  // Smallest sample value whose exceedance probability is within epsilon.
  // Scanning first occurrences handles ties exactly.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    const double exceedance = static_cast<double>(sorted.size() - i) / n;
    if (exceedance <= epsilon) return sorted[i];
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace ojs
