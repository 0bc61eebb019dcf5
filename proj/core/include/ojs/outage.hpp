// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ojs/channel.hpp"
#include "ojs/rng.hpp"

#include <vector>

namespace ojs {

/// Monte Carlo draws of the eavesdropper's interference-limited rate under
/// fresh channel draws; the raw material for outage statements about
/// transmission at a fixed secrecy-rate target.
struct OutageSamples {
  std::vector<double> values;  // one saturated eavesdropper rate per trial
  SystemConfig config;
  std::uint64_t master_seed = 0;
};

/// Draws `trials` independent saturated eavesdropper rates. Trial t uses the
/// substream (id, t), so the sample set is independent of evaluation order
/// and any two disjoint trial ranges are independent.
OutageSamples sample_eve_rate_distribution(const SystemConfig& config, int trials,
                                           const SeededRng& id);

/// Empirical probability that the eavesdropper rate reaches `r`:
/// fraction of samples >= r. Non-increasing in r.
double outage_probability(const OutageSamples& samples, double r);

/// Smallest sample value r with outage_probability(samples, r) <= epsilon,
/// i.e. the empirical upper quantile, so the round trip
/// outage_probability(samples, rate_for_outage(samples, eps)) <= eps always
/// holds. Returns +infinity when epsilon < 1/n and no sample qualifies.
/// Throws EmptySamples.
double rate_for_outage(const OutageSamples& samples, double epsilon);

}  // namespace ojs
