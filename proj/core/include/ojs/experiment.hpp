// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ojs/channel.hpp"
#include "ojs/outage.hpp"
#include "ojs/rates.hpp"
#include "ojs/selection.hpp"

namespace ojs {

enum class ExperimentMode { FixedSweep, ScalingSweep, Outage, Covering };

std::string_view mode_name(ExperimentMode mode);

/// Fully resolved experiment description. A config file plus command line
/// overrides produce one of these; the sidecar metadata file echoes it back.
struct ExperimentSpec {
  ExperimentMode mode = ExperimentMode::FixedSweep;
  SystemConfig config;
  bool allow_nonstandard = false;

  std::vector<double> snr_grid_db;  // strictly increasing
  int trials = 100;
  std::vector<SchemeTag> schemes;   // evaluated on shared realizations

  // Pool scaling rule for ScalingSweep: s(power) = max(k, round(c * power^a)).
  std::optional<double> scaling_c;
  std::optional<double> scaling_a;

  double kappa2 = 1.0;    // channel-magnitude bound used by sufficient_jammer_count
  double epsilon = 0.1;   // outage target used by the Outage mode summary

  std::vector<int> covering_ms;     // codebook sizes for Covering mode
  int covering_samples = 2000;      // Monte Carlo samples per covering estimate

  std::uint64_t seed = 0;
  int workers = 1;        // worker threads; output is identical for any value
  bool greedy = false;    // greedy selection instead of exhaustive scans
  std::uint64_t subset_cap = 1000000;  // max C(s, k) an exhaustive scan accepts

  std::string output_path;  // primary CSV path; empty means "<mode>.csv"
};

/// Parses a flat key = value config file (# comments, blank lines ignored).
/// Unknown keys are errors. The mode is not a config key; it comes from the
/// CLI subcommand or is set by the caller.
ExperimentSpec load_spec(const std::string& path);

/// Pool size the scaling rule prescribes at a given transmit power.
int pool_size_for_power(const ExperimentSpec& spec, double power);

/// One CSV row of the per-trial output.
struct TrialRecord {
  double snr_db = 0.0;
  double power = 0.0;
  int pool_size = 0;
  SchemeTag scheme = SchemeTag::OJS1;
  int trial = 0;
  double r_bob = 0.0;
  double c_eve = 0.0;
  double secrecy = 0.0;
  double r_bob_loss = 0.0;
};

/// One CSV row of the per-point summary output.
struct SummaryRecord {
  double snr_db = 0.0;
  double power = 0.0;
  int pool_size = 0;
  SchemeTag scheme = SchemeTag::OJS1;
  double mean_r_bob = 0.0;
  double mean_c_eve = 0.0;
  double mean_secrecy = 0.0;
  double stderr_secrecy = 0.0;
};

/// Degrees-of-freedom slopes fitted per scheme over the top of the SNR grid.
struct SchemeDof {
  SchemeTag scheme = SchemeTag::OJS1;
  DofEstimate r_bob;
  DofEstimate c_eve;
  DofEstimate secrecy;
};

struct SweepResult {
  std::vector<TrialRecord> records;
  std::vector<SummaryRecord> summaries;
  std::vector<SchemeDof> dof;  // empty when the grid has fewer than 2 points
};

/// Fixed-pool SNR sweep. Every scheme sees the same realization at a given
/// (grid point, trial), so scheme comparisons are paired. Deterministic in
/// (seed, spec) and independent of `workers`.
SweepResult run_fixed_sweep(const ExperimentSpec& spec);

/// SNR sweep where the pool grows with power by the scaling rule. Throws
/// PoolTooLarge when an exhaustive scan would exceed subset_cap (greedy mode
/// lifts the cap).
SweepResult run_scaling_sweep(const ExperimentSpec& spec);

struct OutagePoint {
  double r = 0.0;        // candidate eavesdropper rate bound
  double epsilon = 0.0;  // empirical Pr{eavesdropper rate >= r}
};

struct OutageResult {
  OutageSamples samples;
  std::vector<OutagePoint> curve;      // epsilon over a grid of r
  double r_for_epsilon = 0.0;          // rate_for_outage at spec.epsilon
  std::vector<SummaryRecord> summaries;  // mean_secrecy = mean [r_bob - r]^+, mean_c_eve = r
  std::vector<SchemeDof> dof;
};

/// Samples the eavesdropper rate distribution, maps out the outage curve,
/// then sweeps the receiver rate and reports the outage-constrained secrecy
/// margin [r_bob - r]^+ at the spec's epsilon.
OutageResult run_outage(const ExperimentSpec& spec);

struct CoveringPoint {
  int m = 0;
  double radius = 0.0;  // covering radius estimate averaged over repetitions
};

struct CoveringResult {
  std::vector<CoveringPoint> points;
  double loglog_slope = 0.0;  // d log(radius) / d log(m)
};

/// Estimates covering radii of random subspace codebooks of the sizes in
/// covering_ms (3 independent codebooks per size, averaged) and fits the
/// log-log decay slope.
CoveringResult run_covering(const ExperimentSpec& spec);

/// CSV writers. Headers are part of the output contract:
///   trials:    snr_db,power,pool_size,scheme,trial,r_bob,c_eve,secrecy,r_bob_loss
///   summaries: snr_db,power,pool_size,scheme,mean_r_bob,mean_c_eve,mean_secrecy,stderr_secrecy
///   outage:    r,epsilon
///   covering:  m,radius
/// Numeric fields print with "%.17g" so equal doubles always render as equal
/// bytes. Throws IoError when the file cannot be written.
void write_csv(const std::vector<TrialRecord>& records, const std::string& path);
void write_csv(const std::vector<SummaryRecord>& summaries, const std::string& path);
void write_csv(const std::vector<OutagePoint>& curve, const std::string& path);
void write_csv(const std::vector<CoveringPoint>& points, const std::string& path);

/// Sidecar metadata: "key = value" lines echoing the resolved spec plus the
/// artifact version and any extra result lines passed in. Deterministic (no
/// timestamps, no paths beyond what the spec carries).
void write_metadata(const ExperimentSpec& spec,
                    const std::vector<std::pair<std::string, std::string>>& extras,
                    const std::string& path);

}  // namespace ojs
