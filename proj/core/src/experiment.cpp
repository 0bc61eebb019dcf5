// SPDX-License-Identifier: Apache-2.0
#include "ojs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "ojs/errors.hpp"
#include "ojs/grassmann.hpp"

namespace ojs {
namespace {

// Substream tags that separate the independent random uses of one master
// seed. Trial streams are (grid_index << 32) | trial_index, so everything
// here lives outside that space via the stream argument or dedicated tags.
constexpr std::uint64_t kSelectionTagBase = 1000;  // + scheme position
constexpr std::uint64_t kOutageStream = std::uint64_t(1) << 63;
constexpr std::uint64_t kCoveringStream = (std::uint64_t(1) << 63) + 1;

// Runs fn(0..n_tasks) across `workers` threads. Tasks must be independent;
// any task exception is rethrown after the pool drains.
void parallel_for(int n_tasks, int workers, const std::function<void(int)>& fn) {
  workers = std::max(1, std::min(workers, n_tasks));
  if (workers == 1) {
    for (int i = 0; i < n_tasks; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= n_tasks) return;
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void check_common(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw Error("trials must be at least 1");
  if (spec.workers < 1) throw Error("workers must be at least 1");
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0))
    throw Error("epsilon must lie in [0, 1]");
}

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw Error("snr_db grid must not be empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw Error("snr_db grid must be strictly increasing");
}

void check_schemes(const std::vector<SchemeTag>& schemes) {
  if (schemes.empty()) throw Error("at least one selection scheme is required");
}

// Exhaustive scans enumerate C(s, k) subsets per trial; refuse clearly
// oversized pools instead of hanging.
void check_subset_cap(const ExperimentSpec& spec, const SystemConfig& config) {
  if (spec.greedy) return;
  bool exhaustive = false;
  for (const auto tag : spec.schemes)
    exhaustive = exhaustive || tag != SchemeTag::RANDOM;
  if (!exhaustive) return;
  const std::uint64_t count = subset_count(config.s, config.k);
  if (count > spec.subset_cap)
    throw PoolTooLarge("C(" + std::to_string(config.s) + ", " + std::to_string(config.k) +
                       ") = " + std::to_string(count) + " subsets exceed the cap of " +
                       std::to_string(spec.subset_cap) +
                       "; use greedy selection or a smaller pool");
}

struct GridPoint {
  double snr_db = 0.0;
  double power = 0.0;
  SystemConfig config;  // s resolved for this point
};

// Shared machinery of the fixed and scaling sweeps: evaluate every scheme on
// a common realization per (grid point, trial), then reduce in a fixed
// order. The trial stream id (grid << 32) | trial makes every task
// self-contained, so worker count cannot change any output.
SweepResult run_sweep(const ExperimentSpec& spec, const std::vector<GridPoint>& grid) {
  const auto n_schemes = spec.schemes.size();
  const auto n_points = grid.size();
  const int trials = spec.trials;
  std::vector<RateReport> reports(n_points * static_cast<std::size_t>(trials) * n_schemes);

  parallel_for(static_cast<int>(n_points) * trials, spec.workers, [&](int task) {
    const auto g = static_cast<std::size_t>(task / trials);
    const auto t = static_cast<std::size_t>(task % trials);
    const GridPoint& point = grid[g];
    const std::uint64_t stream = (static_cast<std::uint64_t>(g) << 32) | t;
    const ChannelRealization real = sample_realization(point.config, {spec.seed, stream});
    const SelectionOptions opts{spec.greedy};
    for (std::size_t si = 0; si < n_schemes; ++si) {
      Rng selection_rng = Rng(spec.seed, stream).substream(kSelectionTagBase + si);
      const SelectionResult sel = run_selection(spec.schemes[si], real, point.config,
                                                point.power, selection_rng, opts);
      reports[(g * static_cast<std::size_t>(trials) + t) * n_schemes + si] =
          evaluate_rates(real, point.config, sel, point.power);
    }
  });

  SweepResult result;
  result.records.reserve(n_points * n_schemes * static_cast<std::size_t>(trials));
  for (std::size_t g = 0; g < n_points; ++g) {
    for (std::size_t si = 0; si < n_schemes; ++si) {
      SummaryRecord summary;
      summary.snr_db = grid[g].snr_db;
      summary.power = grid[g].power;
      summary.pool_size = grid[g].config.s;
      summary.scheme = spec.schemes[si];
      double sum_secrecy = 0.0, sum_sq_secrecy = 0.0;
      for (int t = 0; t < trials; ++t) {
        const RateReport& rep =
            reports[(g * static_cast<std::size_t>(trials) + static_cast<std::size_t>(t)) *
                        n_schemes + si];
        TrialRecord record;
        record.snr_db = grid[g].snr_db;
        record.power = grid[g].power;
        record.pool_size = grid[g].config.s;
        record.scheme = spec.schemes[si];
        record.trial = t;
        record.r_bob = rep.r_bob;
        record.c_eve = rep.c_eve;
        record.secrecy = rep.secrecy;
        record.r_bob_loss = rep.r_bob_loss;
        result.records.push_back(record);
        summary.mean_r_bob += rep.r_bob;
        summary.mean_c_eve += rep.c_eve;
        sum_secrecy += rep.secrecy;
        sum_sq_secrecy += rep.secrecy * rep.secrecy;
      }
      const double n = trials;
      summary.mean_r_bob /= n;
      summary.mean_c_eve /= n;
      summary.mean_secrecy = sum_secrecy / n;
      if (trials > 1) {
        const double variance =
            std::max(0.0, (sum_sq_secrecy - n * summary.mean_secrecy * summary.mean_secrecy) /
                              (n - 1.0));
        summary.stderr_secrecy = std::sqrt(variance / n);
      }
      result.summaries.push_back(summary);
    }
  }

  if (n_points >= 2) {
    const std::size_t window = std::min<std::size_t>(4, n_points);
    for (std::size_t si = 0; si < n_schemes; ++si) {
      SchemeDof dof;
      dof.scheme = spec.schemes[si];
      std::vector<std::pair<double, double>> r_bob, c_eve, secrecy;
      for (std::size_t g = n_points - window; g < n_points; ++g) {
        const SummaryRecord& s = result.summaries[g * n_schemes + si];
        r_bob.emplace_back(s.power, s.mean_r_bob);
        c_eve.emplace_back(s.power, s.mean_c_eve);
        secrecy.emplace_back(s.power, s.mean_secrecy);
      }
      dof.r_bob = dof_slope(r_bob);
      dof.c_eve = dof_slope(c_eve);
      dof.secrecy = dof_slope(secrecy);
      result.dof.push_back(dof);
    }
  }
  return result;
}

}  // namespace

std::string_view mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::FixedSweep: return "fixed";
    case ExperimentMode::ScalingSweep: return "scaling";
    case ExperimentMode::Outage: return "outage";
    case ExperimentMode::Covering: return "covering";
  }
  return "unknown";
}

int pool_size_for_power(const ExperimentSpec& spec, double power) {
  if (!spec.scaling_c || !spec.scaling_a)
    throw Error("scaling_c and scaling_a must be set for a scaling sweep");
  const double raw = *spec.scaling_c * std::pow(power, *spec.scaling_a);
  // Half-away-from-zero rounding, independent of the floating point
  // environment, so pool sizes are stable across platforms.
  const double capped = std::min(raw, static_cast<double>(std::numeric_limits<int>::max()));
  return std::max(spec.config.k, static_cast<int>(std::llround(capped)));
}

SweepResult run_fixed_sweep(const ExperimentSpec& spec) {
  check_common(spec);
  check_grid(spec.snr_grid_db);
  check_schemes(spec.schemes);
  const SystemConfig config = validate(spec.config, spec.allow_nonstandard);
  check_subset_cap(spec, config);

  std::vector<GridPoint> grid;
  grid.reserve(spec.snr_grid_db.size());
  for (const double snr : spec.snr_grid_db)
    grid.push_back({snr, snr_db_to_power(snr), config});
  return run_sweep(spec, grid);
}

SweepResult run_scaling_sweep(const ExperimentSpec& spec) {
  check_common(spec);
  check_grid(spec.snr_grid_db);
  check_schemes(spec.schemes);

  std::vector<GridPoint> grid;
  grid.reserve(spec.snr_grid_db.size());
  for (const double snr : spec.snr_grid_db) {
    const double power = snr_db_to_power(snr);
    SystemConfig config = spec.config;
    config.s = pool_size_for_power(spec, power);
    validate(config, spec.allow_nonstandard);
    check_subset_cap(spec, config);
    grid.push_back({snr, power, config});
  }
  return run_sweep(spec, grid);
}

OutageResult run_outage(const ExperimentSpec& spec) {
  check_common(spec);
  check_grid(spec.snr_grid_db);
  check_schemes(spec.schemes);
  const SystemConfig config = validate(spec.config, spec.allow_nonstandard);
  check_subset_cap(spec, config);

  OutageResult result;
  result.samples =
      sample_eve_rate_distribution(config, spec.trials, {spec.seed, kOutageStream});

  const double top = *std::max_element(result.samples.values.begin(),
                                       result.samples.values.end());
  const int curve_points = 101;
  result.curve.reserve(curve_points);
  for (int i = 0; i < curve_points; ++i) {
    const double r = top * static_cast<double>(i) / (curve_points - 1);
    result.curve.push_back({r, outage_probability(result.samples, r)});
  }
  result.r_for_epsilon = rate_for_outage(result.samples, spec.epsilon);

  // Receiver-side sweep at the same trial budget; the summary reports the
  // outage-constrained secrecy margin against the fixed eavesdropper bound.
  SweepResult sweep = run_fixed_sweep(spec);
  const double r_bound = result.r_for_epsilon;
  const auto n_schemes = spec.schemes.size();
  const auto n_points = spec.snr_grid_db.size();
  for (std::size_t g = 0; g < n_points; ++g) {
    for (std::size_t si = 0; si < n_schemes; ++si) {
      SummaryRecord summary;
      summary.snr_db = sweep.summaries[g * n_schemes + si].snr_db;
      summary.power = sweep.summaries[g * n_schemes + si].power;
      summary.pool_size = sweep.summaries[g * n_schemes + si].pool_size;
      summary.scheme = spec.schemes[si];
      summary.mean_r_bob = sweep.summaries[g * n_schemes + si].mean_r_bob;
      summary.mean_c_eve = r_bound;
      double sum = 0.0, sum_sq = 0.0;
      for (int t = 0; t < spec.trials; ++t) {
        const auto& record =
            sweep.records[(g * n_schemes + si) * static_cast<std::size_t>(spec.trials) +
                          static_cast<std::size_t>(t)];
        const double clipped = std::isinf(r_bound) ? 0.0 : secrecy_rate(record.r_bob, r_bound);
        sum += clipped;
        sum_sq += clipped * clipped;
      }
      const double n = spec.trials;
      summary.mean_secrecy = sum / n;
      if (spec.trials > 1) {
        const double variance = std::max(
            0.0, (sum_sq - n * summary.mean_secrecy * summary.mean_secrecy) / (n - 1.0));
        summary.stderr_secrecy = std::sqrt(variance / n);
      }
      result.summaries.push_back(summary);
    }
  }

  if (n_points >= 2) {
    const std::size_t window = std::min<std::size_t>(4, n_points);
    for (std::size_t si = 0; si < n_schemes; ++si) {
      SchemeDof dof;
      dof.scheme = spec.schemes[si];
      std::vector<std::pair<double, double>> r_bob, margin;
      for (std::size_t g = n_points - window; g < n_points; ++g) {
        const SummaryRecord& s = result.summaries[g * n_schemes + si];
        r_bob.emplace_back(s.power, s.mean_r_bob);
        margin.emplace_back(s.power, s.mean_secrecy);
      }
      dof.r_bob = dof_slope(r_bob);
      dof.secrecy = dof_slope(margin);
      dof.c_eve.slope = 0.0;  // the bound is constant in power by construction
      result.dof.push_back(dof);
    }
  }
  return result;
}

CoveringResult run_covering(const ExperimentSpec& spec) {
  if (spec.covering_ms.empty()) throw Error("covering_ms must list at least one codebook size");
  if (spec.covering_samples < 1) throw Error("covering_samples must be at least 1");
  const int ambient = spec.config.nr;
  const int codeword_dim = spec.config.nr - spec.config.nt;
  const int sample_dim = spec.config.nj;
  if (spec.config.nt < 1 || sample_dim < 1 || sample_dim > ambient || codeword_dim < 1)
    throw AntennaRegimeViolation("covering mode needs nt >= 1, 1 <= nj <= nr, and nt < nr");

  constexpr int kRepetitions = 3;
  CoveringResult result;
  result.points.reserve(spec.covering_ms.size());
  const Rng base(spec.seed, kCoveringStream);
  for (std::size_t mi = 0; mi < spec.covering_ms.size(); ++mi) {
    const int m = spec.covering_ms[mi];
    if (m < 1) throw Error("covering_ms entries must be positive");
    double acc = 0.0;
    for (int rep = 0; rep < kRepetitions; ++rep) {
      Rng rng = base.substream(mi).substream(static_cast<std::uint64_t>(rep));
      std::vector<SubspaceBasis> codewords;
      codewords.reserve(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j)
        codewords.push_back(random_subspace(ambient, codeword_dim, rng));
      const SubspaceCodebook codebook(std::move(codewords));
      acc += estimate_covering_radius(codebook, sample_dim, spec.covering_samples, rng);
    }
    result.points.push_back({m, acc / kRepetitions});
  }

  // Log-log decay slope over the sizes with a positive radius estimate.
  std::vector<std::pair<double, double>> loglog;
  for (const auto& p : result.points)
    if (p.radius > 0.0) loglog.emplace_back(std::log(p.m), std::log(p.radius));
  if (loglog.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : loglog) { mx += x; my += y; }
    mx /= static_cast<double>(loglog.size());
    my /= static_cast<double>(loglog.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : loglog) {
      sxx += (x - mx) * (x - mx);
      sxy += (x - mx) * (y - my);
    }
    result.loglog_slope = sxx > 0.0 ? sxy / sxx : std::numeric_limits<double>::quiet_NaN();
  } else {
    result.loglog_slope = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

}  // namespace ojs
