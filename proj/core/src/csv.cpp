// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ojs/errors.hpp"
#include "ojs/experiment.hpp"
#include "ojs/version.hpp"

namespace ojs {
namespace {

// "%.17g" renders doubles losslessly, so equal values are equal bytes and
// output files are reproducible down to the digit.
std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace

void write_csv(const std::vector<TrialRecord>& records, const std::string& path) {
  auto out = open_out(path);
  out << "snr_db,power,pool_size,scheme,trial,r_bob,c_eve,secrecy,r_bob_loss\n";
  for (const auto& r : records) {
    out << fmt(r.snr_db) << ',' << fmt(r.power) << ',' << r.pool_size << ','
        << scheme_name(r.scheme) << ',' << r.trial << ',' << fmt(r.r_bob) << ','
        << fmt(r.c_eve) << ',' << fmt(r.secrecy) << ',' << fmt(r.r_bob_loss) << '\n';
  }
  finish(out, path);
}

void write_csv(const std::vector<SummaryRecord>& summaries, const std::string& path) {
  auto out = open_out(path);
  out << "snr_db,power,pool_size,scheme,mean_r_bob,mean_c_eve,mean_secrecy,stderr_secrecy\n";
  for (const auto& s : summaries) {
    out << fmt(s.snr_db) << ',' << fmt(s.power) << ',' << s.pool_size << ','
        << scheme_name(s.scheme) << ',' << fmt(s.mean_r_bob) << ',' << fmt(s.mean_c_eve)
        << ',' << fmt(s.mean_secrecy) << ',' << fmt(s.stderr_secrecy) << '\n';
  }
  finish(out, path);
}

void write_csv(const std::vector<OutagePoint>& curve, const std::string& path) {
  auto out = open_out(path);
  out << "r,epsilon\n";
  for (const auto& p : curve) out << fmt(p.r) << ',' << fmt(p.epsilon) << '\n';
  finish(out, path);
}

void write_csv(const std::vector<CoveringPoint>& points, const std::string& path) {
  auto out = open_out(path);
  out << "m,radius\n";
  for (const auto& p : points) out << p.m << ',' << fmt(p.radius) << '\n';
  finish(out, path);
}

void write_metadata(const ExperimentSpec& spec,
                    const std::vector<std::pair<std::string, std::string>>& extras,
                    const std::string& path) {
  auto out = open_out(path);
  auto line = [&](const std::string& key, const std::string& value) {
    out << key << " = " << value << '\n';
  };
  auto join_doubles = [](const std::vector<double>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i)
      joined += (i ? "," : "") + fmt(values[i]);
    return joined;
  };

  line("artifact_version", kVersion);
  line("mode", std::string(mode_name(spec.mode)));
  line("nt", std::to_string(spec.config.nt));
  line("nj", std::to_string(spec.config.nj));
  line("nr", std::to_string(spec.config.nr));
  line("ne", std::to_string(spec.config.ne));
  line("k", std::to_string(spec.config.k));
  line("s", std::to_string(spec.config.s));
  line("allow_nonstandard", spec.allow_nonstandard ? "true" : "false");
  line("snr_db", join_doubles(spec.snr_grid_db));
  line("trials", std::to_string(spec.trials));
  {
    std::string joined;
    for (std::size_t i = 0; i < spec.schemes.size(); ++i)
      joined += (i ? "," : "") + std::string(scheme_name(spec.schemes[i]));
    line("schemes", joined);
  }
  line("scaling_c", spec.scaling_c ? fmt(*spec.scaling_c) : "unset");
  line("scaling_a", spec.scaling_a ? fmt(*spec.scaling_a) : "unset");
  line("kappa2", fmt(spec.kappa2));
  line("epsilon", fmt(spec.epsilon));
  {
    std::string joined;
    for (std::size_t i = 0; i < spec.covering_ms.size(); ++i)
      joined += (i ? "," : "") + std::to_string(spec.covering_ms[i]);
    line("covering_ms", joined);
  }
  line("covering_samples", std::to_string(spec.covering_samples));
  line("seed", std::to_string(spec.seed));
  line("workers", std::to_string(spec.workers));
  line("greedy", spec.greedy ? "true" : "false");
  line("subset_cap", std::to_string(spec.subset_cap));
  line("output", spec.output_path);
  for (const auto& [key, value] : extras) line(key, value);
  finish(out, path);
}

}  // namespace ojs
