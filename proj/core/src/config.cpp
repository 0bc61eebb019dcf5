// SPDX-License-Identifier: Apache-2.0
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ojs/errors.hpp"
#include "ojs/experiment.hpp"

namespace ojs {
namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigParseError("config line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& value, int line) {
  long long out = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    fail(line, "expected an integer, got '" + value + "'");
  return out;
}

std::uint64_t parse_uint64(const std::string& value, int line) {
  std::uint64_t out = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last)
    fail(line, "expected a nonnegative integer, got '" + value + "'");
  return out;
}

double parse_double(const std::string& value, int line) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) fail(line, "expected a number, got '" + value + "'");
    return out;
  } catch (const ConfigParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(line, "expected a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& value, int line) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(line, "expected true/false, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream stream(value);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(trim(item));
  return out;
}

}  // namespace

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");

  ExperimentSpec spec;
  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const auto comment = raw_line.find('#');
    if (comment != std::string::npos) raw_line.erase(comment);
    const std::string line = trim(raw_line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, "empty key");
    if (value.empty()) fail(line_no, "empty value for key '" + key + "'");

    if (key == "nt") spec.config.nt = static_cast<int>(parse_int(value, line_no));
    else if (key == "nj") spec.config.nj = static_cast<int>(parse_int(value, line_no));
    else if (key == "nr") spec.config.nr = static_cast<int>(parse_int(value, line_no));
    else if (key == "ne") spec.config.ne = static_cast<int>(parse_int(value, line_no));
    else if (key == "k") spec.config.k = static_cast<int>(parse_int(value, line_no));
    else if (key == "s") spec.config.s = static_cast<int>(parse_int(value, line_no));
    else if (key == "snr_db") {
      spec.snr_grid_db.clear();
      for (const auto& item : split_list(value))
        spec.snr_grid_db.push_back(parse_double(item, line_no));
    } else if (key == "trials") {
      spec.trials = static_cast<int>(parse_int(value, line_no));
    } else if (key == "schemes") {
      spec.schemes.clear();
      for (const auto& item : split_list(value)) {
        try {
          spec.schemes.push_back(scheme_from_name(item));
        } catch (const ConfigParseError& e) {
          fail(line_no, e.what());
        }
      }
    } else if (key == "scaling_c") {
      spec.scaling_c = parse_double(value, line_no);
    } else if (key == "scaling_a") {
      spec.scaling_a = parse_double(value, line_no);
    } else if (key == "kappa2") {
      spec.kappa2 = parse_double(value, line_no);
    } else if (key == "epsilon") {
      spec.epsilon = parse_double(value, line_no);
    } else if (key == "covering_ms") {
      spec.covering_ms.clear();
      for (const auto& item : split_list(value))
        spec.covering_ms.push_back(static_cast<int>(parse_int(item, line_no)));
    } else if (key == "covering_samples") {
      spec.covering_samples = static_cast<int>(parse_int(value, line_no));
    } else if (key == "seed") {
      spec.seed = parse_uint64(value, line_no);
    } else if (key == "workers") {
      spec.workers = static_cast<int>(parse_int(value, line_no));
    } else if (key == "allow_nonstandard") {
      spec.allow_nonstandard = parse_bool(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  return spec;
}

}  // namespace ojs
