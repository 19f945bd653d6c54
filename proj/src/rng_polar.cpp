// SPDX-License-Identifier: Apache-2.0
#include "givens/rng_polar.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace givens::polar {

template <std::floating_point T>
void validate(const ScenarioSpec& spec) {
  using lim = std::numeric_limits<T>;
  const double lowest = lim::min_exponent - lim::digits;  // log2 of denorm_min
  const double highest = lim::max_exponent;
  for (const RhoRange& rho : {spec.rho_f, spec.rho_g}) {
    if (!(rho.min <= rho.max)) throw std::invalid_argument("rho range with min > max");
    if (!(rho.min >= lowest && rho.max < highest)) {
      throw std::invalid_argument("rho range outside the exponent range of the working format");
    }
  }
}

template void validate<float>(const ScenarioSpec&);
template void validate<double>(const ScenarioSpec&);

std::vector<ScenarioSpec> default_scenarios() {
  return {
      {{-50.5, 50.5}, {-50.5, 50.5}},
      {{-63, 62}, {-63, 62}},
      {{-63, -50.5}, {50.5, 62}},
      {{50.5, 62}, {-63, -50.5}},
      {{-125, 127}, {-125, 127}},
      {{-125, -63}, {62, 127}},
      {{62, 127}, {-125, -63}},
  };
}

namespace {

double parse_number(std::string_view text, int line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("scenario line " + std::to_string(line) + ": bad number '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<ScenarioSpec> parse_scenarios(std::istream& in) {
  std::vector<ScenarioSpec> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> fields;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(parse_number(rest.substr(0, comma), number));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 4) {
      throw std::invalid_argument("scenario line " + std::to_string(number) +
                                  ": expected 4 comma-separated values");
    }
    ScenarioSpec spec{{fields[0], fields[1]}, {fields[2], fields[3]}};
    if (spec.rho_f.min > spec.rho_f.max || spec.rho_g.min > spec.rho_g.max) {
      throw std::invalid_argument("scenario line " + std::to_string(number) + ": min > max");
    }
    out.push_back(spec);
  }
  return out;
}

std::vector<ScenarioSpec> read_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file: " + path);
  return parse_scenarios(in);
}

}  // namespace givens::polar
