// Copyright 2026 The qswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON run-configuration files. Keys mirror the long CLI flags one-to-one
// (n, d, orders, inputs, mode, rate, seconds, trials, seed, format, out,
// threads); values land on top of whatever base config is passed in, so the
// caller controls precedence. Kept out of the core headers because it pulls
// in the vendored JSON parser.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/runner.hpp"

namespace qsw {

namespace detail {

inline int config_int(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    throw usage_error("config key '" + key + "' must be an integer");
  }
  const std::int64_t v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw usage_error("config key '" + key + "' is out of range");
  }
  return static_cast<int>(v);
}

inline double config_number(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number()) throw usage_error("config key '" + key + "' must be a number");
  return value.get<double>();
}

inline std::string config_string(const nlohmann::json& value, const std::string& key) {
  if (!value.is_string()) throw usage_error("config key '" + key + "' must be a string");
  return value.get<std::string>();
}

inline std::uint64_t config_seed(const nlohmann::json& value, const std::string& key) {
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  throw usage_error("config key '" + key + "' must be a nonnegative integer");
}

}  // namespace detail

// Parses a JSON object of config keys onto `base`. Unknown keys are an error
// rather than silently ignored, so typos in experiment records surface.
inline RunConfig config_from_json(const std::string& text, RunConfig base = RunConfig{}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw usage_error(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw usage_error("config file must hold a JSON object");

  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      base.ns = {detail::config_int(value, key)};
    } else if (key == "d") {
      base.d = detail::config_int(value, key);
    } else if (key == "orders") {
      base.orders = parse_order_kind(detail::config_string(value, key));
    } else if (key == "inputs") {
      std::vector<std::string> inputs;
      if (value.is_string()) {
        inputs.push_back(value.get<std::string>());
      } else if (value.is_array()) {
        for (const auto& item : value) {
          if (!item.is_string()) {
            throw usage_error("config key 'inputs' must hold strings");
          }
          inputs.push_back(item.get<std::string>());
        }
      } else {
        throw usage_error("config key 'inputs' must be a string or an array of strings");
      }
      base.inputs = std::move(inputs);
    } else if (key == "mode") {
      base.mode = parse_mode(detail::config_string(value, key));
    } else if (key == "rate") {
      base.rate_hz = detail::config_number(value, key);
    } else if (key == "seconds") {
      base.seconds = detail::config_number(value, key);
    } else if (key == "trials") {
      base.mc_trials = detail::config_int(value, key);
    } else if (key == "seed") {
      base.seed = detail::config_seed(value, key);
    } else if (key == "format") {
      base.format = parse_format(detail::config_string(value, key));
    } else if (key == "out") {
      base.out = detail::config_string(value, key);
    } else if (key == "threads") {
      base.threads = detail::config_int(value, key);
    } else {
      throw usage_error("unknown config key '" + key + "'");
    }
  }
  return base;
}

inline RunConfig config_from_json_file(const std::string& path, RunConfig base = RunConfig{}) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot read config file '" + path + "'");
  const std::string text{std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  return config_from_json(text, std::move(base));
}

}  // namespace qsw
