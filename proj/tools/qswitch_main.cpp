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

// qswitch command-line front end.
//
// Configuration precedence, lowest to highest: built-in defaults, the
// QSWITCH_SEED environment variable (seed only), a --config JSON file, then
// explicit flags. Exit codes: 0 success, 2 usage error, 3 numerical or
// internal error, 4 I/O error.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qswitch/cli_config.hpp"
#include "qswitch/qswitch.hpp"

namespace {

qsw::RunConfig defaults_with_env_seed() {
  qsw::RunConfig config;
  if (const char* env = std::getenv("QSWITCH_SEED")) {
    const std::string text(env);
    std::uint64_t seed = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec != std::errc{} || ptr != last || text.empty()) {
      throw qsw::usage_error("QSWITCH_SEED must be an unsigned 64-bit integer, got '" + text +
                             "'");
    }
    config.seed = seed;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    CLI::App app{
        "Simulates quantum communication through completely depolarizing "
        "channels traversed in a superposition of channel orders, including "
        "the photon-counting experiment that measures the output fidelity."};
    app.name("qswitch");

    std::vector<int> ns;
    int d = 2;
    std::string orders;
    std::vector<std::string> inputs;
    std::string mode;
    double rate = 0.0;
    double seconds = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    int threads = 0;
    std::string config_path;

    auto* opt_n =
        app.add_option("--n", ns, "Channel counts N in 1..4, repeatable (default: sweep 1,2,3,4)");
    auto* opt_d = app.add_option("--d", d, "Target dimension d (default: 2)");
    auto* opt_orders =
        app.add_option("--orders", orders, "Order set: cyclic, full or fixed (default: cyclic)");
    auto* opt_inputs = app.add_option(
        "--inputs", inputs,
        "Input states: D A R L, k<j> for d>2, or Bloch vectors x,y,z (default: D A R L)");
    auto* opt_mode =
        app.add_option("--mode", mode, "Pipeline: analytic, exact or sampled (default: analytic)");
    auto* opt_rate =
        app.add_option("--rate", rate, "Coincidence rate per second (default: 116.8)");
    auto* opt_seconds =
        app.add_option("--seconds", seconds, "Integration time per projection (default: 1)");
    auto* opt_trials =
        app.add_option("--trials", trials, "Monte Carlo trials in sampled mode (default: 1000)");
    auto* opt_seed = app.add_option("--seed", seed, "Random seed (default: 42 or $QSWITCH_SEED)");
    auto* opt_format = app.add_option("--format", format, "Output format: csv or json");
    auto* opt_out = app.add_option("--out", out, "Output file (default: standard output)");
    auto* opt_threads =
        app.add_option("--threads", threads, "Worker threads, 0 = hardware pick (default: 0)");
    app.add_option("--config", config_path, "JSON config file; explicit flags override it");

    auto* sweep = app.add_subcommand(
        "sweep", "Evaluate the full grid: N = 1..4 against inputs D, A, R, L");
    sweep->fallthrough();

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      std::cerr << "qswitch: " << e.what() << "\nRun with --help for usage.\n";
      return 2;
    }

    qsw::RunConfig config = defaults_with_env_seed();
    if (!config_path.empty()) {
      config = qsw::config_from_json_file(config_path, std::move(config));
    }
    if (opt_n->count() > 0) config.ns = ns;
    if (opt_d->count() > 0) config.d = d;
    if (opt_orders->count() > 0) config.orders = qsw::parse_order_kind(orders);
    if (opt_inputs->count() > 0) config.inputs = inputs;
    if (opt_mode->count() > 0) config.mode = qsw::parse_mode(mode);
    if (opt_rate->count() > 0) config.rate_hz = rate;
    if (opt_seconds->count() > 0) config.seconds = seconds;
    if (opt_trials->count() > 0) config.mc_trials = trials;
    if (opt_seed->count() > 0) config.seed = seed;
    if (opt_format->count() > 0) config.format = qsw::parse_format(format);
    if (opt_out->count() > 0) config.out = out;
    if (opt_threads->count() > 0) config.threads = threads;

    if (sweep->parsed()) {
      if (opt_n->count() > 0 || opt_inputs->count() > 0) {
        throw qsw::usage_error("sweep fixes --n and --inputs; drop those flags");
      }
      config.ns = {1, 2, 3, 4};
      config.inputs = {"D", "A", "R", "L"};
    }
    config.inputs = qsw::normalize_input_tokens(config.inputs);

    const std::vector<qsw::ResultRow> rows = qsw::run(config);
    qsw::emit(rows, config.format, config.out);
    return 0;
  } catch (const qsw::usage_error& e) {
    std::cerr << "qswitch: " << e.what() << "\n";
    return 2;
  } catch (const qsw::io_error& e) {
    std::cerr << "qswitch: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "qswitch: " << e.what() << "\n";
    return 3;
  }
}
