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

// Run orchestration: a RunConfig describes a grid of (channel count, input
// state) cells and a pipeline mode; run() evaluates every cell into a
// ResultRow and emit() renders the rows as CSV or JSON. Output is
// byte-identical for identical configs, independent of how many worker
// threads evaluate the grid.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/experiment.hpp"
#include "qswitch/qmath.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/switch.hpp"

namespace qsw {

enum class RunMode { analytic, exact, sampled };
enum class OutputFormat { csv, json };

inline const char* mode_name(RunMode m) {
  switch (m) {
    case RunMode::analytic: return "analytic";
    case RunMode::exact: return "exact";
    case RunMode::sampled: return "sampled";
  }
  return "?";
}

inline RunMode parse_mode(const std::string& s) {
  if (s == "analytic") return RunMode::analytic;
  if (s == "exact") return RunMode::exact;
  if (s == "sampled") return RunMode::sampled;
  throw usage_error("unknown mode '" + s + "'; expected analytic, exact or sampled");
}

inline OrderKind parse_order_kind(const std::string& s) {
  if (s == "cyclic") return OrderKind::cyclic;
  if (s == "full") return OrderKind::full;
  if (s == "fixed") return OrderKind::fixed;
  throw usage_error("unknown order kind '" + s + "'; expected cyclic, full or fixed");
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw usage_error("unknown format '" + s + "'; expected csv or json");
}

// Everything one invocation needs. Defaults mirror the reference experiment:
// qubits, cyclic orders, 116.8 coincidences per second, 1 s per projection,
// the four D/A/R/L probe states, and a sweep over N = 1..4.
struct RunConfig {
  std::vector<int> ns = {1, 2, 3, 4};
  int d = 2;
  OrderKind orders = OrderKind::cyclic;
  std::vector<std::string> inputs = {"D", "A", "R", "L"};
  RunMode mode = RunMode::analytic;
  double rate_hz = 116.8;
  double seconds = 1.0;
  int mc_trials = 1000;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::csv;
  std::string out;      // output path; empty writes to standard output
  int threads = 0;      // worker threads for row evaluation; 0 = hardware pick
};

struct ResultRow {
  int n = 0;
  std::string input;
  std::string mode;
  double fidelity_mean = 0.0;
  double fidelity_std = 0.0;
  double success_prob = 0.0;
  std::int64_t config_count = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline bool parse_double_token(const std::string& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

// Input tokens may arrive comma-joined ("D,A,R,L"). A comma-joined token
// whose pieces are all numeric is one Bloch vector, not a list of labels.
inline std::vector<std::string> normalize_input_tokens(const std::vector<std::string>& raw) {
  std::vector<std::string> tokens;
  for (const std::string& token : raw) {
    if (token.find(',') == std::string::npos) {
      if (!token.empty()) tokens.push_back(token);
      continue;
    }
    const std::vector<std::string> parts = detail::split(token, ',');
    double unused;
    const bool all_numeric = std::all_of(parts.begin(), parts.end(), [&](const std::string& p) {
      return detail::parse_double_token(p, unused);
    });
    if (all_numeric) {
      tokens.push_back(token);
    } else {
      for (const std::string& p : parts) {
        if (!p.empty()) tokens.push_back(p);
      }
    }
  }
  return tokens;
}

// Named probe states (D, A, R, L for qubits; k0..k<d-1> basis states
// otherwise) or an explicit qubit Bloch vector "x,y,z".
inline DensityMatrix parse_input_state(const std::string& token, int d) {
  if (d == 2) {
    if (token == "D") return DensityMatrix::pure(ket_diag());
    if (token == "A") return DensityMatrix::pure(ket_antidiag());
    if (token == "R") return DensityMatrix::pure(ket_right());
    if (token == "L") return DensityMatrix::pure(ket_left());
    if (token.find(',') != std::string::npos) {
      const std::vector<std::string> parts = detail::split(token, ',');
      double r[3];
      if (parts.size() != 3 || !detail::parse_double_token(parts[0], r[0]) ||
          !detail::parse_double_token(parts[1], r[1]) ||
          !detail::parse_double_token(parts[2], r[2])) {
        throw usage_error("Bloch vector '" + token + "' must be three comma-joined numbers");
      }
      const double norm = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
      if (norm > 1.0 + 1e-9) {
        throw usage_error("Bloch vector '" + token + "' lies outside the unit ball");
      }
      const double scale = norm > 1.0 ? 1.0 / norm : 1.0;
      const ComplexMatrix rho =
          0.5 * (ComplexMatrix::identity(2) + (scale * r[0]) * pauli(PauliIndex::X) +
                 (scale * r[1]) * pauli(PauliIndex::Y) + (scale * r[2]) * pauli(PauliIndex::Z));
      return DensityMatrix(rho);
    }
    throw usage_error("unknown input state '" + token +
                      "'; expected D, A, R, L or a Bloch vector x,y,z");
  }
  if (token.size() >= 2 && token[0] == 'k') {
    int j = -1;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, j);
    if (ec == std::errc{} && ptr == last && j >= 0 && j < d) {
      return DensityMatrix::pure(StateVector::basis(d, j));
    }
  }
  throw usage_error("unknown input state '" + token + "' for d=" + std::to_string(d) +
                    "; expected k0..k" + std::to_string(d - 1));
}

inline void validate_config(const RunConfig& config) {
  if (config.ns.empty()) throw usage_error("no channel counts selected");
  for (int n : config.ns) {
    if (n < 1 || n > 4) throw usage_error("channel count must be between 1 and 4");
  }
  if (config.d < 2) throw usage_error("dimension must be at least 2");
  if (config.inputs.empty()) throw usage_error("no input states selected");
  if (!(config.rate_hz > 0.0) || !std::isfinite(config.rate_hz)) {
    throw usage_error("rate must be a positive number");
  }
  if (!(config.seconds > 0.0) || !std::isfinite(config.seconds)) {
    throw usage_error("seconds must be a positive number");
  }
  if (config.mode == RunMode::sampled && config.mc_trials < 2) {
    throw usage_error("sampled mode needs at least 2 Monte Carlo trials");
  }
  if (config.threads < 0) throw usage_error("threads must be nonnegative");
  if (config.mode == RunMode::analytic && config.orders == OrderKind::full) {
    throw usage_error(
        "analytic mode covers cyclic and fixed orders only; "
        "use --mode exact for the full permutation set");
  }
  if (config.mode != RunMode::analytic && config.d != 2) {
    throw usage_error(
        "exact and sampled modes enumerate qubit Pauli configurations and need d=2; "
        "use --mode analytic for other dimensions");
  }
  for (const std::string& token : config.inputs) {
    (void)parse_input_state(token, config.d);  // throws usage_error on bad tokens
  }
}

// Evaluates one (n, input) grid cell. input_index feeds the substream keys,
// so each cell owns fixed random streams no matter how the grid is iterated.
inline ResultRow compute_row(const RunConfig& config, int n, const std::string& input_token,
                             int input_index) {
  const DensityMatrix rho_in = parse_input_state(input_token, config.d);
  ResultRow row;
  row.n = n;
  row.input = input_token;
  row.mode = mode_name(config.mode);
  row.seed = config.seed;

  switch (config.mode) {
    case RunMode::analytic: {
      DensityMatrix prediction = config.orders == OrderKind::cyclic
                                     ? effective_channel_prediction(n, config.d, rho_in)
                                     : DensityMatrix::maximally_mixed(config.d);
      row.fidelity_mean = uhlmann_fidelity(rho_in, prediction);
      row.success_prob =
          config.orders == OrderKind::cyclic ? cyclic_success_probability(n, config.d) : 1.0;
      row.config_count = 0;
      break;
    }
    case RunMode::exact: {
      const OrderSet orders = make_orders(config.orders, n);
      const StateVector control = StateVector::uniform(orders.count());
      const ConditionalOutcome avg =
          accumulate_configs(enumerate_configs(n), orders, rho_in, control);
      if (!avg.normalized) {
        throw insufficient_data_error("post-selection probability vanished");
      }
      row.fidelity_mean = uhlmann_fidelity(rho_in, *avg.normalized);
      row.success_prob = avg.probability;
      row.config_count = std::int64_t{1} << (2 * n);
      break;
    }
    case RunMode::sampled: {
      const OrderSet orders = make_orders(config.orders, n);
      const StateVector control = StateVector::uniform(orders.count());
      const std::vector<ConditionalOutcome> outcomes =
          all_config_outcomes(enumerate_configs(n), orders, rho_in, control);
      const ConditionalOutcome avg = average_outcomes(outcomes);
      const TomographyDataset data = simulate_counts(
          outcomes, six_state_basis(), config.rate_hz, config.seconds,
          substream_key(config.seed, {static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(input_index), 0}));
      const FidelityEstimate est = monte_carlo_fidelity(
          data, rho_in, config.mc_trials,
          substream_key(config.seed, {static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(input_index), 1}));
      row.fidelity_mean = est.mean;
      row.fidelity_std = est.stddev;
      row.success_prob = avg.probability;
      row.config_count = static_cast<std::int64_t>(outcomes.size());
      break;
    }
  }
  return row;
}

// Evaluates the whole grid, n-major then input order. Rows are independent,
// so they are spread over worker threads by stride; row identity (not
// completion order) fixes both the output order and the random streams.
inline std::vector<ResultRow> run(const RunConfig& config) {
  validate_config(config);
  struct Cell {
    int n;
    int input_index;
  };
  std::vector<Cell> cells;
  for (int n : config.ns) {
    for (int i = 0; i < static_cast<int>(config.inputs.size()); ++i) {
      cells.push_back({n, i});
    }
  }

  std::vector<ResultRow> rows(cells.size());
  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(cells.size())));

  auto eval_stride = [&](int offset, int stride) {
    for (std::size_t i = offset; i < cells.size(); i += stride) {
      rows[i] = compute_row(config, cells[i].n, config.inputs[cells[i].input_index],
                            cells[i].input_index);
    }
  };

  if (workers == 1) {
    eval_stride(0, 1);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      futures.push_back(std::async(std::launch::async, eval_stride, t, workers));
    }
    for (auto& f : futures) f.get();
  }
  return rows;
}

namespace detail {

inline std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace detail

// Renders rows with a fixed layout and 6-significant-digit numbers, so a
// given row list always produces the same bytes.
inline std::string render(const std::vector<ResultRow>& rows, OutputFormat format) {
  if (rows.empty()) throw usage_error("no result rows to emit");
  std::string out;
  if (format == OutputFormat::csv) {
    out += "n,input,mode,fidelity,fidelity_std,success_prob,configs,seed\n";
    for (const ResultRow& r : rows) {
      out += std::to_string(r.n);
      out += ',';
      out += detail::csv_field(r.input);
      out += ',';
      out += r.mode;
      out += ',';
      out += detail::format_g6(r.fidelity_mean);
      out += ',';
      out += detail::format_g6(r.fidelity_std);
      out += ',';
      out += detail::format_g6(r.success_prob);
      out += ',';
      out += std::to_string(r.config_count);
      out += ',';
      out += std::to_string(r.seed);
      out += '\n';
    }
  } else {
    out += "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ResultRow& r = rows[i];
      out += "  {\"n\": " + std::to_string(r.n);
      out += ", \"input\": " + detail::json_string(r.input);
      out += ", \"mode\": " + detail::json_string(r.mode);
      out += ", \"fidelity\": " + detail::format_g6(r.fidelity_mean);
      out += ", \"fidelity_std\": " + detail::format_g6(r.fidelity_std);
      out += ", \"success_prob\": " + detail::format_g6(r.success_prob);
      out += ", \"configs\": " + std::to_string(r.config_count);
      out += ", \"seed\": " + std::to_string(r.seed);
      out += i + 1 < rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
  }
  return out;
}

// Writes rendered rows to a file or standard output.
inline void emit(const std::vector<ResultRow>& rows, OutputFormat format,
                 const std::string& out_path) {
  const std::string text = render(rows, format);
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw io_error("failed writing to standard output");
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw io_error("cannot open output file '" + out_path + "'");
  file << text;
  file.flush();
  if (!file) throw io_error("failed writing output file '" + out_path + "'");
}

}  // namespace qsw
