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

// The quantum switch: N channels traversed in a coherent superposition of
// orderings, steered by a control qudit whose basis states select the order.
// Conventions, shared by everything downstream:
//   - the control is the FIRST tensor factor (control (x) target);
//   - an order tuple (o1,...,oN) applies channel o1 first, so the operator
//     product is K_{oN} * ... * K_{o1} (first-acting channel rightmost).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qswitch/channels.hpp"
#include "qswitch/qmath.hpp"

namespace qsw {

enum class OrderKind { cyclic, full, fixed };

inline const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::cyclic: return "cyclic";
    case OrderKind::full: return "full";
    case OrderKind::fixed: return "fixed";
  }
  return "?";
}

// A set of channel orderings, one control basis state per order.
struct OrderSet {
  int n = 0;
  OrderKind kind = OrderKind::fixed;
  std::vector<std::vector<int>> orders;

  int count() const { return static_cast<int>(orders.size()); }
};

// The N cyclic rotations: order k is (k, k+1, ..., N-1, 0, ..., k-1).
inline OrderSet cyclic_orders(int n) {
  if (n < 1) throw validation_error("cyclic_orders: n must be positive");
  OrderSet set{n, OrderKind::cyclic, {}};
  set.orders.reserve(n);
  for (int k = 0; k < n; ++k) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = (k + i) % n;
    set.orders.push_back(std::move(order));
  }
  return set;
}

// All n! permutations in lexicographic order. Capped at n = 6; the control
// dimension grows as n! and anything larger is out of scope.
inline OrderSet full_orders(int n) {
  if (n < 1 || n > 6) throw validation_error("full_orders: n must be in 1..6");
  OrderSet set{n, OrderKind::full, {}};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    set.orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return set;
}

inline OrderSet fixed_order(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  if (n < 1) throw validation_error("fixed_order: empty order");
  std::vector<bool> seen(n, false);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw validation_error("fixed_order: not a permutation");
    seen[v] = true;
  }
  OrderSet set{n, OrderKind::fixed, {}};
  set.orders.push_back(std::move(order));
  return set;
}

inline OrderSet fixed_order(int n) {
  if (n < 1) throw validation_error("fixed_order: n must be positive");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return fixed_order(std::move(order));
}

inline OrderSet make_orders(OrderKind kind, int n) {
  switch (kind) {
    case OrderKind::cyclic: return cyclic_orders(n);
    case OrderKind::full: return full_orders(n);
    case OrderKind::fixed: return fixed_order(n);
  }
  throw validation_error("make_orders: bad order kind");
}

// Full description of one switch experiment: the channels, the order set the
// control spans, and the control preparation/projection states.
struct SwitchSpec {
  SwitchSpec(std::vector<KrausChannel> channels_, OrderSet order_set_, StateVector control_in_,
             StateVector control_projector_)
      : channels(std::move(channels_)),
        order_set(std::move(order_set_)),
        control_in(std::move(control_in_)),
        control_projector(std::move(control_projector_)) {
    if (channels.empty()) throw validation_error("SwitchSpec: no channels");
    if (static_cast<int>(channels.size()) != order_set.n) {
      throw dimension_error("SwitchSpec: channel count differs from order length");
    }
    const int d = channels.front().dim();
    for (const KrausChannel& c : channels) {
      if (c.dim() != d) throw dimension_error("SwitchSpec: channels must share one dimension");
    }
    if (control_in.dim() != order_set.count() || control_projector.dim() != order_set.count()) {
      throw dimension_error("SwitchSpec: control dimension must equal the number of orders");
    }
  }

  int n() const { return order_set.n; }
  int dim() const { return channels.front().dim(); }

  std::vector<KrausChannel> channels;
  OrderSet order_set;
  StateVector control_in;
  StateVector control_projector;
};

// N copies of the completely depolarizing channel with |+> control in and out.
inline SwitchSpec make_cdc_switch(int n, int d, OrderKind kind) {
  const OrderSet set = make_orders(kind, n);
  std::vector<KrausChannel> channels(n, depolarizing_channel(d));
  StateVector plus = StateVector::uniform(set.count());
  return SwitchSpec(std::move(channels), set, plus, plus);
}

// Streams the joint Kraus operators one index tuple at a time. For each tuple
// (i_1..i_N) of per-channel Kraus indices the joint operator is block diagonal
// in the control basis:  W = sum_k |k><k|_c (x) (product along order k).
// Tuples advance in lexicographic order, rightmost index fastest.
template <typename Visitor>
inline void for_each_switch_kraus(const SwitchSpec& spec, Visitor&& visit) {
  const int n = spec.n();
  const int d = spec.dim();
  const int m = spec.order_set.count();
  const int jd = m * d;
  std::vector<int> tuple(n, 0);

  for (;;) {
    ComplexMatrix w(jd, jd);
    for (int k = 0; k < m; ++k) {
      ComplexMatrix block = ComplexMatrix::identity(d);
      for (int ch : spec.order_set.orders[k]) {
        block = spec.channels[ch].kraus(tuple[ch]) * block;  // first-acting rightmost
      }
      const int base = k * d;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) w(base + i, base + j) = block(i, j);
    }
    visit(w);

    int pos = n - 1;
    while (pos >= 0 && ++tuple[pos] == spec.channels[pos].size()) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

// Materialized joint Kraus set. Fine for the scales this library targets
// (256 operators of size 8x8 in the headline case); callers with larger
// tuple spaces should stream via for_each_switch_kraus instead.
inline std::vector<ComplexMatrix> switch_kraus(const SwitchSpec& spec) {
  std::int64_t total = 1;
  for (const KrausChannel& c : spec.channels) {
    total *= c.size();
    if (total > 1'000'000) {
      throw validation_error("switch_kraus: joint Kraus set too large to materialize");
    }
  }
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(total));
  for_each_switch_kraus(spec, [&](const ComplexMatrix& w) { out.push_back(w); });
  return out;
}

// Post-selected result of one switch run: the unnormalized conditional state
// (its trace is the success probability) and, when the outcome is reachable,
// the normalized state.
struct ConditionalOutcome {
  ComplexMatrix unnormalized;
  double probability = 0.0;
  std::optional<DensityMatrix> normalized;
};

// Evolves control_in (x) rho through the joint Kraus set, projects the control
// onto control_projector, and traces the control out.
inline ConditionalOutcome run_switch(const SwitchSpec& spec, const DensityMatrix& rho) {
  const int d = spec.dim();
  if (rho.dim() != d) throw dimension_error("run_switch: input dimension mismatch");
  const int m = spec.order_set.count();

  const ComplexMatrix joint_in = tensor(spec.control_in.projector(), rho.matrix());
  ComplexMatrix evolved(m * d, m * d);
  for_each_switch_kraus(spec, [&](const ComplexMatrix& w) {
    evolved += w * joint_in * w.adjoint();
  });

  const ComplexMatrix proj =
      tensor(spec.control_projector.projector(), ComplexMatrix::identity(d));
  const ComplexMatrix selected = proj * evolved * proj;
  ComplexMatrix unnormalized = partial_trace_control(selected, m, d);

  double p = unnormalized.trace().real();
  p = std::min(std::max(p, 0.0), 1.0);

  ConditionalOutcome out;
  out.probability = p;
  if (p > tol::zero_probability) {
    out.normalized = DensityMatrix(unnormalized / p);
  }
  out.unnormalized = std::move(unnormalized);
  return out;
}

// Closed-form conditional state for the cyclic-order switch over N copies of
// the completely depolarizing channel:
//   (N-1)/(N-1+d^2) * rho  +  d^2/(N-1+d^2) * I/d
inline DensityMatrix effective_channel_prediction(int n, int d, const DensityMatrix& rho) {
  if (n < 1) throw validation_error("effective_channel_prediction: n must be positive");
  if (d < 2) throw validation_error("effective_channel_prediction: d must be at least 2");
  if (rho.dim() != d) throw dimension_error("effective_channel_prediction: dimension mismatch");
  const double denom = double(n - 1) + double(d) * d;
  const double w_rho = double(n - 1) / denom;
  const double w_mix = double(d) * d / denom;
  return DensityMatrix(w_rho * rho.matrix() +
                       (w_mix / d) * ComplexMatrix::identity(d));
}

// Success probability of the |+> post-selection. Input-independent for
// depolarizing channels, so any probe state works; the maximally mixed state
// is used here.
inline double success_probability(const SwitchSpec& spec) {
  return run_switch(spec, DensityMatrix::maximally_mixed(spec.dim())).probability;
}

// Closed form for the cyclic CDC case, (N-1+d^2)/(N d^2); agrees with the
// brute-force success_probability over the full Kraus tuple sum (asserted in
// the test suite).
inline double cyclic_success_probability(int n, int d) {
  if (n < 1) throw validation_error("cyclic_success_probability: n must be positive");
  if (d < 2) throw validation_error("cyclic_success_probability: d must be at least 2");
  return (double(n - 1) + double(d) * d) / (double(n) * d * d);
}

}  // namespace qsw
