#pragma once

// Generator of random structurally valid netlists for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "revbcd/gates.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd::testing {

struct RandomNetlistOptions {
  std::size_t max_inputs = 6;
  std::size_t max_constants = 4;
  std::size_t max_gates = 8;
  std::size_t min_lines = 1;
  std::string wire_stem = "w";
};

inline Netlist random_netlist(std::mt19937_64& rng, const RandomNetlistOptions& opts = {},
                              const GateRegistry& registry = builtin_registry()) {
  auto pick = [&rng](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  Netlist n;
  n.name = "rand" + std::to_string(pick(0, 9999));
  std::size_t next_wire = 0;
  auto fresh = [&] { return opts.wire_stem + std::to_string(next_wire++); };

  std::vector<std::string> live;
  const auto inputs = pick(0, opts.max_inputs);
  for (std::size_t i = 0; i < inputs; ++i) {
    n.primary_inputs.push_back(fresh());
    live.push_back(n.primary_inputs.back());
  }
  auto constants = pick(0, opts.max_constants);
  if (inputs + constants < opts.min_lines) constants = opts.min_lines - inputs;
  for (std::size_t i = 0; i < constants; ++i) {
    n.constants.push_back({fresh(), static_cast<std::uint8_t>(pick(0, 1))});
    live.push_back(n.constants.back().wire);
  }

  const auto names = registry.names();
  const auto gates = pick(0, opts.max_gates);
  for (std::size_t g = 0; g < gates; ++g) {
    std::vector<GatePtr> fitting;
    for (const auto& name : names) {
      auto def = registry.at(name);
      if (def->arity() <= live.size()) fitting.push_back(def);
    }
    if (fitting.empty()) break;
    auto def = fitting[pick(0, fitting.size() - 1)];
    std::shuffle(live.begin(), live.end(), rng);
    GateInstance inst{def, {}, {}};
    for (std::size_t k = 0; k < def->arity(); ++k) {
      inst.inputs.push_back(live.back());
      live.pop_back();
    }
    for (std::size_t k = 0; k < def->arity(); ++k) {
      inst.outputs.push_back(fresh());
      live.push_back(inst.outputs.back());
    }
    n.gates.push_back(std::move(inst));
  }

  std::shuffle(live.begin(), live.end(), rng);
  const auto outputs = pick(0, live.size());
  n.primary_outputs.assign(live.begin(), live.begin() + static_cast<long>(outputs));
  return n;
}

}  // namespace revbcd::testing
