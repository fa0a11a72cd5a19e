#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revbcd/netlist.hpp"

namespace revbcd {

/// Wire name to bit value.
using Assignment = std::map<std::string, std::uint8_t>;

struct TraceResult {
  Assignment primary_out;
  Assignment garbage_out;
  Assignment all_lines;
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default ceiling on the number of primary inputs swept exhaustively.
inline constexpr std::size_t kDefaultInputLimit = 20;
inline constexpr std::size_t kDefaultCounterexampleCap = 16;

/// A validated netlist lowered to dense wire indices. Construction throws
/// ValidationError for an invalid netlist; evaluation is const and can be
/// shared between threads.
class Simulator {
 public:
  explicit Simulator(Netlist netlist);

  const Netlist& netlist() const { return netlist_; }
  /// Primary outputs followed by garbage wires: the order used for inverse
  /// simulation bit strings.
  const std::vector<std::string>& terminal_wires() const { return terminal_names_; }
  const std::vector<std::string>& garbage() const { return garbage_names_; }
  /// Primary inputs followed by constants.
  const std::vector<std::string>& source_wires() const { return source_names_; }

  /// Values of every wire (indexed as wire_index()) for the given primary
  /// inputs in declaration order. Constants take their declared values.
  BitVector forward(std::span<const std::uint8_t> inputs) const;
  /// Same, but every source line (inputs then constants) is supplied.
  BitVector forward_all_sources(std::span<const std::uint8_t> sources) const;
  /// Source-line values (inputs then constants) recovered from terminal
  /// values (primary outputs then garbage).
  BitVector backward(std::span<const std::uint8_t> terminals) const;

  BitVector primary_bits(const BitVector& lines) const { return gather(lines, outputs_); }
  BitVector garbage_bits(const BitVector& lines) const { return gather(lines, garbage_); }
  BitVector terminal_bits(const BitVector& lines) const { return gather(lines, terminals_); }

  TraceResult run(const Assignment& in) const;
  Assignment run_inverse(const Assignment& terminals) const;

  std::size_t wire_index(const std::string& wire) const;
  std::size_t wire_count() const { return names_.size(); }

 private:
  struct Op {
    const GateDefinition* gate;
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
  };

  static BitVector gather(const BitVector& lines, const std::vector<std::size_t>& idx);
  void propagate(BitVector& lines) const;

  Netlist netlist_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::size_t> inputs_;
  std::vector<std::size_t> constants_;
  std::vector<Op> ops_;
  std::vector<std::size_t> outputs_;
  std::vector<std::size_t> garbage_;
  std::vector<std::size_t> terminals_;
  std::vector<std::string> garbage_names_;
  std::vector<std::string> terminal_names_;
  std::vector<std::string> source_names_;
};

TraceResult run(const Netlist& netlist, const Assignment& in);
Assignment run_inverse(const Netlist& netlist, const Assignment& terminals);

struct TruthRow {
  std::uint64_t input;  // primary inputs packed in declaration order, first most significant
  BitVector primary;
  BitVector garbage;
};

/// Calls `visit` for every input pattern in ascending order. Throws
/// SimulationError naming --max-inputs when the input count exceeds `limit`.
void for_each_pattern(const Simulator& sim, std::size_t limit,
                      const std::function<void(const TruthRow&)>& visit);

std::vector<TruthRow> truth_table(const Netlist& netlist, std::size_t limit = kDefaultInputLimit);

/// Maps a packed input pattern to the expected packed primary outputs.
using Oracle = std::function<std::uint64_t(std::uint64_t)>;
using Domain = std::function<bool(std::uint64_t)>;

struct Counterexample {
  std::uint64_t input;
  std::uint64_t expected;
  std::uint64_t actual;
};

struct EquivalenceResult {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<Counterexample> counterexamples;  // first `cap` mismatches

  bool ok() const { return mismatches == 0; }
};

struct EquivalenceOptions {
  std::size_t input_limit = kDefaultInputLimit;
  std::size_t max_counterexamples = kDefaultCounterexampleCap;
};

/// Compares packed primary outputs against `oracle` on every input pattern
/// accepted by `domain`. Requires at most 64 primary outputs.
EquivalenceResult check_equivalence(const Netlist& netlist, const Oracle& oracle,
                                    const Domain& domain, EquivalenceOptions opts = {});

}  // namespace revbcd
