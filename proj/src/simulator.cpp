#include "revbcd/simulator.hpp"

#include <unordered_set>

namespace revbcd {

Simulator::Simulator(Netlist netlist) : netlist_(std::move(netlist)) {
  require_valid(netlist_);

  names_ = defined_wires(netlist_);
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);

  std::size_t next = 0;
  for (std::size_t i = 0; i < netlist_.primary_inputs.size(); ++i) inputs_.push_back(next++);
  for (std::size_t i = 0; i < netlist_.constants.size(); ++i) constants_.push_back(next++);
  for (const auto& g : netlist_.gates) {
    Op op{g.gate.get(), {}, {}};
    for (const auto& w : g.inputs) op.in.push_back(index_.at(w));
    for (const auto& w : g.outputs) op.out.push_back(index_.at(w));
    ops_.push_back(std::move(op));
  }
  for (const auto& w : netlist_.primary_outputs) outputs_.push_back(index_.at(w));

  garbage_names_ = garbage_wires(netlist_);
  for (const auto& w : garbage_names_) garbage_.push_back(index_.at(w));

  terminals_ = outputs_;
  terminals_.insert(terminals_.end(), garbage_.begin(), garbage_.end());
  terminal_names_ = netlist_.primary_outputs;
  terminal_names_.insert(terminal_names_.end(), garbage_names_.begin(), garbage_names_.end());

  source_names_ = netlist_.primary_inputs;
  for (const auto& c : netlist_.constants) source_names_.push_back(c.wire);
}

std::size_t Simulator::wire_index(const std::string& wire) const {
  auto it = index_.find(wire);
  if (it == index_.end()) throw SimulationError("unknown wire " + wire);
  return it->second;
}

BitVector Simulator::gather(const BitVector& lines, const std::vector<std::size_t>& idx) {
  BitVector out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(lines[i]);
  return out;
}

void Simulator::propagate(BitVector& lines) const {
  for (const auto& op : ops_) {
    std::uint16_t pattern = 0;
    for (auto i : op.in) pattern = static_cast<std::uint16_t>((pattern << 1) | lines[i]);
    const auto result = op.gate->apply(pattern);
    const auto k = op.out.size();
    for (std::size_t j = 0; j < k; ++j) lines[op.out[j]] = (result >> (k - 1 - j)) & 1u;
  }
}

BitVector Simulator::forward(std::span<const std::uint8_t> inputs) const {
  if (inputs.size() != inputs_.size()) {
    throw SimulationError("expected " + std::to_string(inputs_.size()) + " input bits, got " +
                          std::to_string(inputs.size()));
  }
  BitVector lines(names_.size(), 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) lines[inputs_[i]] = inputs[i] & 1u;
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    lines[constants_[i]] = netlist_.constants[i].value;
  }
  propagate(lines);
  return lines;
}

BitVector Simulator::forward_all_sources(std::span<const std::uint8_t> sources) const {
  if (sources.size() != inputs_.size() + constants_.size()) {
    throw SimulationError("expected " + std::to_string(inputs_.size() + constants_.size()) +
                          " source bits, got " + std::to_string(sources.size()));
  }
  BitVector lines(names_.size(), 0);
  for (std::size_t i = 0; i < inputs_.size(); ++i) lines[inputs_[i]] = sources[i] & 1u;
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    lines[constants_[i]] = sources[inputs_.size() + i] & 1u;
  }
  propagate(lines);
  return lines;
}

BitVector Simulator::backward(std::span<const std::uint8_t> terminals) const {
  if (terminals.size() != terminals_.size()) {
    throw SimulationError("expected " + std::to_string(terminals_.size()) +
                          " terminal bits, got " + std::to_string(terminals.size()));
  }
  BitVector lines(names_.size(), 0);
  for (std::size_t i = 0; i < terminals.size(); ++i) lines[terminals_[i]] = terminals[i] & 1u;
  for (auto op = ops_.rbegin(); op != ops_.rend(); ++op) {
    std::uint16_t pattern = 0;
    for (auto i : op->out) pattern = static_cast<std::uint16_t>((pattern << 1) | lines[i]);
    const auto result = op->gate->apply_inverse(pattern);
    const auto k = op->in.size();
    for (std::size_t j = 0; j < k; ++j) lines[op->in[j]] = (result >> (k - 1 - j)) & 1u;
  }
  BitVector sources = gather(lines, inputs_);
  for (auto i : constants_) sources.push_back(lines[i]);
  return sources;
}

namespace {

Assignment to_assignment(const std::vector<std::string>& names, const BitVector& bits) {
  Assignment out;
  for (std::size_t i = 0; i < names.size(); ++i) out.emplace(names[i], bits[i]);
  return out;
}

BitVector lookup(const Assignment& a, const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> expected(names.begin(), names.end());
  for (const auto& [wire, value] : a) {
    if (!expected.contains(wire)) {
      throw SimulationError(std::string("unexpected ") + what + " binding for wire " + wire);
    }
    if (value > 1) throw SimulationError("wire " + wire + " bound to non-bit value");
  }
  BitVector bits;
  bits.reserve(names.size());
  for (const auto& w : names) {
    auto it = a.find(w);
    if (it == a.end()) throw SimulationError(std::string("missing ") + what + " binding for " + w);
    bits.push_back(it->second);
  }
  return bits;
}

}  // namespace

TraceResult Simulator::run(const Assignment& in) const {
  const auto lines = forward(lookup(in, netlist_.primary_inputs, "input"));
  return {to_assignment(netlist_.primary_outputs, primary_bits(lines)),
          to_assignment(garbage_names_, garbage_bits(lines)), to_assignment(names_, lines)};
}

Assignment Simulator::run_inverse(const Assignment& terminals) const {
  return to_assignment(source_names_, backward(lookup(terminals, terminal_names_, "terminal")));
}

TraceResult run(const Netlist& netlist, const Assignment& in) { return Simulator(netlist).run(in); }

Assignment run_inverse(const Netlist& netlist, const Assignment& terminals) {
  return Simulator(netlist).run_inverse(terminals);
}

namespace {

void require_within(std::size_t inputs, std::size_t limit) {
  if (inputs > limit) {
    throw SimulationError("circuit has " + std::to_string(inputs) +
                          " primary inputs, above the exhaustive limit of " +
                          std::to_string(limit) + " (raise it with --max-inputs)");
  }
  if (inputs >= 64) throw SimulationError("exhaustive sweeps support at most 63 inputs");
}

}  // namespace

void for_each_pattern(const Simulator& sim, std::size_t limit,
                      const std::function<void(const TruthRow&)>& visit) {
  const auto width = sim.netlist().primary_inputs.size();
  require_within(width, limit);
  const std::uint64_t count = std::uint64_t{1} << width;
  TruthRow row;
  for (std::uint64_t x = 0; x < count; ++x) {
    const auto lines = sim.forward(unpack_bits(x, width));
    row.input = x;
    row.primary = sim.primary_bits(lines);
    row.garbage = sim.garbage_bits(lines);
    visit(row);
  }
}

std::vector<TruthRow> truth_table(const Netlist& netlist, std::size_t limit) {
  const Simulator sim(netlist);
  std::vector<TruthRow> rows;
  for_each_pattern(sim, limit, [&](const TruthRow& row) { rows.push_back(row); });
  return rows;
}

EquivalenceResult check_equivalence(const Netlist& netlist, const Oracle& oracle,
                                    const Domain& domain, EquivalenceOptions opts) {
  const Simulator sim(netlist);
  if (netlist.primary_outputs.size() > 64) {
    throw SimulationError("equivalence checking supports at most 64 primary outputs");
  }
  const auto width = netlist.primary_inputs.size();
  require_within(width, opts.input_limit);
  EquivalenceResult result;
  const std::uint64_t count = std::uint64_t{1} << width;
  for (std::uint64_t x = 0; x < count; ++x) {
    if (domain && !domain(x)) continue;
    ++result.checked;
    const auto actual = pack_bits(sim.primary_bits(sim.forward(unpack_bits(x, width))));
    const auto expected = oracle(x);
    if (actual != expected) {
      ++result.mismatches;
      if (result.counterexamples.size() < opts.max_counterexamples) {
        result.counterexamples.push_back({x, expected, actual});
      }
    }
  }
  return result;
}

}  // namespace revbcd
