#include "revbcd/netlist.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace revbcd {

bool operator==(const GateInstance& lhs, const GateInstance& rhs) {
  const bool same_gate = (lhs.gate == rhs.gate) ||
                         (lhs.gate && rhs.gate && lhs.gate->name() == rhs.gate->name());
  return same_gate && lhs.inputs == rhs.inputs && lhs.outputs == rhs.outputs;
}

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::kInvalidIdentifier: return "invalid-identifier";
    case Rule::kInvalidConstant: return "invalid-constant";
    case Rule::kMissingGate: return "missing-gate";
    case Rule::kNonBijectiveGate: return "non-bijective-gate";
    case Rule::kArityMismatch: return "arity-mismatch";
    case Rule::kRedefinition: return "redefinition";
    case Rule::kUseBeforeDefinition: return "use-before-definition";
    case Rule::kFanOut: return "fan-out";
    case Rule::kUndefinedOutput: return "undefined-output";
    case Rule::kDuplicateOutput: return "duplicate-output";
    case Rule::kLineConservation: return "line-conservation";
    case Rule::kUnusedConstant: return "unused-constant";
  }
  return "unknown";
}

bool ValidationReport::ok() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return !v.warning; });
}

std::vector<Violation> ValidationReport::errors() const {
  std::vector<Violation> out;
  std::copy_if(violations.begin(), violations.end(), std::back_inserter(out),
               [](const Violation& v) { return !v.warning; });
  return out;
}

std::vector<Violation> ValidationReport::warnings() const {
  std::vector<Violation> out;
  std::copy_if(violations.begin(), violations.end(), std::back_inserter(out),
               [](const Violation& v) { return v.warning; });
  return out;
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid netlist";
  for (const auto& v : report.errors()) os << "\n  " << to_string(v.rule) << ": " << v.message;
  return os.str();
}

std::string gate_label(std::size_t index, const GateInstance& inst) {
  return "gate #" + std::to_string(index) + " (" + (inst.gate ? inst.gate->name() : "?") + ")";
}

class Checker {
 public:
  explicit Checker(const Netlist& n) : n_(n) {}

  ValidationReport run() {
    for (const auto& w : n_.primary_inputs) define(w, std::nullopt, "primary input");
    for (const auto& c : n_.constants) {
      if (c.value > 1) {
        error(Rule::kInvalidConstant, c.wire, std::nullopt,
              "constant " + c.wire + " has value " + std::to_string(c.value) + ", expected 0 or 1");
      }
      define(c.wire, std::nullopt, "constant");
    }
    for (std::size_t i = 0; i < n_.gates.size(); ++i) check_gate(i, n_.gates[i]);
    check_outputs();
    check_constants_used();
    if (report_.ok()) check_conservation();
    return std::move(report_);
  }

 private:
  void error(Rule rule, std::string wire, std::optional<std::size_t> gate, std::string msg) {
    report_.violations.push_back({rule, std::move(wire), gate, std::move(msg), false});
  }

  void define(const std::string& w, std::optional<std::size_t> gate, const std::string& where) {
    if (!is_identifier(w)) {
      error(Rule::kInvalidIdentifier, w, gate, "invalid wire identifier '" + w + "' in " + where);
    }
    if (!defined_.insert(w).second) {
      error(Rule::kRedefinition, w, gate, "wire " + w + " redefined by " + where);
    }
  }

  void check_gate(std::size_t index, const GateInstance& inst) {
    const auto label = gate_label(index, inst);
    if (!inst.gate) {
      error(Rule::kMissingGate, "", index, label + " references no gate definition");
    } else {
      if (!inst.gate->is_bijective()) {
        error(Rule::kNonBijectiveGate, "", index, label + " is not a bijection");
      }
      const auto k = inst.gate->arity();
      if (inst.inputs.size() != k || inst.outputs.size() != k) {
        error(Rule::kArityMismatch, "", index,
              label + " has arity " + std::to_string(k) + " but " +
                  std::to_string(inst.inputs.size()) + " inputs and " +
                  std::to_string(inst.outputs.size()) + " outputs");
      }
    }
    for (const auto& w : inst.inputs) {
      if (!defined_.contains(w)) {
        error(Rule::kUseBeforeDefinition, w, index,
              "use before definition: " + w + " consumed by " + label);
      }
      if (!consumed_.insert(w).second) {
        error(Rule::kFanOut, w, index, "fan-out at " + w + " (consumed again by " + label + ")");
      }
    }
    for (const auto& w : inst.outputs) define(w, index, label);
  }

  void check_outputs() {
    std::unordered_set<std::string> seen;
    for (const auto& w : n_.primary_outputs) {
      if (!seen.insert(w).second) {
        error(Rule::kDuplicateOutput, w, std::nullopt, "primary output " + w + " listed twice");
        continue;
      }
      if (!defined_.contains(w)) {
        error(Rule::kUndefinedOutput, w, std::nullopt, "primary output " + w + " is never defined");
      } else if (consumed_.contains(w)) {
        error(Rule::kFanOut, w, std::nullopt,
              "fan-out at " + w + " (consumed by a gate and listed as primary output)");
      }
    }
  }

  void check_constants_used() {
    for (const auto& c : n_.constants) {
      if (!consumed_.contains(c.wire)) {
        report_.violations.push_back({Rule::kUnusedConstant, c.wire, std::nullopt,
                                      "constant " + c.wire + " is not consumed by any gate",
                                      true});
      }
    }
  }

  void check_conservation() {
    const std::size_t sources = n_.primary_inputs.size() + n_.constants.size();
    const std::size_t garbage = defined_.size() - consumed_.size() - n_.primary_outputs.size();
    if (sources != n_.primary_outputs.size() + garbage) {
      error(Rule::kLineConservation, "", std::nullopt,
            "line conservation broken: " + std::to_string(sources) + " source lines vs " +
                std::to_string(n_.primary_outputs.size()) + " outputs + " +
                std::to_string(garbage) + " garbage");
    }
  }

  const Netlist& n_;
  ValidationReport report_;
  std::unordered_set<std::string> defined_;
  std::unordered_set<std::string> consumed_;
};

}  // namespace

ValidationReport validate(const Netlist& netlist) { return Checker(netlist).run(); }

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

void require_valid(const Netlist& netlist) {
  auto report = validate(netlist);
  if (!report.ok()) throw ValidationError(std::move(report));
}

std::vector<std::string> defined_wires(const Netlist& netlist) {
  std::vector<std::string> wires = netlist.primary_inputs;
  for (const auto& c : netlist.constants) wires.push_back(c.wire);
  for (const auto& g : netlist.gates) wires.insert(wires.end(), g.outputs.begin(), g.outputs.end());
  return wires;
}

std::vector<std::string> garbage_wires(const Netlist& netlist) {
  require_valid(netlist);
  std::unordered_set<std::string> used(netlist.primary_outputs.begin(),
                                       netlist.primary_outputs.end());
  for (const auto& g : netlist.gates) used.insert(g.inputs.begin(), g.inputs.end());
  std::vector<std::string> garbage;
  for (auto& w : defined_wires(netlist)) {
    if (!used.contains(w)) garbage.push_back(std::move(w));
  }
  return garbage;
}

std::size_t conserved_garbage_count(const Netlist& netlist) {
  const std::size_t sources = netlist.primary_inputs.size() + netlist.constants.size();
  const std::size_t outputs = netlist.primary_outputs.size();
  return sources >= outputs ? sources - outputs : 0;
}

Netlist concatenate(const Netlist& lhs, const Netlist& rhs, std::string name) {
  Netlist out;
  out.name = std::move(name);
  auto append = [](auto& dst, const auto& a, const auto& b) {
    dst = a;
    dst.insert(dst.end(), b.begin(), b.end());
  };
  append(out.primary_inputs, lhs.primary_inputs, rhs.primary_inputs);
  append(out.constants, lhs.constants, rhs.constants);
  append(out.gates, lhs.gates, rhs.gates);
  append(out.primary_outputs, lhs.primary_outputs, rhs.primary_outputs);
  return out;
}

}  // namespace revbcd
