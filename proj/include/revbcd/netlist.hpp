#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revbcd/gates.hpp"

namespace revbcd {

struct ConstantLine {
  std::string wire;
  std::uint8_t value = 0;

  friend bool operator==(const ConstantLine&, const ConstantLine&) = default;
};

struct GateInstance {
  GatePtr gate;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Equal when they use the same gate name on the same wires.
bool operator==(const GateInstance& lhs, const GateInstance& rhs);

/// Feed-forward reversible circuit. Every wire is defined once (primary
/// input, constant or gate output) and consumed at most once (gate input or
/// primary output). Gates execute in vector order.
struct Netlist {
  std::string name;
  std::vector<std::string> primary_inputs;
  std::vector<ConstantLine> constants;
  std::vector<GateInstance> gates;
  std::vector<std::string> primary_outputs;

  friend bool operator==(const Netlist&, const Netlist&) = default;
};

enum class Rule {
  kInvalidIdentifier,
  kInvalidConstant,
  kMissingGate,
  kNonBijectiveGate,
  kArityMismatch,
  kRedefinition,
  kUseBeforeDefinition,
  kFanOut,
  kUndefinedOutput,
  kDuplicateOutput,
  kLineConservation,
  kUnusedConstant,  // warning only
};

const char* to_string(Rule rule);

struct Violation {
  Rule rule;
  std::string wire;                       // empty when the rule is not wire-specific
  std::optional<std::size_t> gate_index;  // position in Netlist::gates
  std::string message;
  bool warning = false;
};

struct ValidationReport {
  std::vector<Violation> violations;

  /// No errors; warnings are allowed.
  bool ok() const;
  std::vector<Violation> errors() const;
  std::vector<Violation> warnings() const;
};

ValidationReport validate(const Netlist& netlist);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws ValidationError unless validate(netlist).ok().
void require_valid(const Netlist& netlist);

/// Wires defined but neither consumed by a gate nor listed as primary
/// outputs, in definition order. Throws ValidationError for invalid input.
std::vector<std::string> garbage_wires(const Netlist& netlist);

/// |inputs| + |constants| - |primary outputs|.
std::size_t conserved_garbage_count(const Netlist& netlist);

/// All wires in definition order: primary inputs, constants, gate outputs.
std::vector<std::string> defined_wires(const Netlist& netlist);

/// Places `rhs` after `lhs` as disjoint circuits. Wire names must not
/// collide; the result is not validated.
Netlist concatenate(const Netlist& lhs, const Netlist& rhs, std::string name);

}  // namespace revbcd
