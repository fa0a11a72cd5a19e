#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "revbcd/gates.hpp"
#include "revbcd/metrics.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

/// Position of a problem in netlist text. `token` is 1-based within the
/// line (the directive keyword is token 1); 0 when the whole line is meant.
struct Diagnostic {
  std::size_t line = 0;
  std::size_t token = 0;
  std::string message;
  bool structural = false;  // a wiring rule was broken rather than the grammar
};

std::string to_string(const Diagnostic& d);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Line-oriented netlist text:
///
///   circuit NAME
///   inputs W...
///   const W BIT              (repeatable)
///   gate GATE IN... -> OUT... (repeatable, execution order)
///   outputs W...
///   end
///
/// `#` starts a comment. All problems found are reported together in a
/// ParseError; no partial netlist is returned.
Netlist parse_netlist(std::string_view text, const GateRegistry& registry = builtin_registry());

/// Canonical text. Throws ValidationError for an invalid netlist.
std::string serialize_netlist(const Netlist& netlist);

/// Metrics in a fixed key order:
/// {gate_count, gates, quantum_cost, garbage, constants, logical{xor, and, not}}.
nlohmann::ordered_json to_json(const MetricsReport& report);
nlohmann::ordered_json to_json(const ComparisonTable& table);

}  // namespace revbcd
