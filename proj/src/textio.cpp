#include "revbcd/textio.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace revbcd {

std::string to_string(const Diagnostic& d) {
  std::string out = "line " + std::to_string(d.line);
  if (d.token) out += ", token " + std::to_string(d.token);
  return out + ": " + d.message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diags) {
  std::string out = "parse failed";
  for (const auto& d : diags) out += "\n  " + to_string(d);
  return out;
}

std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

enum class Section { kStart, kHeader, kInputs, kBody, kOutputs, kEnd };

class Parser {
 public:
  explicit Parser(const GateRegistry& registry) : registry_(registry) {}

  Netlist parse(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto stop = text.find('\n', start);
      if (stop == std::string_view::npos) stop = text.size();
      ++line_no;
      line_ = line_no;
      auto tokens = tokenize(text.substr(start, stop - start));
      if (!tokens.empty()) directive(tokens);
      start = stop + 1;
    }
    line_ = line_no;
    if (section_ == Section::kStart) {
      error(0, "missing 'circuit' line");
    } else if (section_ != Section::kEnd) {
      error(0, "missing 'end' line");
    }
    if (!diags_.empty()) throw ParseError(std::move(diags_));

    auto report = validate(net_);
    if (!report.ok()) {
      for (const auto& v : report.errors()) diags_.push_back({line_no, 0, v.message, true});
      throw ParseError(std::move(diags_));
    }
    return std::move(net_);
  }

 private:
  void error(std::size_t token, std::string message, bool structural = false) {
    diags_.push_back({line_, token, std::move(message), structural});
  }

  void directive(const std::vector<std::string>& t) {
    const auto& kw = t[0];
    if (section_ == Section::kEnd) {
      error(1, "content after 'end'");
    } else if (kw == "circuit") {
      circuit(t);
    } else if (section_ == Section::kStart) {
      error(1, "expected 'circuit' before '" + kw + "'");
      section_ = Section::kHeader;  // report once, keep checking the rest
    } else if (kw == "inputs") {
      inputs(t);
    } else if (kw == "const") {
      constant(t);
    } else if (kw == "gate") {
      gate(t);
    } else if (kw == "outputs") {
      outputs(t);
    } else if (kw == "end") {
      if (t.size() > 1) error(2, "unexpected token after 'end'");
      if (section_ != Section::kOutputs) error(1, "'end' before 'outputs'");
      section_ = Section::kEnd;
    } else {
      error(1, "unknown directive '" + kw + "'");
    }
  }

  void circuit(const std::vector<std::string>& t) {
    if (section_ != Section::kStart) {
      error(1, "duplicate 'circuit' line");
      return;
    }
    section_ = Section::kHeader;
    if (t.size() != 2) {
      error(t.size() < 2 ? 1 : 3, "'circuit' takes exactly one name");
      return;
    }
    if (!is_identifier(t[1])) error(2, "invalid circuit name '" + t[1] + "'");
    net_.name = t[1];
  }

  void inputs(const std::vector<std::string>& t) {
    if (section_ != Section::kHeader) {
      error(1, "'inputs' must directly follow 'circuit' and appear once");
      return;
    }
    section_ = Section::kInputs;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (define(t[i], i + 1)) net_.primary_inputs.push_back(t[i]);
    }
  }

  bool require_body(const std::string& kw) {
    if (section_ == Section::kHeader) {
      error(1, "'" + kw + "' before 'inputs'");
      section_ = Section::kInputs;
    } else if (section_ == Section::kOutputs) {
      error(1, "'" + kw + "' after 'outputs'");
      return false;
    }
    if (section_ == Section::kInputs) section_ = Section::kBody;
    return true;
  }

  void constant(const std::vector<std::string>& t) {
    if (!require_body("const")) return;
    if (t.size() != 3) {
      error(1, "'const' takes a wire and a bit");
      return;
    }
    if (t[2] != "0" && t[2] != "1") {
      error(3, "constant value must be 0 or 1, got '" + t[2] + "'");
      return;
    }
    if (define(t[1], 2)) {
      net_.constants.push_back({t[1], static_cast<std::uint8_t>(t[2] == "1" ? 1 : 0)});
    }
  }

  void gate(const std::vector<std::string>& t) {
    if (!require_body("gate")) return;
    if (t.size() < 2) {
      error(1, "'gate' needs a gate name");
      return;
    }
    std::size_t arrow = 0;
    for (std::size_t i = 2; i < t.size(); ++i) {
      if (t[i] == "->") {
        if (arrow) {
          error(i + 1, "second '->'");
          return;
        }
        arrow = i;
      }
    }
    if (!arrow) {
      error(1, "'gate' line lacks '->'");
      return;
    }
    const std::vector<std::string> ins(t.begin() + 2, t.begin() + static_cast<long>(arrow));
    const std::vector<std::string> outs(t.begin() + static_cast<long>(arrow) + 1, t.end());

    auto def = registry_.find(t[1]);
    bool ok = true;
    if (!def) {
      error(2, "unknown gate '" + t[1] + "'", true);
      ok = false;
    } else if (ins.size() != def->arity() || outs.size() != def->arity()) {
      error(2, "arity mismatch: " + t[1] + " takes " + std::to_string(def->arity()) +
                   " lines, got " + std::to_string(ins.size()) + " inputs and " +
                   std::to_string(outs.size()) + " outputs",
            true);
      ok = false;
    }
    for (std::size_t i = 0; i < ins.size(); ++i) ok = consume(ins[i], i + 3) && ok;
    for (std::size_t i = 0; i < outs.size(); ++i) ok = define(outs[i], arrow + 2 + i) && ok;
    if (ok) net_.gates.push_back({def, ins, outs});
  }

  void outputs(const std::vector<std::string>& t) {
    if (section_ == Section::kHeader) {
      error(1, "'outputs' before 'inputs'");
    } else if (section_ == Section::kOutputs) {
      error(1, "duplicate 'outputs' line");
      return;
    }
    section_ = Section::kOutputs;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (consume(t[i], i + 1)) net_.primary_outputs.push_back(t[i]);
    }
  }

  bool define(const std::string& wire, std::size_t token) {
    if (!is_identifier(wire)) {
      error(token, "invalid wire identifier '" + wire + "'");
      return false;
    }
    auto [it, inserted] = defined_.emplace(wire, line_);
    if (!inserted) {
      error(token, "redefinition of wire " + wire + " (first defined on line " +
                       std::to_string(it->second) + ")",
            true);
      return false;
    }
    return true;
  }

  bool consume(const std::string& wire, std::size_t token) {
    if (!defined_.contains(wire)) {
      error(token, "use before definition: wire " + wire, true);
      return false;
    }
    auto [it, inserted] = consumed_.emplace(wire, line_);
    if (!inserted) {
      error(token, "fan-out at " + wire + " (already consumed on line " +
                       std::to_string(it->second) + ")",
            true);
      return false;
    }
    return true;
  }

  const GateRegistry& registry_;
  Netlist net_;
  Section section_ = Section::kStart;
  std::size_t line_ = 0;
  std::vector<Diagnostic> diags_;
  std::map<std::string, std::size_t> defined_;
  std::map<std::string, std::size_t> consumed_;
};

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Netlist parse_netlist(std::string_view text, const GateRegistry& registry) {
  return Parser(registry).parse(text);
}

std::string serialize_netlist(const Netlist& netlist) {
  require_valid(netlist);
  std::ostringstream os;
  auto list = [&os](const char* kw, const std::vector<std::string>& wires) {
    os << kw;
    for (const auto& w : wires) os << ' ' << w;
    os << '\n';
  };
  os << "circuit " << netlist.name << '\n';
  list("inputs", netlist.primary_inputs);
  for (const auto& c : netlist.constants) {
    os << "const " << c.wire << ' ' << static_cast<int>(c.value) << '\n';
  }
  for (const auto& g : netlist.gates) {
    os << "gate " << g.gate->name();
    for (const auto& w : g.inputs) os << ' ' << w;
    os << " ->";
    for (const auto& w : g.outputs) os << ' ' << w;
    os << '\n';
  }
  list("outputs", netlist.primary_outputs);
  os << "end\n";
  return os.str();
}

namespace {

nlohmann::ordered_json logical_json(const LogicCost& c) {
  return {{"xor", c.alpha}, {"and", c.beta}, {"not", c.delta}};
}

nlohmann::ordered_json cost_json(const QuantumCost& c) {
  return c ? nlohmann::ordered_json(*c) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const MetricsReport& report) {
  nlohmann::ordered_json gates = nlohmann::ordered_json::object();
  for (const auto& [name, count] : report.gates) gates[name] = count;
  nlohmann::ordered_json j;
  j["gate_count"] = report.gate_count;
  j["gates"] = std::move(gates);
  j["quantum_cost"] = cost_json(report.quantum_cost);
  j["garbage"] = report.garbage;
  j["constants"] = report.constants;
  j["logical"] = logical_json(report.logical);
  return j;
}

nlohmann::ordered_json to_json(const ComparisonTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json j;
    j["label"] = row.label;
    j["source"] = to_string(row.source);
    j["gate_count_expr"] = row.gate_count_expr;
    j["gate_count"] = row.gate_count;
    j["garbage"] = row.garbage;
    j["claimed_garbage"] = row.claimed_garbage ? nlohmann::ordered_json(*row.claimed_garbage)
                                               : nlohmann::ordered_json(nullptr);
    j["garbage_discrepancy"] = row.garbage_discrepancy();
    j["constants"] =
        row.constants ? nlohmann::ordered_json(*row.constants) : nlohmann::ordered_json(nullptr);
    j["logical"] = logical_json(row.logical);
    j["quantum_cost"] = cost_json(row.quantum_cost);
    rows.push_back(std::move(j));
  }
  return {{"rows", std::move(rows)}};
}

}  // namespace revbcd
