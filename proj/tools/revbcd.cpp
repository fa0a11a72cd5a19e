// Command-line front end: validate, simulate, measure and build reversible
// netlists. Exit codes: 0 success, 1 validation/equivalence failure,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "revbcd/adder_checks.hpp"
#include "revbcd/builders.hpp"
#include "revbcd/metrics.hpp"
#include "revbcd/simulator.hpp"
#include "revbcd/textio.hpp"

namespace {

using namespace revbcd;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Netlist load(const std::string& path) {
  try {
    return parse_netlist(read_file(path));
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << path << ": " << to_string(d) << '\n';
    throw;
  }
}

BitVector parse_bits(const std::string& text, std::size_t width, const char* what) {
  BitVector bits;
  for (char c : text) {
    if (c == '_') continue;
    if (c != '0' && c != '1') throw UsageError(std::string(what) + " must contain only 0/1");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  if (bits.size() != width) {
    throw UsageError(std::string(what) + " has " + std::to_string(bits.size()) +
                     " bits, circuit expects " + std::to_string(width));
  }
  return bits;
}

std::string bits_string(const BitVector& bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

int cmd_validate(const std::string& path) {
  Netlist net;
  try {
    net = parse_netlist(read_file(path));
  } catch (const ParseError& e) {
    bool structural = true;
    for (const auto& d : e.diagnostics()) {
      std::cout << path << ": " << to_string(d) << '\n';
      structural = structural && d.structural;
    }
    return structural ? kFailure : kUsage;
  }
  const auto report = validate(net);
  for (const auto& v : report.warnings()) std::cout << "warning: " << v.message << '\n';
  std::cout << "ok: " << net.name << " (" << net.gates.size() << " gates, "
            << net.primary_inputs.size() << " inputs, " << net.constants.size()
            << " constants, " << net.primary_outputs.size() << " outputs)\n";
  return kOk;
}

int cmd_sim(const std::string& path, const std::optional<std::string>& in, bool exhaustive,
            bool show_garbage, std::size_t max_inputs) {
  const Simulator sim(load(path));
  const auto& net = sim.netlist();
  if (in) {
    const auto lines = sim.forward(parse_bits(*in, net.primary_inputs.size(), "--in"));
    std::cout << "inputs  " << join(net.primary_inputs) << '\n';
    std::cout << "outputs " << join(net.primary_outputs) << '\n';
    std::cout << bits_string(sim.primary_bits(lines)) << '\n';
    if (show_garbage) {
      std::cout << "garbage " << join(sim.garbage()) << '\n';
      std::cout << bits_string(sim.garbage_bits(lines)) << '\n';
    }
    return kOk;
  }
  if (!exhaustive) throw UsageError("sim needs --in BITSTRING or --exhaustive");
  std::cout << "# inputs: " << join(net.primary_inputs) << '\n';
  std::cout << "# outputs: " << join(net.primary_outputs) << '\n';
  if (show_garbage) std::cout << "# garbage: " << join(sim.garbage()) << '\n';
  const auto width = net.primary_inputs.size();
  for_each_pattern(sim, max_inputs, [&](const TruthRow& row) {
    std::cout << bits_string(unpack_bits(row.input, width)) << ' ' << bits_string(row.primary);
    if (show_garbage) std::cout << ' ' << bits_string(row.garbage);
    std::cout << '\n';
  });
  return kOk;
}

int cmd_inverse(const std::string& path, const std::string& out) {
  const Simulator sim(load(path));
  const auto& net = sim.netlist();
  const auto sources = sim.backward(parse_bits(out, sim.terminal_wires().size(), "--out"));
  const auto n_in = net.primary_inputs.size();
  std::cout << "inputs    " << join(net.primary_inputs) << '\n';
  std::cout << bits_string(BitVector(sources.begin(), sources.begin() + static_cast<long>(n_in)))
            << '\n';
  std::vector<std::string> const_names;
  for (const auto& c : net.constants) const_names.push_back(c.wire);
  std::cout << "constants " << join(const_names) << '\n';
  std::cout << bits_string(BitVector(sources.begin() + static_cast<long>(n_in), sources.end()))
            << '\n';
  for (std::size_t i = 0; i < net.constants.size(); ++i) {
    if (sources[n_in + i] != net.constants[i].value) {
      std::cout << "note: constant " << net.constants[i].wire << " recovered as "
                << static_cast<int>(sources[n_in + i]) << ", declared "
                << static_cast<int>(net.constants[i].value) << '\n';
    }
  }
  return kOk;
}

int cmd_metrics(const std::string& path, bool json) {
  const auto report = analyze(load(path));
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
    return kOk;
  }
  std::cout << "gates         " << gate_count_expression(report) << '\n'
            << "quantum cost  "
            << (report.quantum_cost ? std::to_string(*report.quantum_cost) : "unknown") << '\n'
            << "garbage       " << report.garbage << '\n'
            << "constants     " << report.constants << '\n'
            << "logical       " << to_string(report.logical) << '\n';
  return kOk;
}

std::size_t chain_digits(const std::vector<std::string>& kind) {
  if (kind.size() != 2) throw UsageError("bcd-chain needs a digit count");
  try {
    std::size_t used = 0;
    const auto n = std::stoul(kind[1], &used);
    if (used != kind[1].size() || n < 1) throw std::invalid_argument("digits");
    return n;
  } catch (const std::logic_error&) {
    throw UsageError("invalid digit count '" + kind[1] + "'");
  }
}

int cmd_build(const std::vector<std::string>& kind, const std::string& carry_in,
              const std::string& output) {
  Netlist net;
  if (kind.size() == 1 && kind[0] == "ripple4") {
    net = build_ripple_adder();
  } else if (kind.size() == 1 && (kind[0] == "bcd1" || kind[0] == "bcd2")) {
    BuildOptions opts;
    opts.carry_in = carry_in == "const" ? CarryIn::kConstantZero : CarryIn::kPrimary;
    net = build_bcd_adder(kind[0] == "bcd1" ? BcdDesign::kFeynmanCopiers : BcdDesign::kHnfgCopiers,
                          opts);
  } else if (!kind.empty() && kind[0] == "bcd-chain") {
    net = build_bcd_chain(chain_digits(kind));
  } else {
    throw UsageError("unknown design; expected ripple4, bcd1, bcd2 or bcd-chain N");
  }
  const auto text = serialize_netlist(net);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + output);
    out << text;
  }
  return kOk;
}

int cmd_check_adder(const std::string& path, const std::vector<std::string>& kind,
                    std::size_t max_inputs) {
  const auto net = load(path);
  const auto n_in = net.primary_inputs.size();
  AdderSpec spec;
  if (kind.size() == 1 && kind[0] == "ripple4") {
    spec = binary_adder_spec(4, n_in % 2 == 1);
  } else if (kind.size() == 1 && kind[0] == "bcd") {
    spec = bcd_adder_spec(1, n_in % 2 == 1);
  } else if (!kind.empty() && kind[0] == "bcd-chain") {
    spec = bcd_adder_spec(chain_digits(kind), n_in % 2 == 1);
  } else {
    throw UsageError("unknown adder kind; expected ripple4, bcd or bcd-chain N");
  }
  if (n_in != spec.input_width || net.primary_outputs.size() != spec.output_width) {
    std::cout << "port mismatch: expected " << spec.input_width << " inputs and "
              << spec.output_width << " outputs, circuit has " << n_in << " and "
              << net.primary_outputs.size() << '\n';
    return kFailure;
  }
  EquivalenceOptions opts;
  opts.input_limit = max_inputs;
  const auto result = check_equivalence(net, spec.oracle, spec.domain, opts);
  for (const auto& cex : result.counterexamples) {
    std::cout << "counterexample: in " << bits_string(unpack_bits(cex.input, n_in))
              << " expected " << bits_string(unpack_bits(cex.expected, spec.output_width))
              << " got " << bits_string(unpack_bits(cex.actual, spec.output_width)) << '\n';
  }
  std::cout << (result.ok() ? "ok" : "FAIL") << ": " << result.checked << " patterns checked, "
            << result.mismatches << " mismatches\n";
  return result.ok() ? kOk : kFailure;
}

int cmd_compare(const std::vector<std::string>& files, bool with_literature, bool json) {
  std::vector<std::pair<std::string, MetricsReport>> reports;
  for (const auto& f : files) {
    auto net = load(f);
    reports.emplace_back(net.name, analyze(net));
  }
  const auto table = compare(reports, with_literature);
  if (json) {
    std::cout << to_json(table).dump(2) << '\n';
  } else {
    std::cout << render_text(table);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible netlist toolkit: validation, simulation, cost metrics, BCD adders"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> files;
  std::optional<std::string> in_bits;
  std::string out_bits;
  bool exhaustive = false;
  bool show_garbage = false;
  bool json = false;
  bool with_literature = false;
  std::size_t max_inputs = kDefaultInputLimit;
  std::vector<std::string> kind;
  std::string carry_in = "primary";
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check structural rules and report violations");
  validate_cmd->add_option("FILE", file, "netlist file")->required();

  auto* sim_cmd = app.add_subcommand("sim", "Forward simulation");
  sim_cmd->add_option("FILE", file, "netlist file")->required();
  auto* in_opt = sim_cmd->add_option("--in", in_bits, "primary input bits in declaration order");
  auto* ex_opt = sim_cmd->add_flag("--exhaustive", exhaustive, "print the full truth table");
  in_opt->excludes(ex_opt);
  sim_cmd->add_flag("--show-garbage", show_garbage, "also print garbage lines");
  sim_cmd->add_option("--max-inputs", max_inputs, "input count limit for --exhaustive");

  auto* inv_cmd = app.add_subcommand("inverse", "Inverse simulation from all terminal lines");
  inv_cmd->add_option("FILE", file, "netlist file")->required();
  inv_cmd->add_option("--out", out_bits, "primary output bits then garbage bits")->required();

  auto* metrics_cmd = app.add_subcommand("metrics", "Gate count, quantum cost, garbage, constants");
  metrics_cmd->add_option("FILE", file, "netlist file")->required();
  metrics_cmd->add_flag("--json", json, "emit JSON");

  auto* build_cmd = app.add_subcommand("build", "Emit a generated netlist");
  build_cmd->add_option("DESIGN", kind, "ripple4 | bcd1 | bcd2 | bcd-chain N")
      ->required()
      ->expected(1, 2);
  build_cmd->add_option("--carry-in", carry_in, "BCD carry-in mode")
      ->check(CLI::IsMember({"primary", "const"}));
  build_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check-adder", "Exhaustive comparison against arithmetic");
  check_cmd->add_option("FILE", file, "netlist file")->required();
  check_cmd->add_option("--kind", kind, "ripple4 | bcd | bcd-chain N")->required()->expected(1, 2);
  check_cmd->add_option("--max-inputs", max_inputs, "input count limit");

  auto* compare_cmd = app.add_subcommand("compare", "Tabulate metrics against published figures");
  compare_cmd->add_option("FILE", files, "netlist files");
  compare_cmd->add_flag("--with-literature", with_literature, "append the published table");
  compare_cmd->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (sim_cmd->parsed()) {
      return cmd_sim(file, in_bits, exhaustive, show_garbage, max_inputs);
    }
    if (inv_cmd->parsed()) return cmd_inverse(file, out_bits);
    if (metrics_cmd->parsed()) return cmd_metrics(file, json);
    if (build_cmd->parsed()) return cmd_build(kind, carry_in, output);
    if (check_cmd->parsed()) return cmd_check_adder(file, kind, max_inputs);
    if (compare_cmd->parsed()) return cmd_compare(files, with_literature, json);
  } catch (const ParseError&) {
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SimulationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
