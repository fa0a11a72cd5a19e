#include "revbcd/metrics.hpp"

#include <algorithm>
#include <sstream>

namespace revbcd {

MetricsReport& MetricsReport::operator+=(const MetricsReport& other) {
  gate_count += other.gate_count;
  for (const auto& [name, count] : other.gates) gates[name] += count;
  quantum_cost = add_costs(quantum_cost, other.quantum_cost);
  garbage += other.garbage;
  constants += other.constants;
  logical += other.logical;
  primary_inputs += other.primary_inputs;
  primary_outputs += other.primary_outputs;
  return *this;
}

MetricsReport analyze(const Netlist& netlist) {
  MetricsReport report;
  report.garbage = garbage_wires(netlist).size();  // validates
  report.constants = netlist.constants.size();
  report.primary_inputs = netlist.primary_inputs.size();
  report.primary_outputs = netlist.primary_outputs.size();
  for (const auto& inst : netlist.gates) {
    ++report.gate_count;
    ++report.gates[inst.gate->name()];
    report.quantum_cost = add_costs(report.quantum_cost, inst.gate->quantum_cost());
    report.logical += inst.gate->logic_cost();
  }
  return report;
}

std::string gate_count_expression(const MetricsReport& report) {
  std::vector<std::pair<std::string, std::size_t>> terms(report.gates.begin(),
                                                         report.gates.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << terms[i].second << ' ' << terms[i].first;
  }
  if (terms.empty()) os << '0';
  os << " = " << report.gate_count;
  return os.str();
}

const std::vector<LiteratureRow>& literature_table() {
  static const std::vector<LiteratureRow> rows = {
      {"This study: Design 1", "10 PFAG +4FG+1PG=15", 15, 24, {56, 21, 0}, 88},
      {"This study: Design 2", "10 PFAG+1PG +2FG+1HNFG=14", 14, 24, {56, 21, 0}, 88},
      {"BCD adder [15]", "8 HNG +2NG+ 1TG+2FG + 1HNFG=14", 14, 22, {49, 21, 6}, std::nullopt},
      {"BCD adder [16]", "19+4FG=23", 23, 22, {42, 30, 33}, std::nullopt},
      {"Conventional BCD adder plus fanout [17]", "11+5FG=16", 16, 22, {59, 30, 33},
       std::nullopt},
      {"Carry skip BCD adder plus fanout [17]", "15+7FG=22", 22, 27, {75, 48, 36},
       std::nullopt},
  };
  return rows;
}

const std::vector<PublishedClaim>& published_claims() {
  static const std::vector<PublishedClaim> claims = {
      {"4-bit parallel adder", {{"PFAG", 4}}, 8, 4, 32},
      {"This study: Design 1", {{"PFAG", 10}, {"FG", 4}, {"PG", 1}}, 24, 19, 88},
      {"This study: Design 2", {{"PFAG", 10}, {"PG", 1}, {"FG", 2}, {"HNFG", 1}}, 24, 19, 88},
  };
  return claims;
}

const PublishedClaim* find_claim(const MetricsReport& report) {
  for (const auto& claim : published_claims()) {
    if (claim.gates == report.gates) return &claim;
  }
  return nullptr;
}

const char* to_string(RowSource source) {
  return source == RowSource::kComputed ? "computed" : "paper-claimed";
}

ComparisonTable compare(const std::vector<std::pair<std::string, MetricsReport>>& reports,
                        bool include_literature) {
  ComparisonTable table;
  for (const auto& [label, report] : reports) {
    ComparisonRow row{label,
                      RowSource::kComputed,
                      gate_count_expression(report),
                      report.gate_count,
                      report.garbage,
                      std::nullopt,
                      report.constants,
                      report.logical,
                      report.quantum_cost};
    if (const auto* claim = find_claim(report)) row.claimed_garbage = claim->garbage;
    table.rows.push_back(std::move(row));
  }
  if (include_literature) {
    for (const auto& lit : literature_table()) {
      table.rows.push_back({lit.label, RowSource::kPaperClaimed, lit.gate_count_expr,
                            lit.gate_count, lit.garbage, std::nullopt, std::nullopt, lit.logical,
                            lit.quantum_cost});
    }
  }
  return table;
}

namespace {

// Terminal columns: count code points, not bytes (α, β, δ are two bytes).
std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const auto w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string render_cost(const QuantumCost& cost) {
  return cost ? std::to_string(*cost) : "Unknown";
}

}  // namespace

std::string render_text(const ComparisonTable& table) {
  std::vector<std::vector<std::string>> cells = {{"Design", "Source", "Gate Count", "Garbage",
                                                  "Constants", "Logical Calculations",
                                                  "Quantum Cost"}};
  bool any_discrepancy = false;
  for (const auto& row : table.rows) {
    std::string garbage = std::to_string(row.garbage);
    if (row.garbage_discrepancy()) {
      garbage += " (paper-claimed " + std::to_string(*row.claimed_garbage) + ") *";
      any_discrepancy = true;
    }
    cells.push_back({row.label, to_string(row.source), row.gate_count_expr, garbage,
                     row.constants ? std::to_string(*row.constants) : "-",
                     to_string(row.logical), render_cost(row.quantum_cost)});
  }
  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], display_width(line[c]));
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c) line += " | ";
      line += c + 1 == cells[r].size() ? cells[r][c] : pad(cells[r][c], widths[c]);
    }
    os << line << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (auto w : widths) total += w;
      os << std::string(total + 3 * (widths.size() - 1), '-') << '\n';
    }
  }
  if (any_discrepancy) {
    os << "* computed garbage differs from the published figure "
          "(computed = inputs + constants - primary outputs)\n";
  }
  return os.str();
}

}  // namespace revbcd
