#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "revbcd/gates.hpp"
#include "revbcd/netlist.hpp"

namespace revbcd {

struct MetricsReport {
  std::size_t gate_count = 0;
  std::map<std::string, std::size_t> gates;  // by gate name
  QuantumCost quantum_cost = 0;
  std::size_t garbage = 0;
  std::size_t constants = 0;
  LogicCost logical;
  std::size_t primary_inputs = 0;
  std::size_t primary_outputs = 0;

  /// Componentwise sum; unknown quantum cost absorbs.
  MetricsReport& operator+=(const MetricsReport& other);
  friend MetricsReport operator+(MetricsReport lhs, const MetricsReport& rhs) {
    return lhs += rhs;
  }
  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Throws ValidationError for an invalid netlist.
MetricsReport analyze(const Netlist& netlist);

/// "10 PFAG + 4 FG + 1 PG = 15" style rendering, largest count first.
std::string gate_count_expression(const MetricsReport& report);

/// One row of the published BCD adder comparison, stored as printed.
struct LiteratureRow {
  std::string label;
  std::string gate_count_expr;
  std::size_t gate_count;
  std::size_t garbage;
  LogicCost logical;
  QuantumCost quantum_cost;  // nullopt renders as "Unknown"
};

const std::vector<LiteratureRow>& literature_table();

/// Published figures for a design this toolkit can rebuild, keyed by its
/// exact gate multiset.
struct PublishedClaim {
  std::string label;
  std::map<std::string, std::size_t> gates;
  std::size_t garbage;
  std::optional<std::size_t> constants;
  QuantumCost quantum_cost;
};

const std::vector<PublishedClaim>& published_claims();
const PublishedClaim* find_claim(const MetricsReport& report);

enum class RowSource { kComputed, kPaperClaimed };

const char* to_string(RowSource source);

struct ComparisonRow {
  std::string label;
  RowSource source;
  std::string gate_count_expr;
  std::size_t gate_count;
  std::size_t garbage;
  std::optional<std::size_t> claimed_garbage;  // set for computed rows with a published figure
  std::optional<std::size_t> constants;
  LogicCost logical;
  QuantumCost quantum_cost;

  /// Computed garbage differs from the published figure.
  bool garbage_discrepancy() const { return claimed_garbage && *claimed_garbage != garbage; }
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

ComparisonTable compare(const std::vector<std::pair<std::string, MetricsReport>>& reports,
                        bool include_literature);

std::string render_text(const ComparisonTable& table);

}  // namespace revbcd
