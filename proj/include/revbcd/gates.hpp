#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revbcd {

/// One bit per element, each element 0 or 1. Line 0 is the first (most
/// significant) position when a vector is packed into an integer pattern.
using BitVector = std::vector<std::uint8_t>;

/// Counts of two-input EXOR (alpha), two-input AND (beta) and NOT (delta)
/// calculations needed to realize a function.
struct LogicCost {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t delta = 0;

  LogicCost& operator+=(const LogicCost& other) {
    alpha += other.alpha;
    beta += other.beta;
    delta += other.delta;
    return *this;
  }
  friend LogicCost operator+(LogicCost lhs, const LogicCost& rhs) { return lhs += rhs; }
  friend LogicCost operator*(std::uint64_t n, const LogicCost& c) {
    return {n * c.alpha, n * c.beta, n * c.delta};
  }
  friend bool operator==(const LogicCost&, const LogicCost&) = default;
};

/// Renders as e.g. "56α+21β" or "49α+21β+6δ"; zero terms are omitted.
std::string to_string(const LogicCost& cost);

/// Quantum cost; std::nullopt means unknown. Unknown absorbs under addition.
using QuantumCost = std::optional<std::uint64_t>;

QuantumCost add_costs(QuantumCost lhs, QuantumCost rhs);

class GateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public GateError {
 public:
  using GateError::GateError;
};

/// A k-line reversible gate: a permutation of the 2^k input patterns together
/// with its cost metadata. Instances are immutable once built.
class GateDefinition {
 public:
  static constexpr std::size_t kMaxArity = 8;

  /// Builds from a forward table indexed by packed input pattern. Throws
  /// GateError when the table is not a permutation of [0, 2^arity).
  GateDefinition(std::string name, std::size_t arity, std::vector<std::uint16_t> table,
                 QuantumCost quantum_cost, LogicCost logic_cost);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  const QuantumCost& quantum_cost() const { return quantum_cost_; }
  const LogicCost& logic_cost() const { return logic_cost_; }
  std::span<const std::uint16_t> table() const { return forward_; }

  std::uint16_t apply(std::uint16_t pattern) const { return forward_[pattern]; }
  std::uint16_t apply_inverse(std::uint16_t pattern) const { return inverse_[pattern]; }

  /// True iff the stored table is a bijection. Always true for a constructed
  /// gate; kept as a query so validation can state the rule explicitly.
  bool is_bijective() const;

 private:
  std::string name_;
  std::size_t arity_;
  std::vector<std::uint16_t> forward_;
  std::vector<std::uint16_t> inverse_;
  QuantumCost quantum_cost_;
  LogicCost logic_cost_;
};

using GatePtr = std::shared_ptr<const GateDefinition>;

BitVector eval_gate(const GateDefinition& gate, std::span<const std::uint8_t> in);
BitVector inverse_eval_gate(const GateDefinition& gate, std::span<const std::uint8_t> out);

/// True iff every row of the table is distinct. Throws std::invalid_argument
/// when the table does not have exactly 2^k rows of common width k.
bool check_bijective(const std::vector<BitVector>& table);

/// Packs bits (first element most significant) into an integer and back.
std::uint64_t pack_bits(std::span<const std::uint8_t> bits);
BitVector unpack_bits(std::uint64_t pattern, std::size_t width);

/// Names of the built-in gates, in a fixed order.
std::span<const std::string_view> builtin_gate_names();

/// Built-in gate by name. Throws GateError for an unknown name.
GatePtr builtin(std::string_view name);

/// Name-keyed gate table. Lookups are safe from multiple threads once
/// registration has finished.
class GateRegistry {
 public:
  GateRegistry() = default;

  /// A registry preloaded with FG, PG, TG, FRG, PFAG, HNG and HNFG.
  static GateRegistry with_builtins();

  /// Throws GateError if the name is already taken.
  void add(GatePtr gate);

  /// Validates and registers a user gate given as rows in input-pattern
  /// order. Rejects non-bijective tables, bad shapes, arity outside [1, 8],
  /// invalid identifiers and duplicate names.
  GatePtr define_custom_gate(const std::string& name, const std::vector<BitVector>& table,
                             QuantumCost quantum_cost, LogicCost logic_cost);

  GatePtr find(std::string_view name) const;
  /// Like find() but throws GateError when absent.
  GatePtr at(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, GatePtr, std::less<>> gates_;
};

/// Shared registry holding only the built-in gates.
const GateRegistry& builtin_registry();

/// Letter or underscore, then letters, digits or underscores.
bool is_identifier(std::string_view text);

}  // namespace revbcd
